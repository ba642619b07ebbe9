#pragma once

#include <string>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);
  RatPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static RatPoly x();
  /// c·x^k
  static RatPoly monomial(unsigned k, const Rational& c = 1);
  /// (x + shift)^k / k!
  static RatPoly shifted_monomial(unsigned k, const Rational& shift);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
  Rational leading() const { return coeffs_.empty() ? Rational{} : coeffs_.back(); }

  /// Horner evaluation.
  Rational eval(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly derivative(unsigned order) const;
  /// x ↦ p(a·x + b)
  RatPoly compose_affine(const Rational& a, const Rational& b) const;

  /// Human-readable form, e.g. "1/2*x^2 - 1/12".
  std::string to_string() const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& s, const RatPoly& p);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hermite

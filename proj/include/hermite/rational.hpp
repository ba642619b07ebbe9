#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace hermite {

/// Exact rational number in canonical form (gcd 1, positive denominator).
///
/// Thin value wrapper over GMP's `mpq_class`. Every constructor and
/// operation canonicalizes, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);

  explicit Rational(const mpz_class& n) : value_(n) {}
  explicit Rational(mpq_class q);

  /// Parses `p/q` or `p` with an optional leading `-`; no whitespace.
  static Rational parse(std::string_view text);

  /// 2^e for any integer e.
  static Rational pow2(long e);

  const mpq_class& gmp() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  int sign() const noexcept { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational pow(long e) const;
  double to_double() const { return value_.get_d(); }

  /// Canonical text: "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Locale-independent decimal rendering rounded to `digits` significant
  /// digits (half away from zero), trailing zeros removed, no exponent.
  std::string to_decimal(int digits = 17) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

enum class ArithOp { add, sub, mul, div };

/// Binary arithmetic dispatch; `div` by zero throws DomainError.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

Rational factorial(unsigned n);

}  // namespace hermite

#include "hermite/poly.hpp"

#include <algorithm>

namespace hermite {

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RatPoly::RatPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

RatPoly RatPoly::x() { return monomial(1); }

RatPoly RatPoly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> cs(k + 1);
  cs[k] = c;
  return RatPoly(std::move(cs));
}

RatPoly RatPoly::shifted_monomial(unsigned k, const Rational& shift) {
  return monomial(k, Rational(1) / factorial(k)).compose_affine(1, shift);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::derivative(unsigned order) const {
  RatPoly p = *this;
  for (unsigned i = 0; i < order && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

RatPoly RatPoly::compose_affine(const Rational& a, const Rational& b) const {
  const RatPoly inner(std::vector<Rational>{b, a});
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + RatPoly(*it);
  return acc;
}

std::string RatPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

RatPoly RatPoly::operator-() const { return Rational(-1) * *this; }

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly operator*(const Rational& s, const RatPoly& p) {
  std::vector<Rational> r = p.coeffs_;
  for (auto& c : r) c *= s;
  return RatPoly(std::move(r));
}

}  // namespace hermite

#include "hermite/rational.hpp"

#include <cctype>
#include <string>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, 1) / mpq_class(den, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
  if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", "");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", "");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(mpq_class(mpz_class(1), p));
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(-e);
  }
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.value_.canonicalize();
  return r;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  const mpq_class mag = ::abs(value_);

  // Decimal exponent e with 10^e <= |r| < 10^(e+1).
  long e = static_cast<long>(mag.get_num().get_str().size()) -
           static_cast<long>(mag.get_den().get_str().size());
  auto scaled = [&](long exp) {
    mpq_class s = mag;
    if (exp >= 0) s *= pow10(static_cast<unsigned long>(exp));
    else s /= pow10(static_cast<unsigned long>(-exp));
    return s;
  };
  while (scaled(-e) >= 10) ++e;
  while (scaled(-e) < 1) --e;

  mpq_class s = scaled(digits - 1 - e) + mpq_class(1, 2);
  mpz_class n = s.get_num() / s.get_den();
  if (n == pow10(static_cast<unsigned long>(digits))) {
    n /= 10;
    ++e;
  }
  std::string mant = n.get_str();
  std::string out;
  if (e >= digits - 1) {
    out = mant + std::string(static_cast<std::size_t>(e - digits + 1), '0');
  } else if (e >= 0) {
    out = mant.substr(0, static_cast<std::size_t>(e + 1)) + "." + mant.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign() < 0 ? "-" + out : out;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace hermite

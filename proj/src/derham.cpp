#include "hermite/derham.hpp"

#include "hermite/errors.hpp"
#include "hermite/operator.hpp"
#include "hermite/spectral.hpp"

namespace hermite {

Mask derham(const Mask& mask) {
  if (mask.is_zero()) return mask;
  const Mask square = conv2(mask, mask);
  if (square.is_zero()) return Mask::zero(mask.d());
  const RatMatrix dinv = RatMatrix::diagonal([&] {
    RatVector diag(mask.dim());
    for (std::size_t m = 0; m < diag.size(); ++m) diag[m] = Rational::pow2(static_cast<long>(m));
    return diag;
  }());
  const long lo = ceil_div(square.support_min() - 1, 2);
  const long hi = floor_div(square.support_max() - 1, 2);
  std::vector<RatMatrix> out;
  for (long j = lo; j <= hi; ++j) out.push_back(dinv * square.at(2 * j + 1));
  return Mask(mask.d(), lo, std::move(out));
}

std::pair<Rational, Rational> lambda_mu(unsigned k, unsigned m, const Rational& tau) {
  if (m >= k) throw DomainError("lambda_mu requires m < k");
  const Rational base = (Rational(1) - tau).pow(k - m) / factorial(k - m);
  const Rational lambda = (Rational::pow2(k) - Rational::pow2(m)) * base;
  const Rational mu = -Rational::pow2(static_cast<long>(m) - static_cast<long>(k)) * base;
  return {lambda, mu};
}

Rational derham_tau(const Rational& tau) { return (Rational(3) * tau - 1) / 2; }

std::vector<RatPoly> derham_spectral_recursion(const std::vector<RatPoly>& p_list,
                                               std::vector<DeRhamCoefficients>* coefficients) {
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    const auto& p = p_list[k];
    if (p.degree() != static_cast<int>(k) || p.leading() != Rational(1) / factorial(static_cast<unsigned>(k))) {
      throw DomainError("input polynomial " + std::to_string(k) + " is not of degree k with leading coefficient 1/k!");
    }
  }
  if (coefficients != nullptr) coefficients->clear();
  std::vector<RatPoly> bar;
  if (p_list.empty()) return bar;
  if (p_list.front() != RatPoly(1)) throw DomainError("p_0 must be the constant 1");
  bar.push_back(p_list.front());

  for (unsigned k = 1; k < p_list.size(); ++k) {
    const RatPoly& pk = p_list[k];
    RatPoly rest = pk.compose_affine(2, 1) - Rational::pow2(k) * pk;

    // Back-substitution in the triangular basis p̄_{k-1}, …, p̄_0 (leading 1/m!).
    DeRhamCoefficients step;
    step.k = k;
    step.lambda.assign(k, Rational{});
    for (unsigned m = k; m-- > 0;) {
      const Rational lam = rest.coeff(m) * factorial(m);
      step.lambda[m] = lam;
      rest -= lam * bar[m];
    }
    if (!rest.is_zero()) throw DomainError("expansion in the p̄ basis left a remainder");

    RatPoly next = pk;
    step.mu.resize(k);
    for (unsigned m = 0; m < k; ++m) {
      step.mu[m] = -step.lambda[m] * Rational::pow2(static_cast<long>(m) - static_cast<long>(k)) /
                   (Rational::pow2(k) - Rational::pow2(m));
      next += step.mu[m] * bar[m];
    }
    bar.push_back(std::move(next));
    if (coefficients != nullptr) coefficients->push_back(std::move(step));
  }
  return bar;
}

bool verify_lemma3(const Mask& mask, const Rational& tau, unsigned ell) {
  if (!check_shifted_monomial(mask, tau, ell)) {
    throw HypothesisError("mask does not reproduce polynomials of degree " + std::to_string(ell) +
                          " with parametrization " + tau.to_string());
  }
  return check_shifted_monomial(derham(mask), derham_tau(tau), ell);
}

}  // namespace hermite

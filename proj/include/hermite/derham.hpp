#pragma once

#include <utility>
#include <vector>

#include "hermite/mask.hpp"
#include "hermite/poly.hpp"

namespace hermite {

/// Ā_j = D^{-1} (A ∗₂ A)_{2j+1}. May be the zero mask.
Mask derham(const Mask& mask);

/// Closed-form (λ_{k,m}, μ_{k,m}) for shifted-monomial spectral
/// polynomials with parameter τ:
///   λ = (2^k - 2^m)/(k-m)! · (1-τ)^{k-m},  μ = -2^{m-k}/(k-m)! · (1-τ)^{k-m}.
/// Requires m < k.
std::pair<Rational, Rational> lambda_mu(unsigned k, unsigned m, const Rational& tau);

/// λ/μ coefficients of one recursion step (index m = 0 … k-1).
struct DeRhamCoefficients {
  unsigned k = 0;
  std::vector<Rational> lambda;
  std::vector<Rational> mu;
};

/// Spectral polynomials of the de Rham transform from those of the mask:
/// p̄_0 = 1 and p̄_k = p_k + Σ_{m<k} μ_{k,m} p̄_m, where λ_{k,m} expands
/// p_k(2x+1) - 2^k p_k(x) in the basis p̄_0 … p̄_{k-1}.
/// `coefficients`, when given, receives one entry per k ≥ 1.
std::vector<RatPoly> derham_spectral_recursion(const std::vector<RatPoly>& p_list,
                                               std::vector<DeRhamCoefficients>* coefficients = nullptr);

/// (3τ - 1)/2
Rational derham_tau(const Rational& tau);

/// Whether derham(mask) reproduces Π_ℓ with respect to (3τ-1)/2.
/// Throws HypothesisError when the mask itself does not reproduce Π_ℓ w.r.t. τ.
bool verify_lemma3(const Mask& mask, const Rational& tau, unsigned ell);

}  // namespace hermite

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hermite/index_range.hpp"
#include "hermite/mask.hpp"
#include "hermite/poly.hpp"

namespace hermite {

/// d+1 polynomials in the sequence index; component m is j ↦ (·)_m.
/// `jet(p, d)` builds j ↦ [p(j), p'(j), …, p^(d)(j)].
struct PolyVector {
  std::vector<RatPoly> components;

  static PolyVector jet(const RatPoly& p, unsigned d);
  RatVector eval(const Rational& j) const;
  friend bool operator==(const PolyVector&, const PolyVector&) = default;
};

/// For ε = 0, 1 the polynomial vector j ↦ (S_A v_p)_{2j+ε}
/// = Σ_i A_{2i+ε} [p(j-i), …, p^(d)(j-i)].
std::array<PolyVector, 2> apply_symbolic(const Mask& mask, const RatPoly& p);

/// S_A v_p = 2^{-k} v_p, decided coefficientwise per parity.
/// Throws DomainError unless deg p = k with leading coefficient 1/k!.
bool check_spectral(const Mask& mask, const RatPoly& p, unsigned k);

struct DegreeSolution {
  unsigned k = 0;
  bool solved = false;
  /// x^k/k! plus lower coefficients, free variables set to zero.
  std::optional<RatPoly> particular;
  /// Polynomials of degree < k that can be added to `particular`.
  std::vector<RatPoly> homogeneous;

  std::size_t homogeneous_dim() const noexcept { return homogeneous.size(); }
};

/// Solves S_A v_p = 2^{-k} v_p for p = x^k/k! + Σ_{i<k} c_i x^i.
DegreeSolution solve_spectral(const Mask& mask, unsigned k);

struct SpectralReport {
  /// Degrees 0, 1, … up to and including the first infeasible one.
  std::vector<DegreeSolution> degrees;
  /// Largest K with every k ≤ K solvable; -1 when k = 0 fails.
  int order = -1;

  /// Particular solutions for k = 0 … order.
  std::vector<RatPoly> polynomials() const;
};

SpectralReport spectral_order(const Mask& mask, unsigned k_max);

/// Spectral condition with p_k = (x+τ)^k/k!, k = 0 … ℓ; equivalent to
/// reproduction of Π_ℓ with parametrization τ.
bool check_shifted_monomial(const Mask& mask, const Rational& tau, unsigned ell);

/// Largest ℓ ≤ ℓ_max with check_shifted_monomial true; nullopt if ℓ = 0 fails.
std::optional<unsigned> reproduction_order(const Mask& mask, const Rational& tau, unsigned ell_max);

/// τ from a unique degree-one spectral polynomial x + τ.
std::optional<Rational> infer_tau(const Mask& mask);

/// Mask on `support` satisfying check_shifted_monomial(·, tau, ell): the
/// canonical particular solution (free entries zero) of the linear
/// constraints on the mask entries. Throws InfeasibleError if none exists.
Mask synthesize_mask(unsigned d, const Rational& tau, unsigned ell, const IndexRange& support);

}  // namespace hermite

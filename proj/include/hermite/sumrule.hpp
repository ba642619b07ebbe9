#pragma once

#include <optional>
#include <vector>

#include "hermite/mask.hpp"
#include "hermite/series.hpp"

namespace hermite {

/// Moments ν_0 … ν_ℓ of the sum-rule sequence, normalized so that
/// ν_j = σ^j e_j for j ≤ d.
struct MomentWitness {
  unsigned d = 1;
  unsigned ell = 0;
  int sigma = -1;
  std::vector<RatVector> nu;
};

/// ½ Σ_s M_s t^s / s! (frequency 0) or ½ Σ_s N_s t^s / s! (frequency π), up to t^order.
MatrixSeries symbol_series(const Mask& mask, unsigned order, bool at_pi);

/// Y(c·t) = Σ_s c^s ν_s t^s as a series of (d+1)×1 columns.
MatrixSeries moment_series(const MomentWitness& w, const Rational& scale = 1);

/// Special sum rule of order ℓ with sign σ = ±1: finds ν_{d+1} … ν_ℓ with
///   A_0(t) Y(2t) ≡ Y(t) and A_π(t) Y(2t) ≡ 0  (mod t^{ℓ+1})
/// as one joint exact linear system. Throws DomainError if ℓ < d or σ ∉ {±1}.
std::optional<MomentWitness> sumrule_feasible(const Mask& mask, unsigned ell, int sigma);

/// Both series identities re-checked on a witness with series_mul.
bool witness_satisfies(const Mask& mask, const MomentWitness& w);

struct SumRuleOrder {
  /// Largest feasible ℓ ≤ ℓ_max; d - 1 when even ℓ = d fails.
  int order = -1;
  /// Sign achieving `order` (-1 preferred on ties).
  int sigma = -1;
  std::optional<MomentWitness> witness;

  bool below_minimal(unsigned d) const noexcept { return order < static_cast<int>(d); }
};

SumRuleOrder sumrule_order(const Mask& mask, unsigned ell_max);

struct Lemma4Report {
  bool spectral_minimal = false;
  bool sumrule_minimal = false;
  bool consistent = false;
};

/// (spectral order ≥ d) compared with (sum rule feasible at ℓ = d, either sign).
Lemma4Report lemma4_crosscheck(const Mask& mask);

}  // namespace hermite

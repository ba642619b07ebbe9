#pragma once

#include <string>
#include <vector>

#include "hermite/index_range.hpp"
#include "hermite/mask.hpp"
#include "hermite/poly.hpp"

namespace hermite {

/// Sequence of (d+1)-vectors stored on [offset, offset + values.size() - 1].
///
/// Two readings are supported and chosen by the caller through `Extension`:
/// a finitely supported sequence (zero outside the stored range), or a
/// window of known values of some longer sequence.
class HermiteSequence {
 public:
  explicit HermiteSequence(unsigned d) : d_(d) {}
  HermiteSequence(unsigned d, long offset, std::vector<RatVector> values);

  /// Unit vector e_component at `index`.
  static HermiteSequence delta(unsigned d, long index, unsigned component = 0);

  unsigned d() const noexcept { return d_; }
  long offset() const noexcept { return offset_; }
  const std::vector<RatVector>& values() const noexcept { return values_; }
  IndexRange range() const noexcept { return {offset_, offset_ + static_cast<long>(values_.size()) - 1}; }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at j; zero vector outside the stored range.
  RatVector at(long j) const;
  /// Values restricted to `r` (zero-filled where not stored).
  HermiteSequence restrict(const IndexRange& r) const;
  /// Drops leading/trailing zero vectors.
  HermiteSequence trimmed() const;
  HermiteSequence scaled(const Rational& s) const;
  /// Entry j ↦ D^{-n}·c_j, i.e. component m multiplied by 2^{mn}.
  HermiteSequence dilated(long n) const;
  /// Entry j ↦ c_{j - by}.
  HermiteSequence shifted(long by) const;

  friend HermiteSequence operator+(const HermiteSequence& a, const HermiteSequence& b);
  friend HermiteSequence operator-(const HermiteSequence& a, const HermiteSequence& b);
  /// Equality as finitely supported sequences.
  friend bool operator==(const HermiteSequence& a, const HermiteSequence& b);

 private:
  unsigned d_ = 1;
  long offset_ = 0;
  std::vector<RatVector> values_;
};

enum class Extension {
  /// Data is zero outside its stored range; every output is exact.
  zero,
  /// Data is only known on its stored range; outputs are restricted to
  /// indices computed from known inputs alone.
  truncated,
};

/// (S_A c)_j = Σ_k A_{j-2k} c_k on the full output support, trimmed.
HermiteSequence apply(const Mask& mask, const HermiteSequence& c);

/// (S_A c)_j for j in `out`, treating c as zero outside its range.
HermiteSequence apply_on(const Mask& mask, const HermiteSequence& c, const IndexRange& out);

/// Output indices whose value only involves inputs in `known`, after n steps.
IndexRange forward_window(const Mask& mask, const IndexRange& known, unsigned n);

/// Smallest input interval from which every entry of `target` is exact after n steps.
IndexRange pullback_window(const Mask& mask, const IndexRange& target, unsigned n);

/// (B ∗₂ C)_j = Σ_m B_{j-2m} C_m
Mask conv2(const Mask& b, const Mask& c);

struct IterateFrame {
  unsigned level = 0;
  HermiteSequence sequence{1};
  Rational tau;

  /// 2^{-level}(j + tau)
  Rational abscissa(long j) const;
};

/// c^[n] = D^{-n} S_A^n c^[0].
IterateFrame hermite_iterate(const Mask& mask, const HermiteSequence& c0, unsigned n, const Rational& tau,
                             Extension ext = Extension::zero);

/// Entry j = [p(j+τ), p'(j+τ), …, p^(d)(j+τ)] on `window`.
HermiteSequence sample_hermite(const RatPoly& p, unsigned d, const Rational& tau, const IndexRange& window);

struct SampleRow {
  Rational x;
  RatVector value;
};

/// Level-`levels` iterate as (abscissa, value) rows. For Extension::zero
/// the rows cover the support-arithmetic window (zeros included); for
/// Extension::truncated only exactly computable indices are emitted.
/// Throws InfeasibleError when that window is empty.
std::vector<SampleRow> limit_samples(const Mask& mask, const HermiteSequence& initial, unsigned levels,
                                     const Rational& tau, Extension ext = Extension::zero);

/// max_j |c^[n+1]_{2j} - c^[n]_j|_∞ for n = 1 … levels-1 over the indices
/// where both levels are exact. Heuristic only.
std::vector<Rational> convergence_probe(const Mask& mask, const HermiteSequence& initial, unsigned levels,
                                        Extension ext = Extension::zero);

/// CSV with header `x,c0,...,cd`, decimals rendered to `digits` significant digits.
std::string samples_to_csv(const std::vector<SampleRow>& rows, unsigned d, int digits = 17);

/// CSV with header `level,deviation`.
std::string probe_to_csv(const std::vector<Rational>& deviations, int digits = 17);

}  // namespace hermite

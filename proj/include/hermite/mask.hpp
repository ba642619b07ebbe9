#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hermite/index_range.hpp"
#include "hermite/matrix.hpp"

namespace hermite {

/// Finitely supported sequence of (d+1)×(d+1) rational matrices A_j,
/// stored tight: coefficients()[i] is A_{support_min + i}, and the first
/// and last stored matrices are nonzero. The zero mask stores nothing.
class Mask {
 public:
  /// Validates shapes and trims leading/trailing zero matrices.
  Mask(unsigned d, long support_min, std::vector<RatMatrix> coefficients);

  static Mask zero(unsigned d);

  unsigned d() const noexcept { return d_; }
  std::size_t dim() const noexcept { return d_ + 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  long support_min() const noexcept { return support_min_; }
  long support_max() const noexcept { return support_min_ + static_cast<long>(coeffs_.size()) - 1; }
  IndexRange support() const noexcept { return {support_min(), support_max()}; }

  const std::vector<RatMatrix>& coefficients() const noexcept { return coeffs_; }
  /// A_j, or the zero matrix outside the support.
  const RatMatrix& at(long j) const;

  /// The mask j ↦ A_{-j}.
  Mask reflected() const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  unsigned d_ = 1;
  long support_min_ = 0;
  std::vector<RatMatrix> coeffs_;
  RatMatrix zero_;
};

/// diag(1, 2^-1, …, 2^-d)
RatMatrix dilation_matrix(unsigned d);

/// Σ_{n ≡ parity (mod 2)} n^r A_n
RatMatrix parity_moment(const Mask& mask, unsigned r, int parity);
/// Σ_n n^r A_n
RatMatrix moment(const Mask& mask, unsigned r);
/// Σ_n (-1)^n n^r A_n
RatMatrix alt_moment(const Mask& mask, unsigned r);

/// A_0 = D and A_{2j} = 0 for j ≠ 0.
bool is_interpolatory(const Mask& mask);

/// A_{-j} = E A_j E with E = diag(1, -1, 1, …).
bool is_mirror_symmetric(const Mask& mask);

/// Parses the JSON mask format; throws ParseError naming the offending location.
Mask parse_mask(std::string_view text);

/// Canonical JSON: {"d": D, "support_min": L, "coefficients": [...]} with
/// rationals in canonical "p/q" text, followed by a newline.
std::string serialize_mask(const Mask& mask);

std::vector<std::string> catalog_names();
/// Built-in masks by name; throws DomainError listing the valid names.
Mask catalog(std::string_view name);

}  // namespace hermite

#pragma once

#include <cstddef>
#include <vector>

#include "hermite/matrix.hpp"

namespace hermite {

/// Truncated power series Σ_{s≤order} C_s t^s with matrix coefficients.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  explicit MatrixSeries(std::vector<RatMatrix> coefficients);

  std::size_t order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t rows() const noexcept { return coeffs_.empty() ? 0 : coeffs_.front().rows(); }
  std::size_t cols() const noexcept { return coeffs_.empty() ? 0 : coeffs_.front().cols(); }
  const std::vector<RatMatrix>& coefficients() const noexcept { return coeffs_; }
  const RatMatrix& operator[](std::size_t s) const { return coeffs_.at(s); }

  /// t ↦ c·t, i.e. coefficient s scaled by c^s.
  MatrixSeries rescale(const Rational& c) const;
  MatrixSeries truncate(std::size_t order) const;

  friend bool operator==(const MatrixSeries&, const MatrixSeries&) = default;

 private:
  std::vector<RatMatrix> coeffs_;
};

/// Cauchy product truncated at t^order. Both factors must carry at least
/// `order + 1` coefficients with compatible shapes.
MatrixSeries series_mul(const MatrixSeries& a, const MatrixSeries& b, std::size_t order);

}  // namespace hermite

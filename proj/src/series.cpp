#include "hermite/series.hpp"

#include "hermite/errors.hpp"

namespace hermite {

MatrixSeries::MatrixSeries(std::vector<RatMatrix> coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.rows() != coeffs_.front().rows() || c.cols() != coeffs_.front().cols()) {
      throw DimensionError("series coefficients differ in shape");
    }
  }
}

MatrixSeries MatrixSeries::rescale(const Rational& c) const {
  std::vector<RatMatrix> out;
  out.reserve(coeffs_.size());
  Rational f = 1;
  for (const auto& m : coeffs_) {
    out.push_back(f * m);
    f *= c;
  }
  return MatrixSeries(std::move(out));
}

MatrixSeries MatrixSeries::truncate(std::size_t order) const {
  if (order + 1 >= coeffs_.size()) return *this;
  return MatrixSeries({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)});
}

MatrixSeries series_mul(const MatrixSeries& a, const MatrixSeries& b, std::size_t order) {
  if (a.coefficients().size() < order + 1 || b.coefficients().size() < order + 1) {
    throw DimensionError("series not defined up to the requested order");
  }
  if (a.cols() != b.rows()) throw DimensionError("series coefficient shapes are incompatible");
  std::vector<RatMatrix> out;
  out.reserve(order + 1);
  for (std::size_t s = 0; s <= order; ++s) {
    RatMatrix acc(a.rows(), b.cols());
    for (std::size_t i = 0; i <= s; ++i) acc += a[i] * b[s - i];
    out.push_back(std::move(acc));
  }
  return MatrixSeries(std::move(out));
}

}  // namespace hermite

#include "hermite/matrix.hpp"

#include <utility>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

void require_same_length(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
}

}  // namespace

RatVector vec_add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b);
  RatVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVector vec_sub(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a, b);
  RatVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector vec_scale(const Rational& s, std::span<const Rational> a) {
  RatVector r(a.begin(), a.end());
  for (auto& x : r) x *= s;
  return r;
}

bool vec_is_zero(std::span<const Rational> a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rational vec_max_abs(std::span<const Rational> a) {
  Rational m;
  for (const auto& x : a) {
    if (x.abs() > m) m = x.abs();
  }
  return m;
}

RatVector unit_vector(std::size_t n, std::size_t j) {
  RatVector e(n);
  e.at(j) = 1;
  return e;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionError("entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rational> diag) {
  RatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RatMatrix RatMatrix::column(std::span<const Rational> v) {
  return RatMatrix(v.size(), 1, RatVector(v.begin(), v.end()));
}

bool RatMatrix::is_zero() const { return vec_is_zero(entries_); }

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RatMatrix operator*(const Rational& s, RatMatrix a) {
  for (auto& x : a.entries_) x *= s;
  return a;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RatVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!v[k].is_zero()) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) { return a * b; }

SolutionSet solve_linear(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw DimensionError("right-hand side length does not match row count");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // Augmented rows [A | b].
  std::vector<RatVector> rows(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n] = b[i];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j <= n; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j <= n; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }

  SolutionSet out;
  out.rank = r;
  for (std::size_t i = r; i < m; ++i) {
    if (!rows[i][n].is_zero()) {
      out.consistent = false;
      out.inconsistent_row = i;
      return out;
    }
  }
  out.consistent = true;
  out.particular.assign(n, Rational{});
  for (std::size_t i = 0; i < r; ++i) out.particular[pivot_cols[i]] = rows[i][n];

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = -rows[i][f];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace hermite

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

using RatVector = std::vector<Rational>;

RatVector vec_add(std::span<const Rational> a, std::span<const Rational> b);
RatVector vec_sub(std::span<const Rational> a, std::span<const Rational> b);
RatVector vec_scale(const Rational& s, std::span<const Rational> a);
bool vec_is_zero(std::span<const Rational> a);
/// max_i |a_i|
Rational vec_max_abs(std::span<const Rational> a);
/// j-th unit vector of length n.
RatVector unit_vector(std::size_t n, std::size_t j);

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(std::span<const Rational> diag);
  static RatMatrix column(std::span<const Rational> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  RatMatrix transpose() const;
  RatVector col(std::size_t c) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, std::span<const Rational> v);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product; throws DimensionError when A.cols != B.rows.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

/// Result of exact Gauss-Jordan elimination on A x = b.
struct SolutionSet {
  bool consistent = false;
  /// Free variables set to zero. Empty when inconsistent.
  RatVector particular;
  /// One basis vector per free column, in column order.
  std::vector<RatVector> nullspace;
  std::size_t rank = 0;
  /// When inconsistent: index of an eliminated row reading 0 = c, c != 0.
  std::size_t inconsistent_row = 0;
};

/// Reduced row echelon solve. First nonzero entry in each column is the
/// pivot. Inconsistency is a normal result.
SolutionSet solve_linear(const RatMatrix& a, std::span<const Rational> b);

}  // namespace hermite

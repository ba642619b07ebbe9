#pragma once

#include <cstddef>

namespace hermite {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IndexRange {
  long lo = 0;
  long hi = -1;

  bool empty() const noexcept { return lo > hi; }
  std::size_t size() const noexcept { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  bool contains(long j) const noexcept { return lo <= j && j <= hi; }
  bool contains(const IndexRange& o) const noexcept { return o.empty() || (lo <= o.lo && o.hi <= hi); }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// floor(a / b) for b > 0.
constexpr long floor_div(long a, long b) noexcept { return a >= 0 ? a / b : -((-a + b - 1) / b); }
/// ceil(a / b) for b > 0.
constexpr long ceil_div(long a, long b) noexcept { return -floor_div(-a, b); }

}  // namespace hermite

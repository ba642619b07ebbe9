#include "hermite/operator.hpp"

#include <algorithm>
#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

HermiteSequence::HermiteSequence(unsigned d, long offset, std::vector<RatVector> values)
    : d_(d), offset_(offset), values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v.size() != d_ + 1) throw DimensionError("sequence entry is not a (d+1)-vector");
  }
}

HermiteSequence HermiteSequence::delta(unsigned d, long index, unsigned component) {
  return HermiteSequence(d, index, {unit_vector(d + 1, component)});
}

RatVector HermiteSequence::at(long j) const {
  if (!range().contains(j)) return RatVector(d_ + 1);
  return values_[static_cast<std::size_t>(j - offset_)];
}

HermiteSequence HermiteSequence::restrict(const IndexRange& r) const {
  std::vector<RatVector> vals;
  vals.reserve(r.size());
  for (long j = r.lo; j <= r.hi; ++j) vals.push_back(at(j));
  return HermiteSequence(d_, r.empty() ? 0 : r.lo, std::move(vals));
}

HermiteSequence HermiteSequence::trimmed() const {
  std::size_t first = 0;
  while (first < values_.size() && vec_is_zero(values_[first])) ++first;
  std::size_t last = values_.size();
  while (last > first && vec_is_zero(values_[last - 1])) --last;
  if (first == last) return HermiteSequence(d_);
  return HermiteSequence(d_, offset_ + static_cast<long>(first),
                         {values_.begin() + static_cast<std::ptrdiff_t>(first),
                          values_.begin() + static_cast<std::ptrdiff_t>(last)});
}

HermiteSequence HermiteSequence::scaled(const Rational& s) const {
  HermiteSequence r = *this;
  for (auto& v : r.values_) v = vec_scale(s, v);
  return r;
}

HermiteSequence HermiteSequence::dilated(long n) const {
  HermiteSequence r = *this;
  for (auto& v : r.values_) {
    for (std::size_t m = 0; m < v.size(); ++m) v[m] *= Rational::pow2(static_cast<long>(m) * n);
  }
  return r;
}

HermiteSequence HermiteSequence::shifted(long by) const {
  HermiteSequence r = *this;
  r.offset_ += by;
  return r;
}

namespace {

IndexRange hull(const IndexRange& a, const IndexRange& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

HermiteSequence combine(const HermiteSequence& a, const HermiteSequence& b, bool subtract) {
  if (a.d() != b.d()) throw DimensionError("sequences differ in d");
  const IndexRange r = hull(a.range(), b.range());
  std::vector<RatVector> vals;
  vals.reserve(r.size());
  for (long j = r.lo; j <= r.hi; ++j) {
    vals.push_back(subtract ? vec_sub(a.at(j), b.at(j)) : vec_add(a.at(j), b.at(j)));
  }
  return HermiteSequence(a.d(), r.empty() ? 0 : r.lo, std::move(vals));
}

void require_same_d(const Mask& mask, const HermiteSequence& c) {
  if (mask.d() != c.d()) throw DimensionError("mask and sequence differ in d");
}

}  // namespace

HermiteSequence operator+(const HermiteSequence& a, const HermiteSequence& b) { return combine(a, b, false); }
HermiteSequence operator-(const HermiteSequence& a, const HermiteSequence& b) { return combine(a, b, true); }

bool operator==(const HermiteSequence& a, const HermiteSequence& b) {
  if (a.d() != b.d()) return false;
  const HermiteSequence ta = a.trimmed();
  const HermiteSequence tb = b.trimmed();
  return ta.offset() == tb.offset() && ta.values() == tb.values();
}

HermiteSequence apply_on(const Mask& mask, const HermiteSequence& c, const IndexRange& out) {
  require_same_d(mask, c);
  const IndexRange in = c.range();
  std::vector<RatVector> vals;
  vals.reserve(out.size());
  for (long j = out.lo; j <= out.hi; ++j) {
    RatVector acc(mask.dim());
    if (!mask.is_zero() && !in.empty()) {
      const long k_lo = std::max(ceil_div(j - mask.support_max(), 2), in.lo);
      const long k_hi = std::min(floor_div(j - mask.support_min(), 2), in.hi);
      for (long k = k_lo; k <= k_hi; ++k) {
        const RatVector& ck = c.values()[static_cast<std::size_t>(k - in.lo)];
        if (vec_is_zero(ck)) continue;
        acc = vec_add(acc, mask.at(j - 2 * k) * ck);
      }
    }
    vals.push_back(std::move(acc));
  }
  return HermiteSequence(mask.d(), out.empty() ? 0 : out.lo, std::move(vals));
}

namespace {

IndexRange full_output(const Mask& mask, const IndexRange& in) {
  if (in.empty() || mask.is_zero()) return {};
  return {2 * in.lo + mask.support_min(), 2 * in.hi + mask.support_max()};
}

IndexRange exact_output(const Mask& mask, const IndexRange& known) {
  if (known.empty()) return {};
  if (mask.is_zero()) return {2 * known.lo, 2 * known.hi};
  return {2 * known.lo + mask.support_max() - 1, 2 * known.hi + mask.support_min() + 1};
}

}  // namespace

HermiteSequence apply(const Mask& mask, const HermiteSequence& c) {
  return apply_on(mask, c, full_output(mask, c.range())).trimmed();
}

IndexRange forward_window(const Mask& mask, const IndexRange& known, unsigned n) {
  IndexRange w = known;
  for (unsigned i = 0; i < n && !w.empty(); ++i) w = exact_output(mask, w);
  return w;
}

IndexRange pullback_window(const Mask& mask, const IndexRange& target, unsigned n) {
  IndexRange w = target;
  if (mask.is_zero()) return w;
  for (unsigned i = 0; i < n && !w.empty(); ++i) {
    w = {ceil_div(w.lo - mask.support_max(), 2), floor_div(w.hi - mask.support_min(), 2)};
  }
  return w;
}

Mask conv2(const Mask& b, const Mask& c) {
  if (b.d() != c.d()) throw DimensionError("conv2 operands differ in d");
  if (b.is_zero() || c.is_zero()) return Mask::zero(b.d());
  const long lo = 2 * c.support_min() + b.support_min();
  const long hi = 2 * c.support_max() + b.support_max();
  std::vector<RatMatrix> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long j = lo; j <= hi; ++j) {
    RatMatrix acc(b.dim(), b.dim());
    for (long m = c.support_min(); m <= c.support_max(); ++m) {
      const RatMatrix& bj = b.at(j - 2 * m);
      if (!bj.is_zero()) acc += bj * c.at(m);
    }
    out.push_back(std::move(acc));
  }
  return Mask(b.d(), lo, std::move(out));
}

Rational IterateFrame::abscissa(long j) const { return (Rational(j) + tau) * Rational::pow2(-static_cast<long>(level)); }

IterateFrame hermite_iterate(const Mask& mask, const HermiteSequence& c0, unsigned n, const Rational& tau,
                             Extension ext) {
  require_same_d(mask, c0);
  HermiteSequence c = c0;
  for (unsigned i = 0; i < n; ++i) {
    const IndexRange out = ext == Extension::zero ? full_output(mask, c.range()) : exact_output(mask, c.range());
    c = apply_on(mask, c, out);
  }
  return IterateFrame{n, c.dilated(static_cast<long>(n)), tau};
}

HermiteSequence sample_hermite(const RatPoly& p, unsigned d, const Rational& tau, const IndexRange& window) {
  std::vector<RatPoly> jet{p};
  for (unsigned m = 1; m <= d; ++m) jet.push_back(jet.back().derivative());
  std::vector<RatVector> vals;
  vals.reserve(window.size());
  for (long j = window.lo; j <= window.hi; ++j) {
    const Rational x = Rational(j) + tau;
    RatVector v(d + 1);
    for (unsigned m = 0; m <= d; ++m) v[m] = jet[m].eval(x);
    vals.push_back(std::move(v));
  }
  return HermiteSequence(d, window.empty() ? 0 : window.lo, std::move(vals));
}

std::vector<SampleRow> limit_samples(const Mask& mask, const HermiteSequence& initial, unsigned levels,
                                     const Rational& tau, Extension ext) {
  if (levels < 1) throw DomainError("limit_samples needs at least one level");
  const IterateFrame frame = hermite_iterate(mask, initial, levels, tau, ext);
  if (frame.sequence.empty()) {
    throw InfeasibleError("no index is exactly computable at level " + std::to_string(levels) +
                          "; enlarge the initial support");
  }
  std::vector<SampleRow> rows;
  rows.reserve(frame.sequence.values().size());
  const IndexRange r = frame.sequence.range();
  for (long j = r.lo; j <= r.hi; ++j) rows.push_back({frame.abscissa(j), frame.sequence.at(j)});
  return rows;
}

std::vector<Rational> convergence_probe(const Mask& mask, const HermiteSequence& initial, unsigned levels,
                                        Extension ext) {
  if (levels < 2) throw DomainError("convergence_probe needs at least two levels");
  std::vector<Rational> out;
  HermiteSequence prev = hermite_iterate(mask, initial, 1, 0, ext).sequence;
  for (unsigned n = 1; n + 1 <= levels; ++n) {
    // One more subdivision step from level n gives level n+1.
    const IndexRange raw = prev.dilated(-static_cast<long>(n)).range();
    const IndexRange out_range = ext == Extension::zero ? full_output(mask, raw) : exact_output(mask, raw);
    HermiteSequence next =
        apply_on(mask, prev.dilated(-static_cast<long>(n)), out_range).dilated(static_cast<long>(n) + 1);

    IndexRange common;
    if (ext == Extension::zero) {
      common = hull(prev.range(), {ceil_div(next.range().lo, 2), floor_div(next.range().hi, 2)});
    } else {
      common = {std::max(prev.range().lo, ceil_div(next.range().lo, 2)),
                std::min(prev.range().hi, floor_div(next.range().hi, 2))};
    }
    Rational dev;
    for (long j = common.lo; j <= common.hi; ++j) {
      dev = std::max(dev, vec_max_abs(vec_sub(next.at(2 * j), prev.at(j))));
    }
    out.push_back(dev);
    prev = std::move(next);
  }
  return out;
}

std::string samples_to_csv(const std::vector<SampleRow>& rows, unsigned d, int digits) {
  std::ostringstream out;
  out << 'x';
  for (unsigned m = 0; m <= d; ++m) out << ",c" << m;
  out << '\n';
  for (const auto& row : rows) {
    out << row.x.to_decimal(digits);
    for (const auto& v : row.value) out << ',' << v.to_decimal(digits);
    out << '\n';
  }
  return out.str();
}

std::string probe_to_csv(const std::vector<Rational>& deviations, int digits) {
  std::ostringstream out;
  out << "level,deviation\n";
  for (std::size_t i = 0; i < deviations.size(); ++i) out << i + 1 << ',' << deviations[i].to_decimal(digits) << '\n';
  return out.str();
}

}  // namespace hermite

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermite/errors.hpp"
#include "hermite/operator.hpp"
#include "oracles.hpp"

using namespace hermite;

namespace {

RatVector v2(const Rational& a, const Rational& b) { return {a, b}; }

bool sequences_equal_on(const HermiteSequence& a, const HermiteSequence& b, const IndexRange& r) {
  for (long j = r.lo; j <= r.hi; ++j) {
    if (a.at(j) != b.at(j)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("apply on small data") {
  const Mask a1 = catalog("han05_a1");
  const HermiteSequence c(1, -1, {v2(-1, 1), v2(0, 1), v2(1, 1)});
  const HermiteSequence out = apply(a1, c);
  CHECK(out.at(0) == v2(0, Rational(1, 2)));
  for (long j = -6; j <= 6; ++j) {
    const auto expected = oracle::apply_at(a1, c, j);
    const auto got = out.at(j);
    for (std::size_t m = 0; m < 2; ++m) CHECK(got[m].gmp() == expected[m]);
  }

  CHECK(apply(a1, HermiteSequence(1)).empty());
  CHECK(apply(a1, HermiteSequence(1, 0, {v2(0, 0)})).empty());

  const HermiteSequence delta = HermiteSequence::delta(1, 0);
  const HermiteSequence resp = apply(a1, delta);
  for (long j = -2; j <= 2; ++j) CHECK(resp.at(j) == a1.at(j).col(0));

  CHECK_THROWS_AS(apply(a1, HermiteSequence(2, 0, {RatVector{1, 0, 0}})), DimensionError);
}

TEST_CASE("operator linearity and shift covariance") {
  oracle::Gen gen(101);
  for (int t = 0; t < 200; ++t) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 2));
    const Mask mask = gen.mask(d);
    const HermiteSequence c = gen.sequence(d);
    const HermiteSequence c2 = gen.sequence(d);
    const Rational alpha = gen.rational();
    const Rational beta = gen.rational();
    CHECK(apply(mask, c.scaled(alpha) + c2.scaled(beta)) ==
          apply(mask, c).scaled(alpha) + apply(mask, c2).scaled(beta));
    CHECK(apply(mask, c.shifted(1)) == apply(mask, c).shifted(2));
  }
}

TEST_CASE("Hermite iteration matches the one-step recursion") {
  oracle::Gen gen(202);
  for (int t = 0; t < 200; ++t) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 2));
    const Mask mask = gen.mask(d, 4);
    const HermiteSequence c0 = gen.sequence(d, 4);
    HermiteSequence prev = c0;
    for (unsigned n = 0; n < 3; ++n) {
      const HermiteSequence next = hermite_iterate(mask, c0, n + 1, 0).sequence;
      // D^{n+1} c^[n+1] = S_A D^n c^[n]
      CHECK(next.dilated(-static_cast<long>(n) - 1) == apply(mask, prev.dilated(-static_cast<long>(n))));
      prev = next;
    }
  }
  const Mask a1 = catalog("han05_a1");
  const HermiteSequence c0 = HermiteSequence::delta(1, 2, 1);
  CHECK(hermite_iterate(a1, c0, 0, 0).sequence == c0);
}

TEST_CASE("iteration of sampled x reproduces x") {
  const Mask a1 = catalog("han05_a1");
  const IndexRange target{-6, 6};
  const IndexRange input = pullback_window(a1, target, 2);
  const HermiteSequence c0 = sample_hermite(RatPoly::x(), 1, 0, input);
  const IterateFrame f = hermite_iterate(a1, c0, 2, 0, Extension::truncated);
  CHECK(f.sequence.range().contains(target));
  for (long j = target.lo; j <= target.hi; ++j) CHECK(f.sequence.at(j) == v2(Rational(j, 4), 1));
  CHECK(f.abscissa(3) == Rational(3, 4));
}

TEST_CASE("conv2") {
  oracle::Gen gen(303);
  const Mask delta(1, 0, {RatMatrix::identity(2)});
  for (int t = 0; t < 50; ++t) {
    const Mask c = gen.mask(1);
    const Mask up = conv2(delta, c);
    for (long j = 2 * c.support_min() - 1; j <= 2 * c.support_max() + 1; ++j) {
      CHECK(up.at(j) == (j % 2 == 0 ? c.at(j / 2) : RatMatrix(2, 2)));
    }
    CHECK(conv2(c, delta) == c);
  }
  const Mask a1 = catalog("han05_a1");
  CHECK(conv2(a1, a1).support() == IndexRange{-6, 6});
  CHECK_THROWS_AS(conv2(a1, Mask(2, 0, {RatMatrix::identity(3)})), DimensionError);
}

TEST_CASE("conv2 agrees with columnwise subdivision") {
  oracle::Gen gen(404);
  for (int t = 0; t < 200; ++t) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 2));
    const Mask b = gen.mask(d, 4);
    const Mask c = gen.mask(d, 4);
    const Mask bc = conv2(b, c);
    for (std::size_t col = 0; col <= d; ++col) {
      std::vector<RatVector> cols;
      for (long m = c.support_min(); m <= c.support_max(); ++m) cols.push_back(c.at(m).col(col));
      const HermiteSequence applied = apply(b, HermiteSequence(d, c.support_min(), cols));
      for (long j = bc.support_min() - 1; j <= bc.support_max() + 1; ++j) CHECK(applied.at(j) == bc.at(j).col(col));
    }
  }
}

TEST_CASE("pullback windows") {
  const Mask a1 = catalog("han05_a1");
  CHECK(pullback_window(a1, {0, 0}, 1) == IndexRange{-1, 1});
  const Mask m01(1, 0, {RatMatrix::identity(2), RatMatrix::identity(2)});
  for (long j = -5; j <= 5; ++j) {
    CHECK(pullback_window(m01, {j, j}, 1) == IndexRange{ceil_div(j - 1, 2), floor_div(j, 2)});
  }
  const IndexRange t{-3, 7};
  CHECK(pullback_window(a1, t, 2) == pullback_window(a1, pullback_window(a1, t, 1), 1));
  CHECK(forward_window(a1, pullback_window(a1, t, 3), 3).contains(t));
}

TEST_CASE("pulled-back windows give the same values as larger windows") {
  oracle::Gen gen(505);
  for (int t = 0; t < 40; ++t) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 2));
    const Mask mask = gen.mask(d, 4);
    const RatPoly p = gen.poly(3);
    const Rational tau = gen.rational(3, 4);
    const unsigned n = static_cast<unsigned>(gen.integer(1, 3));
    const IndexRange target{gen.integer(-4, 0), gen.integer(1, 5)};
    const IndexRange tight = pullback_window(mask, target, n);
    const IndexRange wide{tight.lo - gen.integer(1, 4), tight.hi + gen.integer(1, 4)};
    const auto a = hermite_iterate(mask, sample_hermite(p, d, tau, tight), n, tau, Extension::truncated).sequence;
    const auto b = hermite_iterate(mask, sample_hermite(p, d, tau, wide), n, tau, Extension::truncated).sequence;
    CHECK(a.range().contains(target));
    CHECK(sequences_equal_on(a, b, target));
  }
}

TEST_CASE("sample_hermite") {
  const IndexRange w{-2, 2};
  const auto ones = sample_hermite(RatPoly(1), 2, Rational(3, 7), w);
  for (long j = -2; j <= 2; ++j) CHECK(ones.at(j) == RatVector{1, 0, 0});
  const auto lin = sample_hermite(RatPoly::x(), 1, 0, w);
  for (long j = -2; j <= 2; ++j) CHECK(lin.at(j) == v2(j, 1));
  const auto quad = sample_hermite(RatPoly::monomial(2, Rational(1, 2)), 1, Rational(-1, 2), {0, 0});
  CHECK(quad.at(0) == v2(Rational(1, 8), Rational(-1, 2)));
}

TEST_CASE("limit samples") {
  const Mask a1 = catalog("han05_a1");
  SUBCASE("delta data row count follows support arithmetic") {
    const auto rows = limit_samples(a1, HermiteSequence::delta(1, 0), 3, 0);
    // [0,0] -> [-2,2] -> [-6,6] -> [-14,14]
    CHECK(rows.size() == 29);
    CHECK(rows.front().x == Rational(-14, 8));
  }
  SUBCASE("constant data stays constant") {
    const IndexRange input = pullback_window(a1, {0, 8}, 3);
    const auto rows = limit_samples(a1, sample_hermite(RatPoly(1), 1, 0, input), 3, 0, Extension::truncated);
    CHECK(rows.size() >= 9);
    for (const auto& r : rows) CHECK(r.value == v2(1, 0));
  }
  SUBCASE("level-one abscissas") {
    const Rational tau(-1, 2);
    const auto rows = limit_samples(a1, HermiteSequence::delta(1, 0), 1, tau);
    long j = -2;
    for (const auto& r : rows) CHECK(r.x == (Rational(j++) + tau) / 2);
  }
  SUBCASE("empty window is an error") {
    CHECK_THROWS_AS(limit_samples(a1, HermiteSequence::delta(1, 0), 2, 0, Extension::truncated), InfeasibleError);
  }
  const auto csv = samples_to_csv(limit_samples(a1, HermiteSequence::delta(1, 0), 1, 0), 1);
  CHECK(csv.rfind("x,c0,c1\n-1,0.0078125,0\n", 0) == 0);
}

TEST_CASE("convergence probe") {
  const Mask interp(1, -1, {RatMatrix{{Rational(1, 2), Rational(-1, 8)}, {Rational(3, 4), Rational(-1, 8)}},
                            dilation_matrix(1),
                            RatMatrix{{Rational(1, 2), Rational(1, 8)}, {Rational(-3, 4), Rational(-1, 8)}}});
  REQUIRE(is_interpolatory(interp));
  for (const auto& dev : convergence_probe(interp, HermiteSequence::delta(1, 0), 5)) CHECK(dev.is_zero());

  const Mask a1 = catalog("han05_a1");
  for (const auto& dev : convergence_probe(a1, HermiteSequence(1), 4)) CHECK(dev.is_zero());
  const auto devs = convergence_probe(a1, HermiteSequence::delta(1, 0), 5);
  CHECK(devs.size() == 4);
  CHECK(probe_to_csv(devs).rfind("level,deviation\n1,", 0) == 0);
  CHECK_THROWS_AS(convergence_probe(a1, HermiteSequence::delta(1, 0), 1), DomainError);
}

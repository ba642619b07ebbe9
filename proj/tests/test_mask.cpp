#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermite/errors.hpp"
#include "hermite/mask.hpp"
#include "oracles.hpp"

using namespace hermite;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("catalog entries match the printed tables") {
  const Mask a1 = catalog("han05_a1");
  const Mask a2 = catalog("han05_a2");
  CHECK(a1.d() == 1);
  CHECK(a1.support() == IndexRange{-2, 2});
  CHECK(a2.support() == IndexRange{-2, 2});
  CHECK(a1.at(-1) == RatMatrix{{q(1, 2), q(-1, 16)}, {q(15, 16), q(-7, 32)}});
  CHECK(a1.at(2) == RatMatrix{{q(1, 128), q(-7, 256)}, {q(0), q(1, 16)}});
  CHECK(a2.at(0) == RatMatrix{{q(41, 48), q(0)}, {q(0), q(19, 96)}});
  CHECK(a1.at(3).is_zero());
  CHECK_THROWS_WITH_AS(catalog("nope"), doctest::Contains("han05_a1"), DomainError);
}

TEST_CASE("moments of the catalog masks") {
  const Mask a1 = catalog("han05_a1");
  const Mask a2 = catalog("han05_a2");
  CHECK(parity_moment(a1, 0, 0) == RatMatrix{{1, 0}, {0, q(1, 2)}});
  CHECK(parity_moment(a1, 1, 1) == RatMatrix{{0, q(1, 8)}, {q(-15, 8), 0}});
  CHECK(moment(a1, 0) == RatMatrix{{2, 0}, {0, q(1, 16)}});
  CHECK(moment(a1, 1) == RatMatrix{{0, q(1, 64)}, {q(-15, 8), 0}});
  CHECK(moment(a1, 2) == RatMatrix{{q(17, 16), 0}, {0, q(1, 16)}});
  CHECK(moment(a2, 0) == RatMatrix{{2, 0}, {0, q(1, 64)}});
  CHECK(alt_moment(a1, 0) == RatMatrix{{0, 0}, {0, q(15, 16)}});
  CHECK(alt_moment(a1, 1) == RatMatrix{{0, q(-15, 64)}, {q(15, 8), 0}});
  CHECK(alt_moment(a1, 2) == RatMatrix{{q(-15, 16), 0}, {0, q(15, 16)}});

  const RatMatrix m{{1, 2}, {3, 4}};
  const Mask single(1, 0, {m});
  CHECK(alt_moment(single, 0) == m);
  CHECK(parity_moment(Mask(1, 1, {m}), 0, 0).is_zero());
}

TEST_CASE("moment identities on random masks") {
  oracle::Gen gen(17);
  for (int t = 0; t < 60; ++t) {
    const Mask mask = gen.mask(static_cast<unsigned>(gen.integer(1, 2)));
    for (unsigned r = 0; r <= 8; ++r) {
      CHECK(moment(mask, r) == parity_moment(mask, r, 0) + parity_moment(mask, r, 1));
      CHECK(alt_moment(mask, r) == parity_moment(mask, r, 0) - parity_moment(mask, r, 1));
    }
  }
}

TEST_CASE("interpolatory criterion") {
  CHECK_FALSE(is_interpolatory(catalog("han05_a1")));
  const RatMatrix d = dilation_matrix(1);
  CHECK(d == RatMatrix{{1, 0}, {0, q(1, 2)}});
  CHECK(is_interpolatory(Mask(1, 0, {d, RatMatrix{{1, 2}, {3, 4}}})));
  CHECK(is_interpolatory(Mask(1, -1, {RatMatrix{{1, 1}, {0, 1}}, d, RatMatrix{{1, 2}, {3, 4}}})));
  CHECK_FALSE(is_interpolatory(Mask(1, 0, {d, RatMatrix{{1, 0}, {0, 0}}, RatMatrix{{1, 0}, {0, 0}}})));
}

TEST_CASE("catalog masks are mirror symmetric") {
  for (const auto& name : catalog_names()) CHECK(is_mirror_symmetric(catalog(name)));
  CHECK_FALSE(is_mirror_symmetric(Mask(1, 0, {RatMatrix{{1, 0}, {0, 1}}, RatMatrix{{1, 0}, {0, 1}}})));
}

TEST_CASE("mask construction trims zero ends") {
  const RatMatrix z(2, 2);
  const RatMatrix a{{1, 0}, {0, 1}};
  const Mask m(1, -3, {z, a, z, a, z});
  CHECK(m.support() == IndexRange{-2, 0});
  CHECK(m.coefficients().size() == 3);
  CHECK(Mask(1, 4, {z, z}).is_zero());
  CHECK_THROWS_AS(Mask(1, 0, {RatMatrix(3, 3)}), DimensionError);
  CHECK(m.reflected().support() == IndexRange{0, 2});
  CHECK(m.reflected().at(2) == m.at(-2));
}

TEST_CASE("serialization") {
  const Mask a1 = catalog("han05_a1");
  const std::string text = serialize_mask(a1);
  CHECK(text.find("63/64") != std::string::npos);
  CHECK(text.rfind(R"({"d": 1, "support_min": -2, "coefficients": [[["1/128","7/256"],["0","1/16"]], )", 0) == 0);
  CHECK(text.find("\"1/1\"") == std::string::npos);
  CHECK(parse_mask(text) == a1);
  CHECK(serialize_mask(Mask(1, 0, {RatMatrix::identity(2)})) ==
        "{\"d\": 1, \"support_min\": 0, \"coefficients\": [[[\"1\",\"0\"],[\"0\",\"1\"]]]}\n");
}

TEST_CASE("parse/serialize round-trip on random masks") {
  oracle::Gen gen(23);
  for (int t = 0; t < 200; ++t) {
    const Mask mask = gen.mask(static_cast<unsigned>(gen.integer(1, 3)));
    CHECK(parse_mask(serialize_mask(mask)) == mask);
  }
}

TEST_CASE("parse errors carry a location") {
  auto location_of = [](const std::string& text) {
    try {
      parse_mask(text);
    } catch (const ParseError& e) {
      return e.location();
    }
    return std::string("<no error>");
  };
  CHECK(location_of(R"({"d": 1, "support_min": 0, "coefficients": [[["1","0","0"],["0","1","0"],["0","0","1"]]]})") ==
        "coefficients[0]");
  CHECK(location_of(R"({"d": 1, "support_min": 0, "coefficients": [[["1","0"],["0","1/0"]]]})") ==
        "coefficients[0][1][1]");
  CHECK(location_of(R"({"d": 1, "support_min": 0, "coefficients": [[["1","0"],["0"]]]})") == "coefficients[0][1]");
  CHECK(location_of(R"({"d": 1, "support_min": 0, "coefficients": [[["1",0],["0","1"]]]})") ==
        "coefficients[0][0][1]");
  CHECK(location_of(R"({"d": 1, "support_min": 0, "coefficients": [[["0","0"],["0","0"]]]})") == "coefficients");
  CHECK(location_of(R"({"d": 0, "support_min": 0, "coefficients": [[["1"]]]})") == "d");
  CHECK(location_of(R"({"d": 1, "coefficients": []})") == "support_min");
  CHECK(location_of(R"({"d": 1, "support_min": 0.5, "coefficients": []})") == "support_min");
  CHECK(location_of(R"({"d": 1, "support_min": 0, "coefficients": [)").rfind("byte", 0) == 0);
  CHECK(location_of("[1, 2]") == "$");
}

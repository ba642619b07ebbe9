// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hermite/derham.hpp"
#include "hermite/spectral.hpp"
#include "hermite/sumrule.hpp"
#include "oracles.hpp"

using namespace hermite;

namespace {

using Clock = std::chrono::steady_clock;

Rational q(long n, long d = 1) { return Rational(n, d); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

struct Fixture {
  std::string name;
  Mask mask;
  Rational tau;
  unsigned ell;
};

const std::vector<Rational>& fixture_taus() {
  static const std::vector<Rational> taus{q(0), q(-1, 2), q(1, 3)};
  return taus;
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  for (unsigned d : {1u, 2u})
    for (const Rational& tau : fixture_taus())
      for (unsigned ell = 0; ell <= 3; ++ell) {
        std::ostringstream name;
        name << "fixture(d=" << d << ",tau=" << tau.to_string() << ",l=" << ell << ")";
        out.push_back({name.str(), synthesize_mask(d, tau, ell, {-3, 3}), tau, ell});
      }
  return out;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f = make_fixtures();
  return f;
}

std::string polys_to_string(const std::vector<RatPoly>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

void spectral_catalog(Outcome& o, const char* name, const RatPoly& p2) {
  const auto r = spectral_order(catalog(name), 8);
  o.require(r.order == 2, "order");
  const std::vector<RatPoly> expected{RatPoly(1), RatPoly::x(), p2};
  o.require(r.polynomials() == expected, "polynomials");
  o.require(r.degrees.size() == 4 && !r.degrees[3].solved, "degree 3 infeasible");
  o.detail << " order=" << r.order << " polys={" << polys_to_string(r.polynomials()) << "}";
}

void criterion1(Outcome& o) { spectral_catalog(o, "han05_a1", RatPoly(std::vector<Rational>{q(-1, 12), 0, q(1, 2)})); }
void criterion2(Outcome& o) { spectral_catalog(o, "han05_a2", RatPoly(std::vector<Rational>{q(-1, 21), 0, q(1, 2)})); }

// Maximal order observed on first computation, kept as a regression constant.
constexpr int kSumRuleRegression = 7;

void criterion3(Outcome& o) {
  for (const auto& name : catalog_names()) {
    const auto r = sumrule_order(catalog(name), 9);
    o.require(r.order >= 7, name + " order >= 7");
    o.require(r.witness && witness_satisfies(catalog(name), *r.witness), name + " witness");
    o.detail << " " << name << ": order=" << r.order << " sigma=" << r.sigma
             << (r.order == kSumRuleRegression ? " (regression match)" : " (regression CHANGED)");
  }
}

void criterion4(Outcome& o) {
  for (const auto& name : catalog_names()) {
    const Mask m = catalog(name);
    const int sr = sumrule_order(m, 9).order;
    const int sp = spectral_order(m, 8).order;
    o.require(sr >= 7 && sp == 2, name);
    o.require(sumrule_feasible(m, 3, -1).has_value() || sumrule_feasible(m, 3, 1).has_value(), name + " sum rule 3");
    o.require(!solve_spectral(m, 3).solved, name + " spectral 3");
    o.detail << " " << name << ": sumrule=" << sr << " spectral=" << sp;
  }
}

void criterion5(Outcome& o) {
  for (const auto& name : catalog_names()) {
    const Mask m = catalog(name);
    const auto r = reproduction_order(m, 0, 8);
    o.require(r == 1u, name + " reproduction order 1");
    o.require(!check_shifted_monomial(m, 0, 2), name + " not Pi_2");
    o.detail << " " << name << ": order=" << (r ? std::to_string(*r) : "none");
  }
}

void criterion6(Outcome& o) {
  std::size_t cases = 0, positives = 0;
  auto compare = [&](const std::string& label, const Mask& m, const Rational& tau) {
    for (unsigned ell = 0; ell <= 3; ++ell) {
      const bool symbolic = check_shifted_monomial(m, tau, ell);
      const bool iterated = oracle::iteration_reproduces(m, tau, ell, 3);
      ++cases;
      positives += symbolic ? 1 : 0;
      o.require(symbolic == iterated, label + " tau=" + tau.to_string() + " l=" + std::to_string(ell));
    }
  };
  for (const auto& name : catalog_names())
    for (const Rational& tau : fixture_taus()) compare(name, catalog(name), tau);
  for (const auto& f : fixtures()) compare(f.name, f.mask, f.tau);

  oracle::Gen gen(20240);
  std::size_t perturbed = 0;
  while (perturbed < 20) {
    const auto& f = fixtures()[static_cast<std::size_t>(gen.integer(0, static_cast<long>(fixtures().size()) - 1))];
    if (f.ell == 0) continue;
    std::vector<RatMatrix> coeffs = f.mask.coefficients();
    auto& c = coeffs[static_cast<std::size_t>(gen.integer(0, static_cast<long>(coeffs.size()) - 1))];
    const auto r = static_cast<std::size_t>(gen.integer(0, static_cast<long>(c.rows()) - 1));
    const auto col = static_cast<std::size_t>(gen.integer(0, static_cast<long>(c.cols()) - 1));
    c(r, col) += Rational(gen.integer(1, 5), gen.integer(1, 8)) * (gen.integer(0, 1) ? 1 : -1);
    const Mask m(f.mask.d(), f.mask.support_min(), coeffs);
    if (check_shifted_monomial(m, f.tau, f.ell)) continue;
    compare("perturbed " + f.name, m, f.tau);
    ++perturbed;
  }
  o.detail << " cases=" << cases << " reproducing=" << positives << " perturbed=" << perturbed;
}

void criterion7(Outcome& o) {
  std::size_t checked = 0;
  std::vector<std::pair<std::string, Mask>> sources;
  for (const auto& name : catalog_names()) sources.emplace_back(name, catalog(name));
  for (const auto& f : fixtures()) sources.emplace_back(f.name, f.mask);
  for (const auto& [name, m] : sources)
    for (const Rational& tau : fixture_taus())
      for (unsigned ell = 0; ell <= 3; ++ell) {
        if (!check_shifted_monomial(m, tau, ell)) continue;
        ++checked;
        o.require(check_shifted_monomial(derham(m), derham_tau(tau), ell),
                  name + " tau=" + tau.to_string() + " l=" + std::to_string(ell));
      }
  for (const Rational& tau : {q(0), q(-1, 2), q(1, 3), q(1), q(5, 7), q(-3, 2)}) {
    std::vector<RatPoly> in, expected;
    for (unsigned k = 0; k <= 5; ++k) {
      in.push_back(RatPoly::shifted_monomial(k, tau));
      expected.push_back(RatPoly::shifted_monomial(k, derham_tau(tau)));
    }
    o.require(derham_spectral_recursion(in) == expected, "recursion tau=" + tau.to_string());
  }
  o.detail << " reproducing pairs checked=" << checked;
}

void criterion8(Outcome& o) {
  std::size_t checked = 0, d2 = 0;
  std::vector<std::string> broken;
  auto check = [&](const std::string& name, const Mask& m) {
    const bool spectral = spectral_order(m, m.d()).order >= static_cast<int>(m.d());
    const bool sumrule = sumrule_feasible(m, m.d(), -1).has_value() || sumrule_feasible(m, m.d(), 1).has_value();
    ++checked;
    d2 += m.d() == 2 ? 1 : 0;
    if (spectral != sumrule) {
      broken.push_back(name + (spectral ? " spectral-only" : " sumrule-only"));
      o.require(false, broken.back());
    }
  };
  for (const auto& name : catalog_names()) check(name, catalog(name));
  for (const auto& f : fixtures()) check(f.name, f.mask);
  o.require(d2 > 0, "no d=2 fixture");
  o.detail << " masks=" << checked << " d2=" << d2 << " mismatches=" << broken.size();
}

void criterion9(Outcome& o) {
  const Mask a1 = catalog("han05_a1");
  std::size_t free_count = 99;
  const auto ref = oracle::sumrule_moments(a1, 2, -1, &free_count);
  o.require(ref.has_value(), "oracle infeasible");
  if (!ref) return;
  o.require(free_count == 0, "oracle solution not unique");
  o.require((*ref)[2] == oracle::QVec{oracle::Q(-1, 12), 0}, "oracle nu_2");
  const auto w = sumrule_feasible(a1, 2, -1);
  o.require(w.has_value(), "solver infeasible");
  if (!w) return;
  o.require(w->nu[2] == RatVector{q(-1, 12), 0}, "solver nu_2");
  o.detail << " nu_2=[" << w->nu[2][0].to_string() << ", " << w->nu[2][1].to_string() << "]";
}

void criterion10(Outcome& o) {
  oracle::Gen gen(10);
  constexpr int kCases = 200;
  int failures[5] = {0, 0, 0, 0, 0};
  for (int t = 0; t < kCases; ++t) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 2));
    const Mask mask = gen.mask(d, 4);
    const HermiteSequence c0 = gen.sequence(d, 4);

    // Recursion D^{n+1} c^[n+1] = S D^n c^[n] against c^[n] = D^{-n} S^n c^[0].
    HermiteSequence rec = c0, pow = c0;
    bool eq = true;
    for (long n = 1; n <= 3; ++n) {
      rec = apply(mask, rec.dilated(-(n - 1))).dilated(n);
      pow = apply(mask, pow);
      eq = eq && rec == pow.dilated(n) && hermite_iterate(mask, c0, static_cast<unsigned>(n), 0).sequence == rec;
    }
    failures[0] += eq ? 0 : 1;

    const HermiteSequence c1 = gen.sequence(d, 4);
    const Rational alpha = gen.rational(), beta = gen.rational();
    failures[1] +=
        apply(mask, c0.scaled(alpha) + c1.scaled(beta)) == apply(mask, c0).scaled(alpha) + apply(mask, c1).scaled(beta)
            ? 0
            : 1;
    const long shift = gen.integer(-3, 3);
    failures[2] += apply(mask, c0.shifted(shift)) == apply(mask, c0).shifted(2 * shift) ? 0 : 1;

    const Mask other = gen.mask(d, 4);
    const Mask bc = conv2(mask, other);
    bool conv_ok = true;
    for (long j = 2 * other.support_min() + mask.support_min() - 2; j <= 2 * other.support_max() + mask.support_max() + 2;
         ++j) {
      oracle::QMat acc(d + 1, oracle::QVec(d + 1));
      for (long m = other.support_min(); m <= other.support_max(); ++m) {
        const auto p = oracle::mat_mul(oracle::to_q(mask.at(j - 2 * m)), oracle::to_q(other.at(m)));
        for (unsigned r = 0; r <= d; ++r)
          for (unsigned c = 0; c <= d; ++c) acc[r][c] += p[r][c];
      }
      conv_ok = conv_ok && oracle::to_q(bc.at(j)) == acc;
    }
    failures[3] += conv_ok ? 0 : 1;

    const Mask any = gen.mask(static_cast<unsigned>(gen.integer(1, 3)));
    failures[4] += parse_mask(serialize_mask(any)) == any ? 0 : 1;
  }
  const char* names[5] = {"iteration", "linearity", "shift", "conv2", "roundtrip"};
  for (int i = 0; i < 5; ++i) {
    o.require(failures[i] == 0, std::string(names[i]) + " failures=" + std::to_string(failures[i]));
    o.detail << " " << names[i] << "=" << (kCases - failures[i]) << "/" << kCases;
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"spectral order of han05_a1", criterion1},
      {"spectral order of han05_a2", criterion2},
      {"sum rule order >= 7 for both catalog masks", criterion3},
      {"sum rule order exceeds spectral order", criterion4},
      {"reproduction of Pi_1 but not Pi_2 at tau = 0", criterion5},
      {"symbolic reproduction agrees with exact iteration", criterion6},
      {"de Rham transform shifts tau to (3tau-1)/2", criterion7},
      {"minimal spectral condition iff minimal sum rule", criterion8},
      {"sum-rule witness nu_2 = [-1/12, 0]", criterion9},
      {"operator algebra properties, 200 cases each", criterion10},
  };

  const auto start = Clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << ": " << criteria[i].first << " (" << secs << " s)"
              << o.detail.str() << "\n";
  }

  // Observation only: the −1/12 constant coincides with the a1 spectral polynomial.
  const auto w = sumrule_feasible(catalog("han05_a1"), 2, -1);
  const auto p = spectral_order(catalog("han05_a1"), 2).polynomials();
  if (w && p.size() == 3)
    std::cout << "NOTE: nu_2[0] = " << w->nu[2][0].to_string() << ", constant of p_2 = " << p[2].coeff(0).to_string()
              << "\n";

  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = total < 60.0;
  std::cout << (in_time ? "PASS" : "FAIL") << " timing: total " << total << " s\n";
  return failed == 0 && in_time ? 0 : 1;
}

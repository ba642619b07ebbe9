#include "hermite/sumrule.hpp"

#include "hermite/errors.hpp"
#include "hermite/spectral.hpp"

namespace hermite {

MatrixSeries symbol_series(const Mask& mask, unsigned order, bool at_pi) {
  std::vector<RatMatrix> coeffs;
  coeffs.reserve(order + 1);
  for (unsigned s = 0; s <= order; ++s) {
    const RatMatrix m = at_pi ? alt_moment(mask, s) : moment(mask, s);
    coeffs.push_back((Rational(1, 2) / factorial(s)) * m);
  }
  return MatrixSeries(std::move(coeffs));
}

MatrixSeries moment_series(const MomentWitness& w, const Rational& scale) {
  std::vector<RatMatrix> coeffs;
  coeffs.reserve(w.nu.size());
  Rational f = 1;
  for (const auto& v : w.nu) {
    coeffs.push_back(f * RatMatrix::column(v));
    f *= scale;
  }
  return MatrixSeries(std::move(coeffs));
}

std::optional<MomentWitness> sumrule_feasible(const Mask& mask, unsigned ell, int sigma) {
  const unsigned d = mask.d();
  if (ell < d) throw DomainError("sum rule order must be at least d");
  if (sigma != 1 && sigma != -1) throw DomainError("sign must be +1 or -1");
  const std::size_t n = mask.dim();

  std::vector<RatVector> fixed;
  for (unsigned j = 0; j <= d; ++j) fixed.push_back(vec_scale(Rational(sigma).pow(j), unit_vector(n, j)));

  // Weighted moments W_r = M_r / r!, V_r = N_r / r!.
  std::vector<RatMatrix> w_zero, w_pi;
  for (unsigned r = 0; r <= ell; ++r) {
    w_zero.push_back((Rational(1) / factorial(r)) * moment(mask, r));
    w_pi.push_back((Rational(1) / factorial(r)) * alt_moment(mask, r));
  }

  const std::size_t free_levels = ell - d;
  const std::size_t unknowns = free_levels * n;
  auto unknown_index = [&](unsigned s, std::size_t i) { return (s - d - 1) * n + i; };

  // Rows: for each j, n equations at 0 then n equations at π.
  const std::size_t eqs = 2 * n * (ell + 1);
  RatMatrix system(eqs, unknowns);
  RatVector rhs(eqs);
  std::size_t row = 0;
  for (unsigned j = 0; j <= ell; ++j) {
    for (int at_pi = 0; at_pi < 2; ++at_pi) {
      const auto& w = at_pi ? w_pi : w_zero;
      for (std::size_t r = 0; r < n; ++r, ++row) {
        // Σ_s 2^{s-1} W_{j-s} ν_s  (- ν_j at frequency 0) = 0
        for (unsigned s = 0; s <= j; ++s) {
          const Rational weight = Rational::pow2(static_cast<long>(s) - 1);
          for (std::size_t c = 0; c < n; ++c) {
            Rational coef = weight * w[j - s](r, c);
            if (!at_pi && s == j && r == c) coef -= 1;
            if (coef.is_zero()) continue;
            if (s <= d) {
              rhs[row] -= coef * fixed[s][c];
            } else {
              system(row, unknown_index(s, c)) += coef;
            }
          }
        }
      }
    }
  }

  const SolutionSet sol = solve_linear(system, rhs);
  if (!sol.consistent) return std::nullopt;

  MomentWitness out;
  out.d = d;
  out.ell = ell;
  out.sigma = sigma;
  out.nu = fixed;
  for (unsigned s = d + 1; s <= ell; ++s) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = sol.particular[unknown_index(s, i)];
    out.nu.push_back(std::move(v));
  }
  return out;
}

bool witness_satisfies(const Mask& mask, const MomentWitness& w) {
  if (w.nu.size() != w.ell + 1) return false;
  for (unsigned j = 0; j <= w.d && j <= w.ell; ++j) {
    if (w.nu[j] != vec_scale(Rational(w.sigma).pow(j), unit_vector(mask.dim(), j))) return false;
  }
  const MatrixSeries y = moment_series(w);
  const MatrixSeries y2 = moment_series(w, 2);
  const MatrixSeries at_zero = series_mul(symbol_series(mask, w.ell, false), y2, w.ell);
  const MatrixSeries at_pi = series_mul(symbol_series(mask, w.ell, true), y2, w.ell);
  for (unsigned s = 0; s <= w.ell; ++s) {
    if (at_zero[s] != y[s] || !at_pi[s].is_zero()) return false;
  }
  return true;
}

SumRuleOrder sumrule_order(const Mask& mask, unsigned ell_max) {
  const unsigned d = mask.d();
  if (ell_max < d) throw DomainError("maximal sum rule order must be at least d");
  SumRuleOrder best;
  best.order = static_cast<int>(d) - 1;
  for (int sigma : {-1, 1}) {
    std::optional<MomentWitness> last;
    int order = static_cast<int>(d) - 1;
    for (unsigned ell = d; ell <= ell_max; ++ell) {
      auto w = sumrule_feasible(mask, ell, sigma);
      if (!w) break;
      last = std::move(w);
      order = static_cast<int>(ell);
    }
    if (order > best.order) {
      best.order = order;
      best.sigma = sigma;
      best.witness = std::move(last);
    }
  }
  return best;
}

Lemma4Report lemma4_crosscheck(const Mask& mask) {
  const unsigned d = mask.d();
  Lemma4Report r;
  r.spectral_minimal = spectral_order(mask, d).order >= static_cast<int>(d);
  r.sumrule_minimal = sumrule_feasible(mask, d, -1).has_value() || sumrule_feasible(mask, d, 1).has_value();
  r.consistent = r.spectral_minimal == r.sumrule_minimal;
  return r;
}

}  // namespace hermite

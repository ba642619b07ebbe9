#include "hermite/spectral.hpp"

#include "hermite/errors.hpp"

namespace hermite {

PolyVector PolyVector::jet(const RatPoly& p, unsigned d) {
  PolyVector v;
  v.components.push_back(p);
  for (unsigned m = 1; m <= d; ++m) v.components.push_back(v.components.back().derivative());
  return v;
}

RatVector PolyVector::eval(const Rational& j) const {
  RatVector out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.eval(j));
  return out;
}

std::array<PolyVector, 2> apply_symbolic(const Mask& mask, const RatPoly& p) {
  const PolyVector g = PolyVector::jet(p, mask.d());
  std::array<PolyVector, 2> out;
  for (auto& pv : out) pv.components.assign(mask.dim(), RatPoly{});
  if (mask.is_zero()) return out;
  for (long n = mask.support_min(); n <= mask.support_max(); ++n) {
    const RatMatrix& a = mask.at(n);
    if (a.is_zero()) continue;
    const int parity = static_cast<int>(((n % 2) + 2) % 2);
    const long i = (n - parity) / 2;
    for (std::size_t m = 0; m < mask.dim(); ++m) {
      const RatPoly shifted = g.components[m].compose_affine(1, Rational(-i));
      for (std::size_t r = 0; r < mask.dim(); ++r) {
        if (!a(r, m).is_zero()) out[parity].components[r] += a(r, m) * shifted;
      }
    }
  }
  return out;
}

namespace {

/// 2^{-k}·[p(2x+ε), …, p^(d)(2x+ε)]
PolyVector eigen_target(const RatPoly& p, unsigned d, unsigned k, int parity) {
  PolyVector t = PolyVector::jet(p, d);
  for (auto& c : t.components) c = Rational::pow2(-static_cast<long>(k)) * c.compose_affine(2, parity);
  return t;
}

/// Coefficients 0 … degree_bound of apply_symbolic(p) - 2^{-k} v_p, both parities, all components.
RatVector residual(const Mask& mask, const RatPoly& p, unsigned k, unsigned degree_bound) {
  const auto applied = apply_symbolic(mask, p);
  RatVector out;
  out.reserve(2 * mask.dim() * (degree_bound + 1));
  for (int parity = 0; parity < 2; ++parity) {
    const PolyVector target = eigen_target(p, mask.d(), k, parity);
    for (std::size_t r = 0; r < mask.dim(); ++r) {
      const RatPoly diff = applied[parity].components[r] - target.components[r];
      if (diff.degree() > static_cast<int>(degree_bound)) throw DomainError("residual exceeds degree bound");
      for (unsigned s = 0; s <= degree_bound; ++s) out.push_back(diff.coeff(s));
    }
  }
  return out;
}

void require_normalized(const RatPoly& p, unsigned k) {
  if (p.degree() != static_cast<int>(k) || p.leading() != Rational(1) / factorial(k)) {
    throw DomainError("spectral polynomial of degree " + std::to_string(k) + " must have leading coefficient 1/" +
                      std::to_string(k) + "!");
  }
}

}  // namespace

bool check_spectral(const Mask& mask, const RatPoly& p, unsigned k) {
  require_normalized(p, k);
  return vec_is_zero(residual(mask, p, k, k));
}

DegreeSolution solve_spectral(const Mask& mask, unsigned k) {
  const RatPoly lead = RatPoly::monomial(k, Rational(1) / factorial(k));
  const RatVector rhs = vec_scale(-1, residual(mask, lead, k, k));

  RatMatrix system(rhs.size(), k);
  for (unsigned i = 0; i < k; ++i) {
    const RatVector col = residual(mask, RatPoly::monomial(i), k, k);
    for (std::size_t r = 0; r < col.size(); ++r) system(r, i) = col[r];
  }
  const SolutionSet sol = solve_linear(system, rhs);

  DegreeSolution out;
  out.k = k;
  out.solved = sol.consistent;
  if (!sol.consistent) return out;
  RatVector coeffs = sol.particular;
  coeffs.push_back(lead.leading());
  out.particular = RatPoly(std::move(coeffs));
  for (const auto& v : sol.nullspace) out.homogeneous.emplace_back(v);
  return out;
}

std::vector<RatPoly> SpectralReport::polynomials() const {
  std::vector<RatPoly> out;
  for (const auto& d : degrees) {
    if (!d.solved || static_cast<int>(d.k) > order) break;
    out.push_back(*d.particular);
  }
  return out;
}

SpectralReport spectral_order(const Mask& mask, unsigned k_max) {
  SpectralReport report;
  for (unsigned k = 0; k <= k_max; ++k) {
    report.degrees.push_back(solve_spectral(mask, k));
    if (!report.degrees.back().solved) break;
    report.order = static_cast<int>(k);
  }
  return report;
}

bool check_shifted_monomial(const Mask& mask, const Rational& tau, unsigned ell) {
  for (unsigned k = 0; k <= ell; ++k) {
    if (!check_spectral(mask, RatPoly::shifted_monomial(k, tau), k)) return false;
  }
  return true;
}

std::optional<unsigned> reproduction_order(const Mask& mask, const Rational& tau, unsigned ell_max) {
  std::optional<unsigned> order;
  for (unsigned k = 0; k <= ell_max; ++k) {
    if (!check_spectral(mask, RatPoly::shifted_monomial(k, tau), k)) break;
    order = k;
  }
  return order;
}

std::optional<Rational> infer_tau(const Mask& mask) {
  if (!solve_spectral(mask, 0).solved) return std::nullopt;
  const DegreeSolution p1 = solve_spectral(mask, 1);
  if (!p1.solved || p1.homogeneous_dim() != 0) return std::nullopt;
  return p1.particular->coeff(0);
}

Mask synthesize_mask(unsigned d, const Rational& tau, unsigned ell, const IndexRange& support) {
  if (support.empty()) throw InfeasibleError("empty synthesis support");
  const std::size_t n = d + 1;
  const std::size_t unknowns = support.size() * n * n;
  auto unknown_index = [&](long j, std::size_t r, std::size_t c) {
    return static_cast<std::size_t>(j - support.lo) * n * n + r * n + c;
  };

  // One block of equations per (k, parity, component, power of x).
  std::vector<RatVector> rows;
  RatVector rhs;
  for (unsigned k = 0; k <= ell; ++k) {
    const PolyVector g = PolyVector::jet(RatPoly::shifted_monomial(k, tau), d);
    for (int parity = 0; parity < 2; ++parity) {
      const PolyVector target = eigen_target(g.components[0], d, k, parity);
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<RatVector> block(k + 1, RatVector(unknowns));
        for (long j = support.lo; j <= support.hi; ++j) {
          if (((j % 2) + 2) % 2 != parity) continue;
          const long i = (j - parity) / 2;
          for (std::size_t c = 0; c < n; ++c) {
            const RatPoly shifted = g.components[c].compose_affine(1, Rational(-i));
            for (unsigned s = 0; s <= k; ++s) block[s][unknown_index(j, r, c)] = shifted.coeff(s);
          }
        }
        for (unsigned s = 0; s <= k; ++s) {
          rows.push_back(std::move(block[s]));
          rhs.push_back(target.components[r].coeff(s));
        }
      }
    }
  }

  RatMatrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t u = 0; u < unknowns; ++u) system(i, u) = rows[i][u];
  }
  const SolutionSet sol = solve_linear(system, rhs);
  if (!sol.consistent) throw InfeasibleError("no mask on the given support satisfies the spectral constraints");

  std::vector<RatMatrix> coeffs;
  for (long j = support.lo; j <= support.hi; ++j) {
    RatMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = sol.particular[unknown_index(j, r, c)];
    }
    coeffs.push_back(std::move(a));
  }
  Mask mask(d, support.lo, std::move(coeffs));
  if (mask.is_zero()) throw InfeasibleError("synthesized mask is identically zero");
  return mask;
}

}  // namespace hermite

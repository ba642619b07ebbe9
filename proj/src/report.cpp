#include "hermite/report.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

#include "hermite/derham.hpp"
#include "hermite/errors.hpp"

namespace hermite {

namespace {

Json rational_list(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(r->to_string()) : Json(nullptr); }

AnalysisReport analyze_impl(const Mask& mask, const std::string& source, const AnalyzeOptions& options, bool nested) {
  if (options.max_order < mask.d()) throw DomainError("--max-order must be at least d");

  AnalysisReport r;
  r.source = source;
  r.d = mask.d();
  r.support = mask.support();
  r.interpolatory = is_interpolatory(mask);
  r.mirror_symmetric = is_mirror_symmetric(mask);

  // Independent pure sub-analyses; results are assembled in a fixed order.
  auto spectral = std::async(std::launch::async, [&] { return spectral_order(mask, options.max_order); });
  auto sumrule = std::async(std::launch::async, [&] { return sumrule_order(mask, options.max_order); });
  auto lemma4 = std::async(std::launch::async, [&] { return lemma4_crosscheck(mask); });

  r.inferred_tau = infer_tau(mask);
  r.reproduction_tau = options.tau ? options.tau : r.inferred_tau;
  r.reproduction_tau_inferred = !options.tau.has_value() && r.inferred_tau.has_value();
  if (r.reproduction_tau) r.reproduction_order = reproduction_order(mask, *r.reproduction_tau, options.max_order);

  r.spectral = spectral.get();
  r.sumrule = sumrule.get();
  r.lemma4 = lemma4.get();

  if (r.reproduction_tau_inferred && r.reproduction_order &&
      static_cast<int>(*r.reproduction_order) > r.spectral.order) {
    throw std::logic_error("reproduction order exceeds spectral order at the inferred parametrization");
  }

  if (options.derham && !nested) {
    r.derham_requested = true;
    const Mask transformed = derham(mask);
    if (!transformed.is_zero()) {
      AnalyzeOptions sub = options;
      sub.derham = false;
      sub.tau = r.reproduction_tau ? std::optional<Rational>(derham_tau(*r.reproduction_tau)) : std::nullopt;
      r.derham = std::make_shared<const AnalysisReport>(analyze_impl(transformed, "derham(" + source + ")", sub, true));
    }
  }
  return r;
}

}  // namespace

AnalysisReport analyze(const Mask& mask, const std::string& source, const AnalyzeOptions& options) {
  return analyze_impl(mask, source, options, false);
}

Json poly_to_json(const RatPoly& p) { return rational_list(p.coefficients()); }

Json spectral_to_json(const SpectralReport& report) {
  Json degrees = Json::array();
  for (const auto& d : report.degrees) {
    Json e;
    e["k"] = d.k;
    e["status"] = d.solved ? "solved" : "infeasible";
    e["particular"] = d.particular ? poly_to_json(*d.particular) : Json(nullptr);
    e["homogeneous_dim"] = d.homogeneous_dim();
    degrees.push_back(std::move(e));
  }
  Json polys = Json::array();
  for (const auto& p : report.polynomials()) polys.push_back(poly_to_json(p));
  Json out;
  out["order"] = report.order;
  out["polynomials"] = std::move(polys);
  out["degrees"] = std::move(degrees);
  return out;
}

Json witness_to_json(const MomentWitness& w) {
  Json nu = Json::array();
  for (const auto& v : w.nu) nu.push_back(rational_list(v));
  Json out;
  out["order"] = w.ell;
  out["sigma"] = w.sigma;
  out["nu"] = std::move(nu);
  return out;
}

Json report_to_json(const AnalysisReport& r) {
  Json out;
  out["source"] = r.source;
  out["d"] = r.d;
  out["support"] = Json::array({r.support.lo, r.support.hi});
  out["interpolatory"] = r.interpolatory;
  out["mirror_symmetric"] = r.mirror_symmetric;
  out["spectral"] = spectral_to_json(r.spectral);
  out["inferred_tau"] = optional_rational(r.inferred_tau);

  Json repro;
  repro["tau"] = optional_rational(r.reproduction_tau);
  repro["tau_source"] = r.reproduction_tau_inferred ? "inferred" : (r.reproduction_tau ? "given" : "none");
  repro["order"] = r.reproduction_order ? Json(*r.reproduction_order) : Json(nullptr);
  out["reproduction"] = std::move(repro);

  Json sr;
  sr["order"] = r.sumrule.order;
  sr["sigma"] = r.sumrule.sigma;
  sr["below_minimal"] = r.sumrule.below_minimal(r.d);
  sr["witness"] = r.sumrule.witness ? witness_to_json(*r.sumrule.witness) : Json(nullptr);
  out["sumrule"] = std::move(sr);

  Json l4;
  l4["spectral_minimal"] = r.lemma4.spectral_minimal;
  l4["sumrule_minimal"] = r.lemma4.sumrule_minimal;
  l4["consistent"] = r.lemma4.consistent;
  out["minimal_orders"] = std::move(l4);

  if (r.derham_requested) out["derham"] = r.derham ? report_to_json(*r.derham) : Json(nullptr);
  return out;
}

std::string report_summary(const AnalysisReport& r) {
  std::ostringstream s;
  s << r.source << ": d=" << r.d << ", support [" << r.support.lo << ", " << r.support.hi << "]"
    << (r.interpolatory ? ", interpolatory" : "") << '\n';
  s << "  spectral order " << r.spectral.order;
  const auto polys = r.spectral.polynomials();
  for (std::size_t k = 0; k < polys.size(); ++k) s << (k == 0 ? ": " : ", ") << polys[k].to_string();
  s << '\n';
  if (r.reproduction_tau) {
    s << "  reproduces Pi_" << (r.reproduction_order ? std::to_string(*r.reproduction_order) : std::string("(none)"))
      << " w.r.t. tau=" << r.reproduction_tau->to_string() << (r.reproduction_tau_inferred ? " (inferred)" : "")
      << '\n';
  } else {
    s << "  no parametrization inferred\n";
  }
  s << "  special sum rule order " << r.sumrule.order << " (sigma=" << r.sumrule.sigma << ")";
  if (r.sumrule.order > r.spectral.order) s << " > spectral order: sum rule does not imply spectral condition";
  s << '\n';
  s << "  minimal spectral " << (r.lemma4.spectral_minimal ? "yes" : "no") << " / minimal sum rule "
    << (r.lemma4.sumrule_minimal ? "yes" : "no") << (r.lemma4.consistent ? " (consistent)" : " (INCONSISTENT)")
    << '\n';
  if (r.derham) {
    std::istringstream nested(report_summary(*r.derham));
    for (std::string line; std::getline(nested, line);) s << "  | " << line << '\n';
  } else if (r.derham_requested) {
    s << "  de Rham transform is the zero mask\n";
  }
  return s.str();
}

}  // namespace hermite

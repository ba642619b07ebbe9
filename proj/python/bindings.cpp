// Rationals cross the boundary as canonical strings; the Python package
// turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermite/derham.hpp"
#include "hermite/errors.hpp"
#include "hermite/operator.hpp"
#include "hermite/report.hpp"
#include "hermite/spectral.hpp"
#include "hermite/sumrule.hpp"

namespace py = pybind11;
using namespace hermite;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;
using StrVector = std::vector<std::string>;

StrVector to_strings(const RatVector& v) {
  StrVector out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

RatVector from_strings(const StrVector& v) {
  RatVector out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

StrMatrix matrix_to_strings(const RatMatrix& m) {
  StrMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).to_string());
  return out;
}

Mask mask_from_strings(unsigned d, long support_min, const std::vector<StrMatrix>& coeffs) {
  std::vector<RatMatrix> mats;
  for (const auto& m : coeffs) {
    std::vector<Rational> entries;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (const auto& row : m) {
      if (row.size() != cols) throw DimensionError("ragged coefficient matrix");
      for (const auto& s : row) entries.push_back(Rational::parse(s));
    }
    mats.emplace_back(m.size(), cols, std::move(entries));
  }
  return Mask(d, support_min, std::move(mats));
}

HermiteSequence sequence_from(unsigned d, long offset, const std::vector<StrVector>& values) {
  std::vector<RatVector> vals;
  for (const auto& v : values) vals.push_back(from_strings(v));
  return HermiteSequence(d, offset, std::move(vals));
}

py::dict witness_dict(const MomentWitness& w) {
  py::dict out;
  out["order"] = w.ell;
  out["sigma"] = w.sigma;
  std::vector<StrVector> nu;
  for (const auto& v : w.nu) nu.push_back(to_strings(v));
  out["nu"] = nu;
  return out;
}

Extension extension_of(bool truncated) { return truncated ? Extension::truncated : Extension::zero; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of Hermite subdivision masks";

  auto base = py::register_exception<Error>(m, "HermiteError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());

  py::class_<Mask>(m, "Mask")
      .def(py::init(&mask_from_strings), py::arg("d"), py::arg("support_min"), py::arg("coefficients"))
      .def_property_readonly("d", &Mask::d)
      .def_property_readonly("support", [](const Mask& mk) { return std::pair{mk.support_min(), mk.support_max()}; })
      .def_property_readonly("is_zero", &Mask::is_zero)
      .def("coefficients",
           [](const Mask& mk) {
             std::vector<StrMatrix> out;
             for (const auto& c : mk.coefficients()) out.push_back(matrix_to_strings(c));
             return out;
           })
      .def("to_json", &serialize_mask)
      .def_static("from_json", [](const std::string& text) { return parse_mask(text); })
      .def("__eq__", [](const Mask& a, const Mask& b) { return a == b; })
      .def("__repr__", [](const Mask& mk) {
        return "Mask(d=" + std::to_string(mk.d()) + ", support=[" + std::to_string(mk.support_min()) + ", " +
               std::to_string(mk.support_max()) + "])";
      });

  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name) { return catalog(name); });
  m.def("is_interpolatory", &is_interpolatory);
  m.def("is_mirror_symmetric", &is_mirror_symmetric);

  m.def(
      "spectral_order",
      [](const Mask& mk, unsigned k_max) {
        const SpectralReport r = spectral_order(mk, k_max);
        py::dict out;
        out["order"] = r.order;
        std::vector<StrVector> polys;
        for (const auto& p : r.polynomials()) polys.push_back(to_strings(p.coefficients()));
        out["polynomials"] = polys;
        py::list degrees;
        for (const auto& d : r.degrees) {
          py::dict e;
          e["k"] = d.k;
          e["solved"] = d.solved;
          e["homogeneous_dim"] = d.homogeneous_dim();
          degrees.append(e);
        }
        out["degrees"] = degrees;
        return out;
      },
      py::arg("mask"), py::arg("k_max") = 8);
  m.def("check_spectral", [](const Mask& mk, const StrVector& coeffs, unsigned k) {
    return check_spectral(mk, RatPoly(from_strings(coeffs)), k);
  });
  m.def("check_shifted_monomial", [](const Mask& mk, const std::string& tau, unsigned ell) {
    return check_shifted_monomial(mk, Rational::parse(tau), ell);
  });
  m.def("reproduction_order", [](const Mask& mk, const std::string& tau, unsigned ell_max) {
    return reproduction_order(mk, Rational::parse(tau), ell_max);
  });
  m.def("infer_tau", [](const Mask& mk) -> std::optional<std::string> {
    const auto t = infer_tau(mk);
    if (!t) return std::nullopt;
    return t->to_string();
  });
  m.def("synthesize_mask", [](unsigned d, const std::string& tau, unsigned ell, long lo, long hi) {
    return synthesize_mask(d, Rational::parse(tau), ell, {lo, hi});
  });

  m.def("derham", &derham);
  m.def("derham_tau", [](const std::string& tau) { return derham_tau(Rational::parse(tau)).to_string(); });
  m.def("verify_lemma3", [](const Mask& mk, const std::string& tau, unsigned ell) {
    return verify_lemma3(mk, Rational::parse(tau), ell);
  });
  m.def("conv2", &conv2);

  m.def("sumrule_feasible", [](const Mask& mk, unsigned ell, int sigma) -> std::optional<py::dict> {
    const auto w = sumrule_feasible(mk, ell, sigma);
    if (!w) return std::nullopt;
    return witness_dict(*w);
  });
  m.def(
      "sumrule_order",
      [](const Mask& mk, unsigned ell_max) {
        const SumRuleOrder r = sumrule_order(mk, ell_max);
        py::dict out;
        out["order"] = r.order;
        out["sigma"] = r.sigma;
        out["witness"] = r.witness ? py::object(witness_dict(*r.witness)) : py::none();
        return out;
      },
      py::arg("mask"), py::arg("ell_max") = 9);

  m.def(
      "analyze_json",
      [](const Mask& mk, const std::string& source, unsigned max_order, std::optional<std::string> tau, bool with_derham) {
        AnalyzeOptions opt;
        opt.max_order = max_order;
        if (tau) opt.tau = Rational::parse(*tau);
        opt.derham = with_derham;
        return report_to_json(analyze(mk, source, opt)).dump();
      },
      py::arg("mask"), py::arg("source") = "python", py::arg("max_order") = 8, py::arg("tau") = py::none(),
      py::arg("derham") = false);

  m.def(
      "hermite_iterate",
      [](const Mask& mk, long offset, const std::vector<StrVector>& values, unsigned n, const std::string& tau,
         bool truncated) {
        const auto f = hermite_iterate(mk, sequence_from(mk.d(), offset, values), n, Rational::parse(tau),
                                       extension_of(truncated));
        std::vector<StrVector> vals;
        for (const auto& v : f.sequence.values()) vals.push_back(to_strings(v));
        return std::pair{f.sequence.offset(), vals};
      },
      py::arg("mask"), py::arg("offset"), py::arg("values"), py::arg("levels"), py::arg("tau") = "0",
      py::arg("truncated") = false);
  m.def(
      "sample_hermite",
      [](const StrVector& coeffs, unsigned d, const std::string& tau, long lo, long hi) {
        const auto s = sample_hermite(RatPoly(from_strings(coeffs)), d, Rational::parse(tau), {lo, hi});
        std::vector<StrVector> vals;
        for (const auto& v : s.values()) vals.push_back(to_strings(v));
        return std::pair{s.offset(), vals};
      });
  m.def(
      "pullback_window",
      [](const Mask& mk, long lo, long hi, unsigned n) {
        const auto w = pullback_window(mk, {lo, hi}, n);
        return std::pair{w.lo, w.hi};
      });
  m.def(
      "limit_samples",
      [](const Mask& mk, long offset, const std::vector<StrVector>& values, unsigned levels, const std::string& tau,
         bool truncated) {
        std::vector<std::pair<std::string, StrVector>> out;
        for (const auto& row : limit_samples(mk, sequence_from(mk.d(), offset, values), levels, Rational::parse(tau),
                                             extension_of(truncated)))
          out.emplace_back(row.x.to_string(), to_strings(row.value));
        return out;
      },
      py::arg("mask"), py::arg("offset"), py::arg("values"), py::arg("levels"), py::arg("tau") = "0",
      py::arg("truncated") = false);
}

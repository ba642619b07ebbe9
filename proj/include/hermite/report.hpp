#pragma once

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

#include "hermite/mask.hpp"
#include "hermite/poly.hpp"
#include "hermite/spectral.hpp"
#include "hermite/sumrule.hpp"

namespace hermite {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  unsigned max_order = 8;
  /// Parametrization for the reproduction check; the inferred τ when unset.
  std::optional<Rational> tau;
  bool derham = false;
};

/// Everything `analyze` computes for one mask.
struct AnalysisReport {
  std::string source;
  unsigned d = 1;
  IndexRange support;
  bool interpolatory = false;
  bool mirror_symmetric = false;
  SpectralReport spectral;
  std::optional<Rational> inferred_tau;
  std::optional<Rational> reproduction_tau;
  bool reproduction_tau_inferred = false;
  std::optional<unsigned> reproduction_order;
  SumRuleOrder sumrule;
  Lemma4Report lemma4;
  /// Present when requested; null inside when the transform is the zero mask.
  std::shared_ptr<const AnalysisReport> derham;
  bool derham_requested = false;
};

/// Runs the spectral, reproduction, sum-rule and (optionally) de Rham
/// analyses. Throws DomainError if max_order < d, and std::logic_error if
/// reproduction at the inferred τ exceeds the spectral order.
AnalysisReport analyze(const Mask& mask, const std::string& source, const AnalyzeOptions& options);

Json poly_to_json(const RatPoly& p);
Json spectral_to_json(const SpectralReport& report);
Json witness_to_json(const MomentWitness& w);
Json report_to_json(const AnalysisReport& report);

/// Multi-line human summary mirroring the implication diagrams.
std::string report_summary(const AnalysisReport& report);

}  // namespace hermite

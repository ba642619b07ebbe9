// Command-line front end for Hermite subdivision mask analysis.
//
//   hermite info <mask>
//   hermite analyze <mask> [--max-order K] [--tau q] [--derham]
//   hermite simulate <mask> --levels n [--initial delta:s|poly:k] [--tau q] [--csv path]
//   hermite derham <mask> [-o path]
//   hermite catalog list | show <name>
//
// A mask source is a JSON file path or `catalog:<name>`; a bare catalog
// name is accepted when no file of that name exists.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 infeasible request.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hermite/derham.hpp"
#include "hermite/errors.hpp"
#include "hermite/mask.hpp"
#include "hermite/operator.hpp"
#include "hermite/report.hpp"

namespace {

using namespace hermite;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Mask load_mask(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog(source.substr(prefix.size()));
  if (!std::filesystem::exists(source)) {
    for (const auto& name : catalog_names()) {
      if (name == source) return catalog(name);
    }
    throw ParseError("no such mask file or catalog entry", source);
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw ParseError("cannot open file", source);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_mask(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), source);
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file", path);
  out << text;
}

Rational parse_tau(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--tau: ") + e.what());
  }
}

int run_info(const std::string& source) {
  const Mask mask = load_mask(source);
  Json out;
  out["source"] = source;
  out["d"] = mask.d();
  out["support"] = Json::array({mask.support_min(), mask.support_max()});
  out["interpolatory"] = is_interpolatory(mask);
  out["mirror_symmetric"] = is_mirror_symmetric(mask);
  std::cout << out.dump(2) << '\n';
  std::cerr << source << ": d=" << mask.d() << ", support [" << mask.support_min() << ", " << mask.support_max()
            << "], interpolatory=" << (is_interpolatory(mask) ? "true" : "false") << '\n';
  return 0;
}

int run_analyze(const std::string& source, unsigned max_order, const std::string& tau, bool with_derham) {
  const Mask mask = load_mask(source);
  AnalyzeOptions options;
  options.max_order = max_order;
  options.derham = with_derham;
  if (!tau.empty()) options.tau = parse_tau(tau);
  if (max_order < mask.d()) throw UsageError("--max-order must be at least d = " + std::to_string(mask.d()));
  const AnalysisReport report = analyze(mask, source, options);
  std::cout << report_to_json(report).dump(2) << '\n';
  std::cerr << report_summary(report);
  return 0;
}

struct InitialSpec {
  bool is_poly = false;
  unsigned value = 0;
};

InitialSpec parse_initial(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (colon == std::string::npos || (kind != "delta" && kind != "poly")) {
    throw UsageError("--initial expects delta:<component> or poly:<degree>");
  }
  try {
    std::size_t used = 0;
    const int v = std::stoi(text.substr(colon + 1), &used);
    if (v < 0 || used != text.size() - colon - 1) throw std::invalid_argument("negative");
    return {kind == "poly", static_cast<unsigned>(v)};
  } catch (const std::logic_error&) {
    throw UsageError("--initial: malformed number in '" + text + "'");
  }
}

IndexRange parse_window(const std::string& text, unsigned levels) {
  if (text.empty()) return {0, 1L << levels};
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("colon");
    return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("--window expects lo:hi");
  }
}

int run_simulate(const std::string& source, unsigned levels, const std::string& initial_text, const std::string& tau_text,
                 const std::string& csv_path, const std::string& probe_path, int digits, const std::string& window) {
  const Mask mask = load_mask(source);
  if (levels < 1) throw UsageError("--levels must be at least 1");
  if (digits < 1) throw UsageError("--digits must be positive");
  const Rational tau = tau_text.empty() ? Rational(0) : parse_tau(tau_text);
  const InitialSpec init = parse_initial(initial_text);

  HermiteSequence c0(mask.d());
  Extension ext = Extension::zero;
  if (init.is_poly) {
    const IndexRange target = parse_window(window, levels);
    if (target.empty()) throw UsageError("--window is empty");
    const IndexRange input = pullback_window(mask, target, levels);
    c0 = sample_hermite(RatPoly::monomial(init.value, Rational(1) / factorial(init.value)), mask.d(), tau, input);
    ext = Extension::truncated;
  } else {
    if (init.value > mask.d()) throw UsageError("--initial delta component exceeds d");
    c0 = HermiteSequence::delta(mask.d(), 0, init.value);
  }

  const auto rows = limit_samples(mask, c0, levels, tau, ext);
  write_output(csv_path, samples_to_csv(rows, mask.d(), digits));
  if (!probe_path.empty()) {
    if (levels < 2) throw UsageError("--probe needs --levels >= 2");
    write_output(probe_path, probe_to_csv(convergence_probe(mask, c0, levels, ext), digits));
  }
  std::cerr << "wrote " << rows.size() << " rows at level " << levels << '\n';
  return 0;
}

int run_derham(const std::string& source, const std::string& out_path) {
  const Mask transformed = derham(load_mask(source));
  if (transformed.is_zero()) throw InfeasibleError("the de Rham transform is the zero mask");
  write_output(out_path, serialize_mask(transformed));
  std::cerr << "de Rham transform support [" << transformed.support_min() << ", " << transformed.support_max()
            << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of Hermite subdivision masks"};
  app.require_subcommand(1);

  std::string source;
  unsigned max_order = 8;
  std::string tau;
  bool with_derham = false;
  unsigned levels = 1;
  std::string initial = "delta:0";
  std::string csv_path;
  std::string probe_path;
  int digits = 17;
  std::string window;
  std::string out_path;
  std::string catalog_name;

  auto* info = app.add_subcommand("info", "Print d, support, interpolatory and symmetry flags");
  info->add_option("mask", source, "Mask file or catalog:<name>")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Spectral, reproduction, sum-rule and de Rham report (JSON)");
  analyze_cmd->add_option("mask", source, "Mask file or catalog:<name>")->required();
  analyze_cmd->add_option("--max-order", max_order, "Highest order probed (default 8)");
  analyze_cmd->add_option("--tau", tau, "Parametrization for the reproduction check, e.g. -1/2 (default: inferred)");
  analyze_cmd->add_flag("--derham", with_derham, "Include a report for the de Rham transform at (3*tau-1)/2");

  auto* simulate = app.add_subcommand(
      "simulate",
      "Exact Hermite iteration c[n] = D^-n S^n c[0], exported as CSV.\n"
      "The operator is applied as (S c)_j = sum_k A_{j-2k} c_k, summing over the input index k.\n"
      "delta:s starts from the unit vector e_s at index 0 (zero elsewhere); poly:k samples\n"
      "x^k/k! and its derivatives at j+tau on the window needed for exact level-n values.");
  simulate->add_option("mask", source, "Mask file or catalog:<name>")->required();
  simulate->add_option("--levels", levels, "Number of subdivision levels")->required();
  simulate->add_option("--initial", initial, "delta:<component> or poly:<degree> (default delta:0)");
  simulate->add_option("--tau", tau, "Parametrization, abscissa of entry j is (j+tau)/2^n (default 0)");
  simulate->add_option("--csv", csv_path, "Output CSV path (default stdout)");
  simulate->add_option("--probe", probe_path, "Also write per-level convergence deviations to this CSV");
  simulate->add_option("--digits", digits, "Significant digits in decimal output (default 17)");
  simulate->add_option("--window", window, "Level-n index window lo:hi for poly data (default 0:2^n)");

  auto* derham_cmd = app.add_subcommand("derham", "Write the de Rham transform as a mask file");
  derham_cmd->add_option("mask", source, "Mask file or catalog:<name>")->required();
  derham_cmd->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in masks");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list = catalog_cmd->add_subcommand("list", "List catalog names");
  auto* catalog_show = catalog_cmd->add_subcommand("show", "Print a catalog mask as JSON");
  catalog_show->add_option("name", catalog_name, "Catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) return run_info(source);
    if (*analyze_cmd) return run_analyze(source, max_order, tau, with_derham);
    if (*simulate) return run_simulate(source, levels, initial, tau, csv_path, probe_path, digits, window);
    if (*derham_cmd) return run_derham(source, out_path);
    if (*catalog_list) {
      for (const auto& name : catalog_names()) std::cout << name << '\n';
      return 0;
    }
    if (*catalog_show) {
      std::cout << serialize_mask(catalog(catalog_name));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInfeasible;
  }
  return kExitUsage;
}

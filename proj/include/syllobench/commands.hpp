#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "syllobench/analysis.hpp"
#include "syllobench/dataset.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/harness.hpp"
#include "syllobench/io.hpp"
#include "syllobench/registry.hpp"
#include "syllobench/synthetic.hpp"

namespace syllobench {

namespace detail {

inline std::filesystem::path out_file(const std::string& dir, const char* name) {
  return std::filesystem::path(dir) / name;
}

inline nlohmann::json options_json(const std::vector<std::string>& models,
                                   const ModelOptions& opts, int jobs) {
  nlohmann::json j;
  j["models"] = models;
  j["tie_break"] = opts.tie_break == TieBreak::Canonical ? "canonical" : "random";
  if (opts.top_k)
    j["top_k"] = *opts.top_k;
  else
    j["top_k"] = nullptr;
  j["jobs"] = jobs;
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOptions {
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out = "./out";
};

/// Writes the 256-profile population, with noise applied, to
/// <out>/dataset.csv.
inline void cmd_gen(const GenOptions& opts, std::ostream& log = std::cout) {
  if (!(opts.noise >= 0.0 && opts.noise <= 1.0))
    throw UsageError("--noise must lie in [0,1], got " + std::to_string(opts.noise));
  const Dataset ds = inject_noise(generate_population(), {opts.noise, opts.seed});
  const auto path = detail::out_file(opts.out, "dataset.csv");
  save_dataset(ds, path.string());
  std::size_t rows = 0;
  for (const ReasonerProfile& p : ds) rows += p.records.size();
  log << "wrote " << path.string() << " (" << ds.size() << " subjects, " << rows << " rows)\n";
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunCmdOptions {
  std::string data;
  std::vector<std::string> models = builtin_model_names();
  std::uint64_t seed = 0;
  std::string out = "./out";
  int jobs = 0;
  ModelOptions model_opts;
};

/// Leave-one-out benchmark over the requested models; writes trials.csv and
/// summary.json to the output directory.
inline void cmd_run(const RunCmdOptions& opts, std::ostream& log = std::cout) {
  const std::vector<ModelFactory> factories = make_model_factories(opts.models, opts.model_opts);
  const Dataset ds = load_dataset(opts.data);
  const BenchmarkResult result = run_loo(ds, factories, {opts.seed, opts.jobs});

  nlohmann::json config = detail::options_json(opts.models, opts.model_opts, opts.jobs);
  config["command"] = "run";
  config["data"] = opts.data;
  config["out"] = opts.out;
  config["seed"] = opts.seed;
  save_results(result, opts.out, config, opts.seed);

  for (const ModelSummary& s : result.summaries)
    log << s.model_id << ": " << detail::format_double(s.overall.accuracy()) << " over "
        << s.overall.n << " trials\n";
  log << "wrote " << detail::out_file(opts.out, "trials.csv").string() << " and "
      << detail::out_file(opts.out, "summary.json").string() << "\n";
}

// ---------------------------------------------------------------------------
// entropy
// ---------------------------------------------------------------------------

struct EntropyCmdOptions {
  std::string data;
  std::string trials;  // optional: join with a trials.csv for the curve
  int bins = 8;
  std::string out = "./out";
};

/// Per-task entropy table; with --trials also the entropy-vs-accuracy curve
/// (binned means plus the raw scatter).
inline void cmd_entropy(const EntropyCmdOptions& opts, std::ostream& log = std::cout) {
  if (opts.bins < 1) throw UsageError("--bins must be at least 1");
  const Dataset ds = load_dataset(opts.data);
  const std::vector<TaskEntropy> report = entropy_report(ds);
  if (report.empty()) throw ConfigError(opts.data + ": no responses to analyze");
  const auto entropy_path = detail::out_file(opts.out, "entropy.csv");
  save_entropy_report(report, entropy_path.string());

  double mean = 0.0;
  for (const TaskEntropy& e : report) mean += e.entropy;
  mean /= static_cast<double>(report.size());
  log << "wrote " << entropy_path.string() << " (" << report.size()
      << " tasks, mean entropy " << detail::format_double(mean) << " bits)\n";

  if (opts.trials.empty()) return;
  BenchmarkResult result;
  result.trials = load_trials(opts.trials);
  result.summaries = accuracy_summary(result.trials);
  const EntropyCurve curve = entropy_accuracy_curve(result, ds, opts.bins);
  const auto curve_path = detail::out_file(opts.out, "entropy_curve.csv");
  const auto scatter_path = detail::out_file(opts.out, "entropy_scatter.csv");
  save_curve(curve.binned, curve_path.string());
  save_scatter(curve.scatter, scatter_path.string());
  log << "wrote " << curve_path.string() << " and " << scatter_path.string() << "\n";
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

inline std::vector<double> default_noise_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

/// Parses a comma-separated noise grid. Empty input and empty or non-numeric
/// tokens are usage errors, so `--grid ''` cannot silently mean the default.
inline std::vector<double> parse_noise_grid(std::string_view csv) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string token(csv.substr(start, end - start));
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) throw UsageError("--grid lists an empty value");
    std::size_t parsed = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &parsed);
    } catch (const std::exception&) {
      throw UsageError("--grid value \"" + token + "\" is not a number");
    }
    if (parsed != token.size())
      throw UsageError("--grid value \"" + token + "\" is not a number");
    grid.push_back(value);
    start = end + 1;
  }
  return grid;
}

inline const std::vector<std::string>& default_curve_models() {
  static const std::vector<std::string> models = {"ubcf", "ibcf", "ubcf-fit", "ibcf-fit"};
  return models;
}

struct CurveCmdOptions {
  std::vector<double> grid = default_noise_grid();
  std::vector<std::string> models = default_curve_models();
  std::uint64_t seed = 0;
  std::string out = "./out";
  int jobs = 0;
  ModelOptions model_opts;
};

/// Generates the population once, sweeps the noise grid, and writes the
/// noise-axis and entropy-axis curves.
inline void cmd_curve(const CurveCmdOptions& opts, std::ostream& log = std::cout) {
  if (opts.grid.empty()) throw UsageError("--grid must list at least one noise proportion");
  for (double p : opts.grid)
    if (!(p >= 0.0 && p <= 1.0))
      throw UsageError("--grid values must lie in [0,1], got " + std::to_string(p));
  const std::vector<ModelFactory> factories = make_model_factories(opts.models, opts.model_opts);
  const Dataset population = generate_population();
  const std::vector<NoisePoint> points =
      noise_accuracy_curve(population, opts.grid, factories, {opts.seed, opts.jobs});

  const auto noise_path = detail::out_file(opts.out, "curve.csv");
  const auto entropy_path = detail::out_file(opts.out, "curve_entropy.csv");
  save_noise_curve(points, noise_path.string(), NoiseCurveAxis::Proportion);
  save_noise_curve(points, entropy_path.string(), NoiseCurveAxis::MeanEntropy);
  log << "wrote " << noise_path.string() << " and " << entropy_path.string() << " ("
      << points.size() << " rows each)\n";
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct ValidateCmdOptions {
  std::string data;
};

/// Loads and validates a dataset file, reporting its shape.
inline void cmd_validate(const ValidateCmdOptions& opts, std::ostream& log = std::cout) {
  const Dataset ds = load_dataset(opts.data);
  validate_dataset(ds);
  std::size_t rows = 0;
  std::size_t complete = 0;
  for (const ReasonerProfile& p : ds) {
    rows += p.records.size();
    if (p.records.size() == kTaskCount) ++complete;
  }
  log << opts.data << ": OK (" << ds.size() << " subjects, " << rows << " rows, " << complete
      << " complete profiles)\n";
}

}  // namespace syllobench

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "syllobench/analysis.hpp"
#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/harness.hpp"

namespace syllobench {

inline constexpr std::string_view kVersion = "0.1.0";

namespace detail {

/// Shortest stable decimal form: enough digits for the values we emit
/// (probabilities, accuracies, grid points), always C-locale.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i)
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

inline int parse_int(std::string_view s, const std::string& context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(context + ": invalid integer \"" + std::string(s) + "\"");
  return value;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dataset CSV
// ---------------------------------------------------------------------------

inline constexpr std::string_view kDatasetHeader = "subject,seq,task,response";

/// Loads a dataset CSV. Profiles keep the subject order of first appearance
/// and the row order within each subject; errors cite 1-based line numbers.
inline Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open dataset: " + path);

  Dataset ds;
  std::unordered_map<std::string, std::size_t> index_of;
  std::unordered_map<std::string, std::unordered_set<int>> tasks_of;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kDatasetHeader)
        throw ParseError(path + ":1: expected header \"" + std::string(kDatasetHeader) + "\"");
      continue;
    }
    if (line.empty()) continue;
    const std::string context = path + ":" + std::to_string(line_no);
    const auto fields = detail::split_fields(line);
    if (fields.size() != 4)
      throw ParseError(context + ": expected 4 fields, got " + std::to_string(fields.size()));

    const std::string subject(fields[0]);
    if (subject.empty()) throw ParseError(context + ": empty subject id");
    const int seq = detail::parse_int(fields[1], context);
    SyllogisticTask task;
    ResponseOption response;
    try {
      task = parse_task(fields[2]);
      response = parse_response(fields[3]);
    } catch (const ParseError& e) {
      throw ParseError(context + ": " + e.what());
    }

    auto [it, inserted] = index_of.try_emplace(subject, ds.size());
    if (inserted) ds.push_back({subject, {}});
    ReasonerProfile& profile = ds[it->second];
    if (!profile.records.empty() && seq <= profile.records.back().seq)
      throw ParseError(context + ": seq " + std::to_string(seq) +
                       " does not increase for subject \"" + subject + "\"");
    if (!tasks_of[subject].insert(task_index(task)).second)
      throw ParseError(context + ": task " + task_code(task) + " repeated for subject \"" +
                       subject + "\"");
    profile.records.push_back({seq, task, response});
  }
  if (line_no == 0) throw ParseError(path + ": empty file, expected a header row");
  return ds;
}

inline void save_dataset(const Dataset& ds, const std::string& path) {
  for (const ReasonerProfile& p : ds)
    if (p.subject_id.find_first_of(",\"\r\n") != std::string::npos)
      throw ValidationError("subject id \"" + p.subject_id + "\" contains CSV metacharacters");
  std::ofstream out = detail::open_output(path);
  out << kDatasetHeader << '\n';
  for (const ReasonerProfile& p : ds)
    for (const TrialRecord& r : p.records)
      out << p.subject_id << ',' << r.seq << ',' << task_code(r.task) << ','
          << response_code(r.response) << '\n';
  if (!out) throw ConfigError("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Benchmark results
// ---------------------------------------------------------------------------

inline constexpr std::string_view kTrialsHeader = "model,subject,seq,task,prediction,truth,hit";

inline void save_trials(const std::vector<TrialOutcome>& trials, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  out << kTrialsHeader << '\n';
  for (const TrialOutcome& t : trials)
    out << t.model_id << ',' << t.subject_id << ',' << t.seq << ',' << task_code(t.task) << ','
        << response_code(t.prediction) << ',' << response_code(t.truth) << ',' << (t.hit ? 1 : 0)
        << '\n';
  if (!out) throw ConfigError("write failed: " + path);
}

inline std::vector<TrialOutcome> load_trials(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open trials file: " + path);
  std::vector<TrialOutcome> trials;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kTrialsHeader)
        throw ParseError(path + ":1: expected header \"" + std::string(kTrialsHeader) + "\"");
      continue;
    }
    if (line.empty()) continue;
    const std::string context = path + ":" + std::to_string(line_no);
    const auto fields = detail::split_fields(line);
    if (fields.size() != 7)
      throw ParseError(context + ": expected 7 fields, got " + std::to_string(fields.size()));
    TrialOutcome t;
    t.model_id = std::string(fields[0]);
    t.subject_id = std::string(fields[1]);
    t.seq = detail::parse_int(fields[2], context);
    try {
      t.task = parse_task(fields[3]);
      t.prediction = parse_response(fields[4]);
      t.truth = parse_response(fields[5]);
    } catch (const ParseError& e) {
      throw ParseError(context + ": " + e.what());
    }
    const int hit = detail::parse_int(fields[6], context);
    if (hit != 0 && hit != 1) throw ParseError(context + ": hit must be 0 or 1");
    t.hit = hit != 0;
    if (t.hit != (t.prediction == t.truth))
      throw ValidationError(context + ": hit flag contradicts prediction/truth");
    trials.push_back(t);
  }
  if (line_no == 0) throw ParseError(path + ": empty file, expected a header row");
  return trials;
}

/// Writes trials.csv and summary.json into dir. config is echoed verbatim
/// into the summary; nlohmann keeps object keys sorted, so output bytes are
/// stable for a given result.
inline void save_results(const BenchmarkResult& result, const std::string& dir,
                         const nlohmann::json& config, std::uint64_t seed) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  save_trials(result.trials, (fs::path(dir) / "trials.csv").string());

  nlohmann::json models = nlohmann::json::object();
  for (const ModelSummary& s : result.summaries) {
    nlohmann::json per_task = nlohmann::json::object();
    for (const auto& [code, g] : s.per_task)
      per_task[code] = {{"accuracy", g.accuracy()}, {"n", g.n}};
    nlohmann::json per_subject = nlohmann::json::object();
    for (const auto& [id, g] : s.per_subject)
      per_subject[id] = {{"accuracy", g.accuracy()}, {"n", g.n}};
    models[s.model_id] = {{"accuracy", s.overall.accuracy()},
                          {"n", s.overall.n},
                          {"per_task", per_task},
                          {"per_subject", per_subject}};
  }
  const nlohmann::json summary = {{"config", config},
                                  {"models", models},
                                  {"seed", seed},
                                  {"version", std::string(kVersion)}};
  std::ofstream out = detail::open_output(fs::path(dir) / "summary.json");
  out << summary.dump(2) << '\n';
  if (!out) throw ConfigError("write failed: " + (fs::path(dir) / "summary.json").string());
}

// ---------------------------------------------------------------------------
// Analysis outputs
// ---------------------------------------------------------------------------

/// Per-task entropy table: task, sample size, entropy, then the nine
/// response probabilities.
inline void save_entropy_report(const std::vector<TaskEntropy>& report, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  out << "task,n,entropy";
  for (ResponseOption r : all_responses()) out << ",p_" << response_code(r);
  out << '\n';
  for (const TaskEntropy& e : report) {
    out << task_code(e.task) << ',' << e.n << ',' << detail::format_double(e.entropy);
    for (double p : e.p) out << ',' << detail::format_double(p);
    out << '\n';
  }
  if (!out) throw ConfigError("write failed: " + path);
}

inline void save_curve(const std::vector<CurvePoint>& points, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  out << "x,model,accuracy,n\n";
  for (const CurvePoint& p : points)
    out << detail::format_double(p.x) << ',' << p.model_id << ','
        << detail::format_double(p.accuracy) << ',' << p.n << '\n';
  if (!out) throw ConfigError("write failed: " + path);
}

inline void save_scatter(const std::vector<ScatterPoint>& points, const std::string& path) {
  std::ofstream out = detail::open_output(path);
  out << "task,entropy,model,accuracy,n\n";
  for (const ScatterPoint& p : points)
    out << task_code(p.task) << ',' << detail::format_double(p.entropy) << ',' << p.model_id
        << ',' << detail::format_double(p.accuracy) << ',' << p.n << '\n';
  if (!out) throw ConfigError("write failed: " + path);
}

/// Noise sweep in the standard curve layout. x_axis picks which quantity
/// lands in the x column: the injected proportion or the resulting mean
/// entropy of the corrupted population.
enum class NoiseCurveAxis { Proportion, MeanEntropy };

inline void save_noise_curve(const std::vector<NoisePoint>& points, const std::string& path,
                             NoiseCurveAxis axis) {
  std::ofstream out = detail::open_output(path);
  out << "x,model,accuracy,n\n";
  for (const NoisePoint& p : points)
    out << detail::format_double(axis == NoiseCurveAxis::Proportion ? p.noise : p.mean_entropy)
        << ',' << p.model_id << ',' << detail::format_double(p.accuracy) << ',' << p.n << '\n';
  if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace syllobench

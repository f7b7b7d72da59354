#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/harness.hpp"
#include "syllobench/synthetic.hpp"

namespace syllobench {

/// Upper bound on task entropy: log2 of the response count.
inline const double kMaxEntropy = std::log2(static_cast<double>(kResponseCount));

/// Shannon entropy in bits of a probability vector; 0 log 0 counts as 0.
inline double shannon_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double pi : p)
    if (pi > 0.0) s -= pi * std::log2(pi);
  return s;
}

/// Empirical response distribution and entropy of one task.
struct TaskEntropy {
  SyllogisticTask task;
  std::array<double, kResponseCount> p;
  std::int64_t n;       // responses observed
  double entropy;       // bits
};

/// Per-task distributions over the whole dataset, canonical task order.
/// Tasks nobody answered are omitted.
inline std::vector<TaskEntropy> entropy_report(const Dataset& ds) {
  std::array<std::array<std::int64_t, kResponseCount>, kTaskCount> counts{};
  for (const ReasonerProfile& profile : ds)
    for (const TrialRecord& rec : profile.records)
      ++counts[task_index(rec.task)][static_cast<int>(rec.response)];

  std::vector<TaskEntropy> out;
  for (const SyllogisticTask& task : enumerate_tasks()) {
    const auto& row = counts[task_index(task)];
    std::int64_t n = 0;
    for (std::int64_t c : row) n += c;
    if (n == 0) continue;
    TaskEntropy e{task, {}, n, 0.0};
    for (int r = 0; r < kResponseCount; ++r)
      e.p[r] = static_cast<double>(row[r]) / static_cast<double>(n);
    e.entropy = shannon_entropy(e.p);
    out.push_back(e);
  }
  return out;
}

/// Entropy of one task's empirical response distribution.
inline double task_entropy(const Dataset& ds, const SyllogisticTask& task) {
  std::array<std::int64_t, kResponseCount> counts{};
  std::int64_t n = 0;
  for (const ReasonerProfile& profile : ds)
    for (const TrialRecord& rec : profile.records)
      if (rec.task == task) {
        ++counts[static_cast<int>(rec.response)];
        ++n;
      }
  if (n == 0)
    throw ValidationError("task " + task_code(task) + " absent from dataset");
  std::array<double, kResponseCount> p{};
  for (int r = 0; r < kResponseCount; ++r)
    p[r] = static_cast<double>(counts[r]) / static_cast<double>(n);
  return shannon_entropy(p);
}

/// One binned curve sample: per-model mean accuracy at an x position.
struct CurvePoint {
  double x;              // bin midpoint or noise proportion
  std::string model_id;
  double accuracy;
  std::int64_t n;        // trials behind the mean
};

/// Raw per-(task, model) sample backing the binned curve.
struct ScatterPoint {
  SyllogisticTask task;
  double entropy;
  std::string model_id;
  double accuracy;
  std::int64_t n;
};

struct EntropyCurve {
  std::vector<ScatterPoint> scatter;  // (model, task) order, tasks canonical
  std::vector<CurvePoint> binned;     // empty bins omitted
};

/// Groups tasks into equal-width entropy bins over [0, log2 9] and averages
/// each model's hits per bin. The raw scatter rides along so any binning can
/// be audited or redone downstream.
inline EntropyCurve entropy_accuracy_curve(const BenchmarkResult& result, const Dataset& ds,
                                           int bins = 8) {
  if (bins < 1) throw ConfigError("entropy curve needs at least 1 bin");

  std::array<double, kTaskCount> entropy{};
  std::array<bool, kTaskCount> known{};
  for (const TaskEntropy& e : entropy_report(ds)) {
    entropy[task_index(e.task)] = e.entropy;
    known[task_index(e.task)] = true;
  }

  EntropyCurve curve;
  const double width = kMaxEntropy / bins;
  // bin index -> model -> tally
  std::map<int, std::map<std::string, GroupAccuracy>> binned;
  std::map<std::string, std::array<GroupAccuracy, kTaskCount>> per_task;
  for (const TrialOutcome& t : result.trials) {
    const int idx = task_index(t.task);
    if (!known[idx])
      throw ValidationError("task " + task_code(t.task) +
                            " appears in results but not in the dataset");
    GroupAccuracy& g = per_task[t.model_id][idx];
    g.hits += t.hit ? 1 : 0;
    ++g.n;
  }
  for (const auto& [model, tasks] : per_task)
    for (int idx = 0; idx < kTaskCount; ++idx) {
      const GroupAccuracy& g = tasks[idx];
      if (g.n == 0) continue;
      curve.scatter.push_back(
          {enumerate_tasks()[idx], entropy[idx], model, g.accuracy(), g.n});
      const int bin = std::min(bins - 1, static_cast<int>(entropy[idx] / width));
      GroupAccuracy& b = binned[bin][model];
      b.hits += g.hits;
      b.n += g.n;
    }
  for (const auto& [bin, models] : binned)
    for (const auto& [model, g] : models)
      curve.binned.push_back({(bin + 0.5) * width, model, g.accuracy(), g.n});
  return curve;
}

/// One noise-sweep sample. mean_entropy is the unweighted mean of the noisy
/// population's per-task entropies, giving the curve its entropy-axis view.
struct NoisePoint {
  double noise;
  double mean_entropy;
  std::string model_id;
  double accuracy;
  std::int64_t n;
};

/// Sweeps the noise grid: for each proportion, corrupts the population with
/// the run seed and benchmarks it. The p=0 row equals run_loo on the clean
/// population because inject_noise at 0 keeps every record.
inline std::vector<NoisePoint> noise_accuracy_curve(const Dataset& population,
                                                    const std::vector<double>& grid,
                                                    const std::vector<ModelFactory>& factories,
                                                    const RunOptions& opts = {}) {
  if (grid.empty()) throw ConfigError("noise grid is empty");
  for (double p : grid)
    if (!(p >= 0.0 && p <= 1.0))
      throw ConfigError("noise proportion " + std::to_string(p) + " outside [0,1]");

  std::vector<NoisePoint> out;
  for (double p : grid) {
    const Dataset noisy = inject_noise(population, {p, opts.seed});
    double mean_entropy = 0.0;
    const std::vector<TaskEntropy> report = entropy_report(noisy);
    for (const TaskEntropy& e : report) mean_entropy += e.entropy;
    if (!report.empty()) mean_entropy /= static_cast<double>(report.size());

    const BenchmarkResult result = run_loo(noisy, factories, opts);
    for (const ModelSummary& s : result.summaries)
      out.push_back({p, mean_entropy, s.model_id, s.overall.accuracy(), s.overall.n});
  }
  return out;
}

}  // namespace syllobench

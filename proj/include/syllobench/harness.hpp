#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/model.hpp"
#include "syllobench/rng.hpp"

namespace syllobench {

/// One prediction compared against the revealed truth.
struct TrialOutcome {
  std::string model_id;
  std::string subject_id;
  int seq;
  SyllogisticTask task;
  ResponseOption prediction;
  ResponseOption truth;
  bool hit;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

/// Mean of hits plus the trial count behind it.
struct GroupAccuracy {
  std::int64_t hits = 0;
  std::int64_t n = 0;

  double accuracy() const { return n == 0 ? 0.0 : static_cast<double>(hits) / n; }
};

/// Aggregates for one model, recomputable from the trial list.
struct ModelSummary {
  std::string model_id;
  GroupAccuracy overall;
  std::map<std::string, GroupAccuracy> per_task;     // keyed by task code
  std::map<std::string, GroupAccuracy> per_subject;  // keyed by subject id
};

struct BenchmarkResult {
  std::vector<TrialOutcome> trials;      // sorted by (model, subject, seq)
  std::vector<ModelSummary> summaries;   // sorted by model id
};

/// Groups outcomes by model and recomputes every accuracy from scratch.
inline std::vector<ModelSummary> accuracy_summary(const std::vector<TrialOutcome>& trials) {
  std::map<std::string, ModelSummary> by_model;
  for (const TrialOutcome& t : trials) {
    ModelSummary& s = by_model[t.model_id];
    s.model_id = t.model_id;
    const int hit = t.hit ? 1 : 0;
    s.overall.hits += hit;
    ++s.overall.n;
    GroupAccuracy& task = s.per_task[task_code(t.task)];
    task.hits += hit;
    ++task.n;
    GroupAccuracy& subject = s.per_subject[t.subject_id];
    subject.hits += hit;
    ++subject.n;
  }
  std::vector<ModelSummary> out;
  out.reserve(by_model.size());
  for (auto& [_, s] : by_model) out.push_back(std::move(s));
  return out;
}

/// Runs one subject through the predict-then-reveal protocol. The prediction
/// for each trial is consumed before the truth reaches the model, so a model
/// can never read the current trial's answer.
inline std::vector<TrialOutcome> evaluate_subject(Model& model, const ReasonerProfile& profile) {
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(profile.records.size());
  for (const TrialRecord& rec : profile.records) {
    const ResponseOption prediction = model.predict(rec.task);
    if (static_cast<int>(prediction) < 0 || static_cast<int>(prediction) >= kResponseCount)
      throw ProtocolError("model \"" + model.id() + "\" emitted invalid prediction " +
                          std::to_string(static_cast<int>(prediction)) + " for subject \"" +
                          profile.subject_id + "\" seq " + std::to_string(rec.seq));
    outcomes.push_back({model.id(), profile.subject_id, rec.seq, rec.task, prediction,
                        rec.response, prediction == rec.response});
    model.adapt(rec.task, rec.response);
  }
  return outcomes;
}

struct RunOptions {
  std::uint64_t seed = 0;
  int jobs = 0;  // 0 = one per hardware thread
};

/// Leave-one-out cross-validation: every subject is tested once against
/// models trained on everyone else. Folds run in parallel; per-subject RNG
/// streams are keyed by (seed, model id, subject id) and outcomes are sorted
/// canonically, so the result is identical for any job count and any subject
/// order in the input.
inline BenchmarkResult run_loo(const Dataset& dataset, const std::vector<ModelFactory>& factories,
                               const RunOptions& opts = {}) {
  if (dataset.size() < 2)
    throw ConfigError("leave-one-out needs at least 2 subjects, got " +
                      std::to_string(dataset.size()));
  if (factories.empty()) throw ConfigError("no models requested");
  validate_dataset(dataset);

  const std::size_t folds = dataset.size();
  std::vector<std::vector<TrialOutcome>> per_fold(folds);

  unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, folds));

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;

  const auto worker = [&] {
    std::vector<const ReasonerProfile*> training;
    training.reserve(folds - 1);
    for (;;) {
      const std::size_t fold = next.fetch_add(1);
      if (fold >= folds) return;
      try {
        const ReasonerProfile& test = dataset[fold];
        training.clear();
        for (std::size_t i = 0; i < folds; ++i)
          if (i != fold) training.push_back(&dataset[i]);

        std::vector<TrialOutcome>& outcomes = per_fold[fold];
        for (const ModelFactory& factory : factories) {
          std::unique_ptr<Model> model = factory();
          model->pre_train(training);
          model->start_subject(test.subject_id,
                               derive_stream_seed(opts.seed, model->id(), test.subject_id));
          std::vector<TrialOutcome> fold_outcomes = evaluate_subject(*model, test);
          outcomes.insert(outcomes.end(), std::make_move_iterator(fold_outcomes.begin()),
                          std::make_move_iterator(fold_outcomes.end()));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(folds);  // drain remaining work
        return;
      }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  BenchmarkResult result;
  std::size_t total = 0;
  for (const auto& fold : per_fold) total += fold.size();
  result.trials.reserve(total);
  for (auto& fold : per_fold)
    result.trials.insert(result.trials.end(), std::make_move_iterator(fold.begin()),
                         std::make_move_iterator(fold.end()));
  std::sort(result.trials.begin(), result.trials.end(),
            [](const TrialOutcome& a, const TrialOutcome& b) {
              if (a.model_id != b.model_id) return a.model_id < b.model_id;
              if (a.subject_id != b.subject_id) return a.subject_id < b.subject_id;
              return a.seq < b.seq;
            });
  result.summaries = accuracy_summary(result.trials);
  return result;
}

}  // namespace syllobench

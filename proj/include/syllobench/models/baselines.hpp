#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/model.hpp"
#include "syllobench/rng.hpp"

namespace syllobench {

/// Uniform guess over the nine response options, drawn from the per-subject
/// stream so runs are reproducible and subjects are independent.
class RandomModel final : public Model {
public:
  std::string id() const override { return "random"; }

  void start_subject(const std::string&, std::uint64_t stream_seed) override {
    stream_ = RandomStream(stream_seed);
  }

  ResponseOption predict(const SyllogisticTask&) override {
    return static_cast<ResponseOption>(stream_.index(kResponseCount));
  }

private:
  RandomStream stream_{0};
};

/// Most-frequent answer: per task, the modal response over the training
/// population. Ties and unseen tasks resolve to the canonically first
/// response among the tied (respectively, all) options.
class MfaModel final : public Model {
public:
  std::string id() const override { return "mfa"; }

  void pre_train(std::span<const ReasonerProfile* const> training) override {
    if (training.empty())
      throw ConfigError("mfa: cannot train on an empty population");
    counts_ = {};
    for (const ReasonerProfile* profile : training)
      for (const TrialRecord& rec : profile->records)
        ++counts_[task_index(rec.task)][static_cast<int>(rec.response)];
    trained_ = true;
  }

  ResponseOption predict(const SyllogisticTask& task) override {
    if (!trained_) throw ConfigError("mfa: predict called before pre_train");
    const auto& row = counts_[task_index(task)];
    int best = 0;
    for (int r = 1; r < kResponseCount; ++r)
      if (row[r] > row[best]) best = r;
    return static_cast<ResponseOption>(best);
  }

private:
  std::array<std::array<std::int64_t, kResponseCount>, kTaskCount> counts_{};
  bool trained_ = false;
};

inline std::unique_ptr<Model> make_random_model() { return std::make_unique<RandomModel>(); }
inline std::unique_ptr<Model> make_mfa_model() { return std::make_unique<MfaModel>(); }

}  // namespace syllobench

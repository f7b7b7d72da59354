#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/model.hpp"
#include "syllobench/rng.hpp"

namespace syllobench {

// ---------------------------------------------------------------------------
// User-based collaborative filtering
// ---------------------------------------------------------------------------

/// Similarity between a revealed history and a training candidate: the number
/// of tasks where both hold the same response.
inline int ubcf_similarity(std::span<const TrialRecord> history, const ReasonerProfile& candidate) {
  int matches = 0;
  for (const TrialRecord& h : history)
    for (const TrialRecord& c : candidate.records)
      if (c.task == h.task && c.response == h.response) ++matches;
  return matches;
}

/// Same count restricted to tasks of one figure.
inline int ubcf_figure_similarity(std::span<const TrialRecord> history,
                                  const ReasonerProfile& candidate, Figure figure) {
  int matches = 0;
  for (const TrialRecord& h : history) {
    if (h.task.figure != figure) continue;
    for (const TrialRecord& c : candidate.records)
      if (c.task == h.task && c.response == h.response) ++matches;
  }
  return matches;
}

/// Reference (non-incremental) weighted vote: argmax over responses of the
/// similarity-weighted candidate votes for the task, canonical tie-break.
/// All-zero scores fall back to the unweighted majority. With figure_fit,
/// similarity counts only same-figure matches.
inline ResponseOption ubcf_predict(const SyllogisticTask& task,
                                   std::span<const TrialRecord> history,
                                   std::span<const ReasonerProfile* const> training,
                                   bool figure_fit = false) {
  if (training.empty()) throw ConfigError("ubcf: empty training population");
  std::array<std::int64_t, kResponseCount> scores{};
  std::array<std::int64_t, kResponseCount> votes{};
  for (const ReasonerProfile* candidate : training) {
    const TrialRecord* answer = nullptr;
    for (const TrialRecord& c : candidate->records)
      if (c.task == task) {
        answer = &c;
        break;
      }
    if (!answer) continue;
    const int sim = figure_fit ? ubcf_figure_similarity(history, *candidate, task.figure)
                               : ubcf_similarity(history, *candidate);
    scores[static_cast<int>(answer->response)] += sim;
    votes[static_cast<int>(answer->response)] += 1;
  }
  const bool all_zero =
      std::all_of(scores.begin(), scores.end(), [](std::int64_t s) { return s == 0; });
  const auto& tally = all_zero ? votes : scores;
  return static_cast<ResponseOption>(detail::argmax_response(tally, TieBreak::Canonical, nullptr));
}

// ---------------------------------------------------------------------------
// Item-based collaborative filtering
// ---------------------------------------------------------------------------

inline constexpr int kItemCount = kTaskCount * kResponseCount;  // 576

inline int item_index(const SyllogisticTask& task, ResponseOption r) {
  return task_index(task) * kResponseCount + static_cast<int>(r);
}

/// Symmetric co-occurrence counts over (task, response) items. The diagonal
/// holds per-item occurrence counts.
struct ItemMatrix {
  std::vector<std::int32_t> counts = std::vector<std::int32_t>(
      static_cast<std::size_t>(kItemCount) * kItemCount, 0);

  std::int32_t at(int i, int j) const {
    return counts[static_cast<std::size_t>(i) * kItemCount + j];
  }
  std::int32_t& at(int i, int j) {
    return counts[static_cast<std::size_t>(i) * kItemCount + j];
  }
};

inline ItemMatrix ibcf_build(std::span<const ReasonerProfile* const> training) {
  if (training.empty()) throw ConfigError("ibcf: empty training population");
  ItemMatrix m;
  std::vector<int> items;
  for (const ReasonerProfile* profile : training) {
    items.clear();
    for (const TrialRecord& rec : profile->records)
      items.push_back(item_index(rec.task, rec.response));
    for (int i : items)
      for (int j : items) ++m.at(i, j);
  }
  return m;
}

inline ItemMatrix ibcf_build(std::span<const ReasonerProfile> training) {
  std::vector<const ReasonerProfile*> ptrs;
  ptrs.reserve(training.size());
  for (const ReasonerProfile& p : training) ptrs.push_back(&p);
  return ibcf_build(std::span<const ReasonerProfile* const>(ptrs));
}

/// Score of each candidate (task, r) item under M x u, where u marks the
/// history items. With figure_fit, u is masked to items of the task's figure.
inline std::array<std::int64_t, kResponseCount> ibcf_scores(const SyllogisticTask& task,
                                                            std::span<const int> history_items,
                                                            const ItemMatrix& m,
                                                            bool figure_fit = false) {
  std::array<std::int64_t, kResponseCount> scores{};
  for (int r = 0; r < kResponseCount; ++r) {
    const int row = task_index(task) * kResponseCount + r;
    std::int64_t s = 0;
    for (int h : history_items) {
      if (figure_fit && enumerate_tasks()[h / kResponseCount].figure != task.figure) continue;
      s += m.at(row, h);
    }
    scores[r] = s;
  }
  return scores;
}

/// argmax of M x u over the task's nine items, canonical tie-break; all-zero
/// scores fall back to the diagonal (item popularity).
inline ResponseOption ibcf_predict(const SyllogisticTask& task, std::span<const int> history_items,
                                   const ItemMatrix& m, bool figure_fit = false) {
  std::array<std::int64_t, kResponseCount> scores = ibcf_scores(task, history_items, m, figure_fit);
  const bool all_zero =
      std::all_of(scores.begin(), scores.end(), [](std::int64_t s) { return s == 0; });
  if (all_zero)
    for (int r = 0; r < kResponseCount; ++r) {
      const int item = task_index(task) * kResponseCount + r;
      scores[r] = m.at(item, item);
    }
  return static_cast<ResponseOption>(detail::argmax_response(scores, TieBreak::Canonical, nullptr));
}

// ---------------------------------------------------------------------------
// Model wrappers
// ---------------------------------------------------------------------------

/// User-based recommender. Keeps per-candidate match counts split by figure
/// so each adapt step costs O(candidates) and the figure-fit variant reads
/// the same state.
class UbcfModel final : public Model {
public:
  explicit UbcfModel(bool figure_fit = false, TieBreak tie_break = TieBreak::Canonical,
                     std::optional<int> top_k = std::nullopt)
      : figure_fit_(figure_fit), tie_break_(tie_break), top_k_(top_k) {
    if (top_k_ && *top_k_ <= 0) throw ConfigError("ubcf: top-k must be positive");
  }

  std::string id() const override { return figure_fit_ ? "ubcf-fit" : "ubcf"; }

  void pre_train(std::span<const ReasonerProfile* const> training) override {
    if (training.empty()) throw ConfigError("ubcf: empty training population");
    const std::size_t n = training.size();
    answer_.assign(n, {});
    for (std::size_t c = 0; c < n; ++c) {
      answer_[c].fill(-1);
      for (const TrialRecord& rec : training[c]->records)
        answer_[c][task_index(rec.task)] = static_cast<std::int8_t>(rec.response);
    }
    matches_.assign(n, {});
  }

  void start_subject(const std::string&, std::uint64_t stream_seed) override {
    for (auto& m : matches_) m.fill(0);
    stream_.reseed(stream_seed);
  }

  ResponseOption predict(const SyllogisticTask& task) override {
    if (answer_.empty()) throw ConfigError("ubcf: predict called before pre_train");
    const int t = task_index(task);
    const int fig = task.figure - 1;
    const std::size_t n = answer_.size();

    weights_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      const auto& per_fig = matches_[c];
      weights_[c] = figure_fit_ ? per_fig[fig]
                                : per_fig[0] + per_fig[1] + per_fig[2] + per_fig[3];
    }
    if (top_k_ && static_cast<std::size_t>(*top_k_) < n) truncate_to_top_k();

    std::array<std::int64_t, kResponseCount> scores{};
    std::array<std::int64_t, kResponseCount> votes{};
    for (std::size_t c = 0; c < n; ++c) {
      const std::int8_t r = answer_[c][t];
      if (r < 0) continue;
      scores[r] += weights_[c];
      votes[r] += 1;
    }
    const bool all_zero =
        std::all_of(scores.begin(), scores.end(), [](std::int64_t s) { return s == 0; });
    const auto& tally = all_zero ? votes : scores;
    return static_cast<ResponseOption>(detail::argmax_response(tally, tie_break_, &stream_));
  }

  void adapt(const SyllogisticTask& task, ResponseOption truth) override {
    const int t = task_index(task);
    const int fig = task.figure - 1;
    const auto r = static_cast<std::int8_t>(truth);
    for (std::size_t c = 0; c < answer_.size(); ++c)
      if (answer_[c][t] == r) ++matches_[c][fig];
  }

  std::array<ResponseOption, kResponseCount> predict_ranked(const SyllogisticTask& task) override {
    const ResponseOption top = predict(task);
    std::array<std::int64_t, kResponseCount> scores{};
    const int t = task_index(task);
    const int fig = task.figure - 1;
    for (std::size_t c = 0; c < answer_.size(); ++c) {
      const std::int8_t r = answer_[c][t];
      if (r < 0) continue;
      const auto& per_fig = matches_[c];
      scores[r] += figure_fit_ ? per_fig[fig]
                               : per_fig[0] + per_fig[1] + per_fig[2] + per_fig[3];
    }
    auto ranked = detail::rank_by_score(scores);
    // The point prediction stays rank-1 even when a fallback or random
    // tie-break picked it.
    auto it = std::find(ranked.begin(), ranked.end(), top);
    std::rotate(ranked.begin(), it, it + 1);
    return ranked;
  }

private:
  void truncate_to_top_k() {
    // Keep the k largest weights (earlier candidates win ties); zero the rest.
    order_.resize(weights_.size());
    std::iota(order_.begin(), order_.end(), 0u);
    const auto kth = order_.begin() + *top_k_;
    std::nth_element(order_.begin(), kth - 1, order_.end(), [&](std::size_t x, std::size_t y) {
      return weights_[x] != weights_[y] ? weights_[x] > weights_[y] : x < y;
    });
    kept_.assign(weights_.size(), false);
    for (auto it = order_.begin(); it != kth; ++it) kept_[*it] = true;
    for (std::size_t c = 0; c < weights_.size(); ++c)
      if (!kept_[c]) weights_[c] = 0;
  }

  bool figure_fit_;
  TieBreak tie_break_;
  std::optional<int> top_k_;
  std::vector<std::array<std::int8_t, kTaskCount>> answer_;  // -1 = task unanswered
  std::vector<std::array<int, kFigureCount>> matches_;
  std::vector<std::int64_t> weights_;
  std::vector<std::size_t> order_;
  std::vector<char> kept_;
  RandomStream stream_;
};

/// Item-based recommender over the co-occurrence matrix.
class IbcfModel final : public Model {
public:
  explicit IbcfModel(bool figure_fit = false, TieBreak tie_break = TieBreak::Canonical)
      : figure_fit_(figure_fit), tie_break_(tie_break) {}

  std::string id() const override { return figure_fit_ ? "ibcf-fit" : "ibcf"; }

  void pre_train(std::span<const ReasonerProfile* const> training) override {
    matrix_ = ibcf_build(training);
    trained_ = true;
  }

  void start_subject(const std::string&, std::uint64_t stream_seed) override {
    history_.clear();
    stream_.reseed(stream_seed);
  }

  ResponseOption predict(const SyllogisticTask& task) override {
    if (!trained_) throw ConfigError("ibcf: predict called before pre_train");
    auto scores = ibcf_scores(task, history_, matrix_, figure_fit_);
    const bool all_zero =
        std::all_of(scores.begin(), scores.end(), [](std::int64_t s) { return s == 0; });
    if (all_zero)
      for (int r = 0; r < kResponseCount; ++r) {
        const int item = task_index(task) * kResponseCount + r;
        scores[r] = matrix_.at(item, item);
      }
    return static_cast<ResponseOption>(detail::argmax_response(scores, tie_break_, &stream_));
  }

  void adapt(const SyllogisticTask& task, ResponseOption truth) override {
    history_.push_back(item_index(task, truth));
  }

  std::array<ResponseOption, kResponseCount> predict_ranked(const SyllogisticTask& task) override {
    const ResponseOption top = predict(task);
    auto ranked = detail::rank_by_score(ibcf_scores(task, history_, matrix_, figure_fit_));
    auto it = std::find(ranked.begin(), ranked.end(), top);
    std::rotate(ranked.begin(), it, it + 1);
    return ranked;
  }

private:
  bool figure_fit_;
  TieBreak tie_break_;
  bool trained_ = false;
  ItemMatrix matrix_;
  std::vector<int> history_;
  RandomStream stream_;
};

inline std::unique_ptr<Model> make_ubcf_model(bool figure_fit = false,
                                              TieBreak tie_break = TieBreak::Canonical,
                                              std::optional<int> top_k = std::nullopt) {
  return std::make_unique<UbcfModel>(figure_fit, tie_break, top_k);
}

inline std::unique_ptr<Model> make_ibcf_model(bool figure_fit = false,
                                              TieBreak tie_break = TieBreak::Canonical) {
  return std::make_unique<IbcfModel>(figure_fit, tie_break);
}

}  // namespace syllobench

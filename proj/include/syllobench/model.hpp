#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/rng.hpp"

namespace syllobench {

/// How score ties between responses are resolved.
enum class TieBreak : std::uint8_t {
  Canonical,     // earliest response in canonical order
  SeededRandom,  // uniform among the tied, from the per-subject stream
};

/// Predict/adapt lifecycle shared by every model in the zoo.
///
/// The harness calls, per cross-validation fold:
///   pre_train(training)                    once, with the held-out subject removed
///   start_subject(id, stream_seed)         once per test subject
///   predict(task) then adapt(task, truth)  for each trial, strictly in that order
///
/// predict for trial t may use only the training data and the adapt calls for
/// trials 1..t-1; the harness never reveals the current trial's truth early.
class Model {
public:
  virtual ~Model() = default;

  virtual std::string id() const = 0;

  /// Training profiles live for the whole fold; implementations may keep the
  /// pointers but must not mutate the profiles.
  virtual void pre_train(std::span<const ReasonerProfile* const> /*training*/) {}

  /// Resets all per-subject state.
  virtual void start_subject(const std::string& /*subject_id*/, std::uint64_t /*stream_seed*/) {}

  virtual ResponseOption predict(const SyllogisticTask& task) = 0;

  virtual void adapt(const SyllogisticTask& /*task*/, ResponseOption /*truth*/) {}

  /// All nine responses, best first. The default ranks the point prediction
  /// first and fills the rest in canonical order; score-based models override.
  virtual std::array<ResponseOption, kResponseCount> predict_ranked(const SyllogisticTask& task) {
    std::array<ResponseOption, kResponseCount> out{};
    out[0] = predict(task);
    int n = 1;
    for (ResponseOption r : all_responses())
      if (r != out[0]) out[n++] = r;
    return out;
  }
};

using ModelFactory = std::function<std::unique_ptr<Model>()>;

namespace detail {

/// Index of the best-scoring response under the tie-break policy.
template <typename Score>
int argmax_response(const std::array<Score, kResponseCount>& scores, TieBreak tie_break,
                    RandomStream* stream) {
  Score best = scores[0];
  for (int r = 1; r < kResponseCount; ++r)
    if (scores[r] > best) best = scores[r];
  if (tie_break == TieBreak::SeededRandom && stream != nullptr) {
    std::array<int, kResponseCount> tied{};
    int n = 0;
    for (int r = 0; r < kResponseCount; ++r)
      if (scores[r] == best) tied[n++] = r;
    return n == 1 ? tied[0] : tied[stream->index(static_cast<std::uint64_t>(n))];
  }
  for (int r = 0; r < kResponseCount; ++r)
    if (scores[r] == best) return r;
  return 0;  // unreachable
}

/// Responses sorted by score descending, canonical order within ties.
template <typename Score>
std::array<ResponseOption, kResponseCount> rank_by_score(
    const std::array<Score, kResponseCount>& scores) {
  std::array<ResponseOption, kResponseCount> out = all_responses();
  std::stable_sort(out.begin(), out.end(), [&](ResponseOption x, ResponseOption y) {
    return scores[static_cast<int>(x)] > scores[static_cast<int>(y)];
  });
  return out;
}

}  // namespace detail

}  // namespace syllobench

#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "syllobench/domain.hpp"
#include "syllobench/model.hpp"

namespace syllobench {

// ---------------------------------------------------------------------------
// Rule predictors (pure functions of the task)
// ---------------------------------------------------------------------------

/// Atmosphere effect: the conclusion mood is negative iff any premise mood is
/// negative and particular iff any premise mood is particular. The emitted
/// direction is the canonical AC; never NVC.
inline ResponseOption atmosphere_predict(const SyllogisticTask& task) {
  const bool neg = is_negative(task.mood1) || is_negative(task.mood2);
  const bool part = is_particular(task.mood1) || is_particular(task.mood2);
  const Mood mood = neg ? (part ? Mood::O : Mood::E) : (part ? Mood::I : Mood::A);
  return make_conclusion(mood, Direction::AC);
}

/// Matching hypothesis: the conclusion mood is the most conservative premise
/// mood under E > O = I > A. The O/I rank tie goes to the first premise's
/// mood. Direction AC; never NVC.
inline ResponseOption matching_predict(const SyllogisticTask& task) {
  constexpr int rank[4] = {0, 1, 2, 1};  // A, I, E, O
  const int r1 = rank[static_cast<int>(task.mood1)];
  const int r2 = rank[static_cast<int>(task.mood2)];
  const Mood mood = r2 > r1 ? task.mood2 : task.mood1;
  return make_conclusion(mood, Direction::AC);
}

/// First valid conclusion in canonical order; NVC when nothing is entailed.
inline ResponseOption fol_predict(const SyllogisticTask& task) {
  const std::vector<ResponseOption> valid = valid_conclusions(task);
  return valid.empty() ? ResponseOption::NVC : valid.front();
}

/// Illicit conversion: close the premises under conversion (All X are Y also
/// read as All Y are X, Some X are not Y as Some Y are not X; E and I are
/// already symmetric), then answer like the logic model over the closed set.
inline ResponseOption conversion_predict(const SyllogisticTask& task) {
  static const std::array<std::uint16_t, kTaskCount> table = [] {
    std::array<std::uint16_t, kTaskCount> out{};
    for (const SyllogisticTask& t : enumerate_tasks()) {
      const auto [p1, p2] = premises_of(t);
      std::vector<Premise> closed{p1, p2};
      for (const Premise& p : {p1, p2})
        if (p.mood == Mood::A || p.mood == Mood::O)
          closed.push_back({p.mood, p.predicate, p.subject});
      out[task_index(t)] = entailed_conclusions_mask(closed);
    }
    return out;
  }();
  const std::uint16_t mask = table[task_index(task)];
  for (int r = 0; r < 8; ++r)
    if (mask & (1u << r)) return static_cast<ResponseOption>(r);
  return ResponseOption::NVC;
}

// ---------------------------------------------------------------------------
// Model wrappers
// ---------------------------------------------------------------------------

/// Stateless model backed by one of the rule predictors above.
class RuleModel final : public Model {
public:
  using Rule = ResponseOption (*)(const SyllogisticTask&);

  RuleModel(std::string id, Rule rule) : id_(std::move(id)), rule_(rule) {}

  std::string id() const override { return id_; }
  ResponseOption predict(const SyllogisticTask& task) override { return rule_(task); }

private:
  std::string id_;
  Rule rule_;
};

inline std::unique_ptr<Model> make_atmosphere_model() {
  return std::make_unique<RuleModel>("atmosphere", &atmosphere_predict);
}
inline std::unique_ptr<Model> make_matching_model() {
  return std::make_unique<RuleModel>("matching", &matching_predict);
}
inline std::unique_ptr<Model> make_fol_model() {
  return std::make_unique<RuleModel>("fol", &fol_predict);
}
inline std::unique_ptr<Model> make_conversion_model() {
  return std::make_unique<RuleModel>("conversion", &conversion_predict);
}

}  // namespace syllobench

#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"

namespace syllobench {

/// One answered trial: position in the subject's sequence, the task shown,
/// and the conclusion chosen.
struct TrialRecord {
  int seq;
  SyllogisticTask task;
  ResponseOption response;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// One subject's ordered record of responses. Complete profiles cover all 64
/// tasks; partial profiles are allowed everywhere except where noted.
struct ReasonerProfile {
  std::string subject_id;
  std::vector<TrialRecord> records;

  friend bool operator==(const ReasonerProfile&, const ReasonerProfile&) = default;
};

using Dataset = std::vector<ReasonerProfile>;

/// Checks per-profile invariants: strictly increasing seq, no repeated task.
inline void validate_profile(const ReasonerProfile& p) {
  int last_seq = -1;
  bool first = true;
  std::unordered_set<int> seen_tasks;
  for (const TrialRecord& r : p.records) {
    if (!first && r.seq <= last_seq)
      throw ValidationError("subject \"" + p.subject_id + "\": seq " + std::to_string(r.seq) +
                            " does not increase");
    first = false;
    last_seq = r.seq;
    if (!seen_tasks.insert(task_index(r.task)).second)
      throw ValidationError("subject \"" + p.subject_id + "\": task " + task_code(r.task) +
                            " appears twice");
  }
}

inline void validate_dataset(const Dataset& ds) {
  std::unordered_set<std::string> ids;
  for (const ReasonerProfile& p : ds) {
    if (!ids.insert(p.subject_id).second)
      throw ValidationError("duplicate subject id \"" + p.subject_id + "\"");
    validate_profile(p);
  }
}

}  // namespace syllobench

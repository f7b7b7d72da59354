#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/models/rules.hpp"
#include "syllobench/rng.hpp"

namespace syllobench {

/// The four generator strategies, in the order used to enumerate assignments
/// and to spell subject ids.
enum class GeneratorKind : std::uint8_t { Atmosphere = 0, Matching = 1, Fol = 2, Conversion = 3 };

inline constexpr int kGeneratorCount = 4;

inline std::string_view generator_code(GeneratorKind k) {
  constexpr std::string_view codes[kGeneratorCount] = {"atm", "mat", "fol", "con"};
  return codes[static_cast<int>(k)];
}

inline ResponseOption generator_predict(GeneratorKind k, const SyllogisticTask& task) {
  switch (k) {
    case GeneratorKind::Atmosphere: return atmosphere_predict(task);
    case GeneratorKind::Matching: return matching_predict(task);
    case GeneratorKind::Fol: return fol_predict(task);
    case GeneratorKind::Conversion: return conversion_predict(task);
  }
  return ResponseOption::NVC;  // unreachable
}

/// One strategy per figure; assignment[f-1] answers all tasks of figure f.
struct StrategyAssignment {
  std::array<GeneratorKind, kFigureCount> by_figure;

  GeneratorKind for_figure(Figure f) const { return by_figure[f - 1]; }

  /// Subject id, e.g. "atm-mat-fol-con" = Atmosphere on figure 1, Matching on
  /// figure 2, and so on.
  std::string subject_id() const {
    std::string id;
    for (int f = 0; f < kFigureCount; ++f) {
      if (f) id += '-';
      id += generator_code(by_figure[f]);
    }
    return id;
  }

  ResponseOption respond(const SyllogisticTask& task) const {
    return generator_predict(for_figure(task.figure), task);
  }
};

/// All 4^4 = 256 assignments, figure-4 strategy varying fastest.
inline std::vector<StrategyAssignment> enumerate_assignments() {
  std::vector<StrategyAssignment> out;
  out.reserve(256);
  for (int a = 0; a < kGeneratorCount; ++a)
    for (int b = 0; b < kGeneratorCount; ++b)
      for (int c = 0; c < kGeneratorCount; ++c)
        for (int d = 0; d < kGeneratorCount; ++d)
          out.push_back({{static_cast<GeneratorKind>(a), static_cast<GeneratorKind>(b),
                          static_cast<GeneratorKind>(c), static_cast<GeneratorKind>(d)}});
  return out;
}

/// Complete 64-record profile for one assignment, tasks in canonical order.
inline ReasonerProfile generate_profile(const StrategyAssignment& assignment) {
  ReasonerProfile profile;
  profile.subject_id = assignment.subject_id();
  profile.records.reserve(kTaskCount);
  int seq = 1;
  for (const SyllogisticTask& task : enumerate_tasks())
    profile.records.push_back({seq++, task, assignment.respond(task)});
  return profile;
}

/// The full artificial population: 256 reasoners, one per assignment.
inline Dataset generate_population() {
  Dataset ds;
  ds.reserve(256);
  for (const StrategyAssignment& a : enumerate_assignments()) ds.push_back(generate_profile(a));
  return ds;
}

/// Noise parameters: each record is corrupted independently with probability
/// proportion; a corrupted response is redrawn uniformly over all nine
/// options (so the draw may reproduce the original).
struct NoiseSpec {
  double proportion = 0.0;
  std::uint64_t seed = 0;
};

/// Applies noise to one profile. The stream is keyed by (seed, subject id),
/// and both the selection and the replacement draw are consumed for every
/// record, so raising the proportion only ever grows the corrupted set.
inline ReasonerProfile inject_noise(const ReasonerProfile& profile, const NoiseSpec& spec) {
  RandomStream stream(derive_stream_seed(spec.seed, profile.subject_id));
  ReasonerProfile out = profile;
  for (TrialRecord& rec : out.records) {
    const double u = stream.unit();
    const auto redrawn = static_cast<ResponseOption>(stream.index(kResponseCount));
    if (u < spec.proportion) rec.response = redrawn;
  }
  return out;
}

inline Dataset inject_noise(const Dataset& ds, const NoiseSpec& spec) {
  Dataset out;
  out.reserve(ds.size());
  for (const ReasonerProfile& p : ds) out.push_back(inject_noise(p, spec));
  return out;
}

}  // namespace syllobench

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <string>

#include "syllobench/models/rules.hpp"
#include "syllobench/synthetic.hpp"

using namespace syllobench;

TEST_CASE("the population holds all 256 strategy assignments") {
  const Dataset ds = generate_population();
  REQUIRE(ds.size() == 256);
  std::set<std::string> ids;
  for (const ReasonerProfile& p : ds) {
    ids.insert(p.subject_id);
    REQUIRE(p.records.size() == kTaskCount);
    for (int i = 0; i < kTaskCount; ++i) {
      CHECK(p.records[i].seq == i + 1);
      CHECK(p.records[i].task == enumerate_tasks()[i]);
    }
  }
  CHECK(ids.size() == 256);
  CHECK(ds.front().subject_id == "atm-atm-atm-atm");
  CHECK(ids.count("atm-mat-fol-con") == 1);
  CHECK(ds.back().subject_id == "con-con-con-con");
  validate_dataset(ds);
}

TEST_CASE("responses come from the figure's assigned strategy") {
  const StrategyAssignment mixed{{GeneratorKind::Atmosphere, GeneratorKind::Matching,
                                  GeneratorKind::Fol, GeneratorKind::Conversion}};
  CHECK(mixed.subject_id() == "atm-mat-fol-con");
  const ReasonerProfile p = generate_profile(mixed);
  for (const TrialRecord& r : p.records) {
    ResponseOption expected{};
    switch (r.task.figure) {
      case 1: expected = atmosphere_predict(r.task); break;
      case 2: expected = matching_predict(r.task); break;
      case 3: expected = fol_predict(r.task); break;
      case 4: expected = conversion_predict(r.task); break;
    }
    INFO("task " << task_code(r.task));
    CHECK(r.response == expected);
  }
  CHECK(p.records.front().response == ResponseOption::Aac);  // AA1 under Atmosphere
}

TEST_CASE("profiles differing in one figure agree elsewhere") {
  const StrategyAssignment base{{GeneratorKind::Atmosphere, GeneratorKind::Matching,
                                 GeneratorKind::Fol, GeneratorKind::Conversion}};
  StrategyAssignment changed = base;
  changed.by_figure[2] = GeneratorKind::Atmosphere;  // figure 3
  const ReasonerProfile a = generate_profile(base);
  const ReasonerProfile b = generate_profile(changed);
  for (int i = 0; i < kTaskCount; ++i) {
    if (a.records[i].task.figure == 3) continue;
    CHECK(a.records[i].response == b.records[i].response);
  }
}

TEST_CASE("zero noise is the identity") {
  const Dataset ds = generate_population();
  CHECK(inject_noise(ds, {0.0, 99}) == ds);
}

TEST_CASE("noise injection is deterministic per spec") {
  const Dataset ds = generate_population();
  CHECK(inject_noise(ds, {0.4, 7}) == inject_noise(ds, {0.4, 7}));
  CHECK(inject_noise(ds, {0.4, 7}) != inject_noise(ds, {0.4, 8}));
}

TEST_CASE("full noise leaves chance-level agreement") {
  const Dataset clean = generate_population();
  const Dataset noisy = inject_noise(clean, {1.0, 5});
  std::int64_t agree = 0;
  std::int64_t total = 0;
  for (std::size_t s = 0; s < clean.size(); ++s)
    for (std::size_t i = 0; i < clean[s].records.size(); ++i) {
      agree += clean[s].records[i].response == noisy[s].records[i].response ? 1 : 0;
      ++total;
    }
  const double rate = static_cast<double>(agree) / static_cast<double>(total);
  CHECK(rate > 1.0 / 9 - 0.02);
  CHECK(rate < 1.0 / 9 + 0.02);
}

TEST_CASE("corruption rate tracks p scaled by the resample-same chance") {
  const Dataset clean = generate_population();
  const double p = 0.5;
  const Dataset noisy = inject_noise(clean, {p, 21});
  std::int64_t changed = 0;
  std::int64_t total = 0;
  for (std::size_t s = 0; s < clean.size(); ++s)
    for (std::size_t i = 0; i < clean[s].records.size(); ++i) {
      changed += clean[s].records[i].response != noisy[s].records[i].response ? 1 : 0;
      ++total;
    }
  // A selected record keeps its value with chance 1/9, so the expected
  // change rate is p * 8/9; assert within 3 sigma of the binomial.
  const double expected = p * 8.0 / 9.0;
  const double sigma = std::sqrt(expected * (1 - expected) / static_cast<double>(total));
  const double rate = static_cast<double>(changed) / static_cast<double>(total);
  CHECK(std::abs(rate - expected) <= 3 * sigma);
}

TEST_CASE("raising the proportion only grows the corrupted set") {
  const Dataset clean = generate_population();
  const Dataset low = inject_noise(clean, {0.3, 13});
  const Dataset high = inject_noise(clean, {0.6, 13});
  for (std::size_t s = 0; s < clean.size(); ++s)
    for (std::size_t i = 0; i < clean[s].records.size(); ++i) {
      const ResponseOption orig = clean[s].records[i].response;
      const ResponseOption at_low = low[s].records[i].response;
      const ResponseOption at_high = high[s].records[i].response;
      // A record corrupted at 0.3 is corrupted to the same value at 0.6.
      if (at_low != orig) CHECK(at_high == at_low);
    }
}

TEST_CASE("a strategy's own model reproduces its noise-free profile") {
  for (int k = 0; k < kGeneratorCount; ++k) {
    const auto kind = static_cast<GeneratorKind>(k);
    const StrategyAssignment pure{{kind, kind, kind, kind}};
    const ReasonerProfile p = generate_profile(pure);
    for (const TrialRecord& r : p.records)
      CHECK(r.response == generator_predict(kind, r.task));
  }
}

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syllobench/errors.hpp"

namespace syllobench {

// ---------------------------------------------------------------------------
// Moods, figures, tasks
// ---------------------------------------------------------------------------

/// Quantifier of a premise or conclusion.
enum class Mood : std::uint8_t { A = 0, I = 1, E = 2, O = 3 };

inline constexpr char mood_letter(Mood m) {
  constexpr char letters[4] = {'A', 'I', 'E', 'O'};
  return letters[static_cast<int>(m)];
}

inline std::optional<Mood> mood_from_letter(char c) {
  switch (c) {
    case 'A': return Mood::A;
    case 'I': return Mood::I;
    case 'E': return Mood::E;
    case 'O': return Mood::O;
    default: return std::nullopt;
  }
}

inline constexpr bool is_negative(Mood m) { return m == Mood::E || m == Mood::O; }
inline constexpr bool is_particular(Mood m) { return m == Mood::I || m == Mood::O; }

/// Term arrangement across the two premises.
/// 1 = A-B;B-C   2 = B-A;C-B   3 = B-A;B-C   4 = A-B;C-B
using Figure = int;

inline constexpr int kFigureCount = 4;
inline constexpr int kTaskCount = 64;

struct SyllogisticTask {
  Mood mood1;
  Mood mood2;
  Figure figure;  // 1..4

  friend bool operator==(const SyllogisticTask&, const SyllogisticTask&) = default;
};

/// Canonical 3-character code, e.g. "AE3".
inline std::string task_code(const SyllogisticTask& t) {
  return {mood_letter(t.mood1), mood_letter(t.mood2), static_cast<char>('0' + t.figure)};
}

inline SyllogisticTask parse_task(std::string_view code) {
  if (code.size() != 3)
    throw ParseError("task code \"" + std::string(code) + "\" must be 3 characters");
  auto m1 = mood_from_letter(code[0]);
  if (!m1)
    throw ParseError(std::string("invalid mood letter '") + code[0] + "' in task code \"" +
                     std::string(code) + "\"");
  auto m2 = mood_from_letter(code[1]);
  if (!m2)
    throw ParseError(std::string("invalid mood letter '") + code[1] + "' in task code \"" +
                     std::string(code) + "\"");
  if (code[2] < '1' || code[2] > '4')
    throw ParseError(std::string("invalid figure digit '") + code[2] + "' in task code \"" +
                     std::string(code) + "\"");
  return {*m1, *m2, code[2] - '0'};
}

/// Index of a task in the canonical (lexicographic by code) enumeration.
inline int task_index(const SyllogisticTask& t) {
  // Lexicographic code order sorts mood letters alphabetically: A, E, I, O.
  constexpr int alpha_rank[4] = {0, 2, 1, 3};  // indexed by Mood
  return (alpha_rank[static_cast<int>(t.mood1)] * 4 +
          alpha_rank[static_cast<int>(t.mood2)]) * 4 +
         (t.figure - 1);
}

/// All 64 tasks, lexicographic by canonical code ("AA1" ... "OO4").
inline const std::vector<SyllogisticTask>& enumerate_tasks() {
  static const std::vector<SyllogisticTask> tasks = [] {
    constexpr Mood alpha_order[4] = {Mood::A, Mood::E, Mood::I, Mood::O};
    std::vector<SyllogisticTask> out;
    out.reserve(kTaskCount);
    for (Mood m1 : alpha_order)
      for (Mood m2 : alpha_order)
        for (int fig = 1; fig <= kFigureCount; ++fig)
          out.push_back({m1, m2, fig});
    return out;
  }();
  return tasks;
}

// ---------------------------------------------------------------------------
// Responses
// ---------------------------------------------------------------------------

/// The nine conclusion choices, in canonical order. The first eight relate the
/// end terms A and C via a quantifier and a direction; NVC asserts nothing
/// follows.
enum class ResponseOption : std::uint8_t {
  Aac = 0,
  Aca = 1,
  Iac = 2,
  Ica = 3,
  Eac = 4,
  Eca = 5,
  Oac = 6,
  Oca = 7,
  NVC = 8,
};

inline constexpr int kResponseCount = 9;

enum class Direction : std::uint8_t { AC = 0, CA = 1 };

inline constexpr ResponseOption make_conclusion(Mood m, Direction d) {
  return static_cast<ResponseOption>(static_cast<int>(m) * 2 + static_cast<int>(d));
}

/// Mood of a quantified conclusion. Pre: r != NVC.
inline constexpr Mood response_mood(ResponseOption r) {
  return static_cast<Mood>(static_cast<int>(r) / 2);
}

/// Direction of a quantified conclusion. Pre: r != NVC.
inline constexpr Direction response_direction(ResponseOption r) {
  return static_cast<Direction>(static_cast<int>(r) % 2);
}

inline std::string_view response_code(ResponseOption r) {
  constexpr std::string_view codes[kResponseCount] = {"Aac", "Aca", "Iac", "Ica", "Eac",
                                                      "Eca", "Oac", "Oca", "NVC"};
  return codes[static_cast<int>(r)];
}

inline ResponseOption parse_response(std::string_view code) {
  for (int i = 0; i < kResponseCount; ++i)
    if (response_code(static_cast<ResponseOption>(i)) == code)
      return static_cast<ResponseOption>(i);
  throw ParseError("invalid response code \"" + std::string(code) + "\"");
}

/// The nine responses in canonical tie-break order.
inline const std::array<ResponseOption, kResponseCount>& all_responses() {
  static const std::array<ResponseOption, kResponseCount> r = [] {
    std::array<ResponseOption, kResponseCount> out{};
    for (int i = 0; i < kResponseCount; ++i) out[i] = static_cast<ResponseOption>(i);
    return out;
  }();
  return r;
}

// ---------------------------------------------------------------------------
// Premises
// ---------------------------------------------------------------------------

enum class Term : std::uint8_t { A = 0, B = 1, C = 2 };

struct Premise {
  Mood mood;
  Term subject;
  Term predicate;

  friend bool operator==(const Premise&, const Premise&) = default;
};

/// Term arrangement for the task's figure, moods copied from the task.
inline std::pair<Premise, Premise> premises_of(const SyllogisticTask& t) {
  switch (t.figure) {
    case 1: return {{t.mood1, Term::A, Term::B}, {t.mood2, Term::B, Term::C}};
    case 2: return {{t.mood1, Term::B, Term::A}, {t.mood2, Term::C, Term::B}};
    case 3: return {{t.mood1, Term::B, Term::A}, {t.mood2, Term::B, Term::C}};
    case 4: return {{t.mood1, Term::A, Term::B}, {t.mood2, Term::C, Term::B}};
    default: throw ParseError("figure out of range: " + std::to_string(t.figure));
  }
}

// ---------------------------------------------------------------------------
// First-order validity oracle
// ---------------------------------------------------------------------------
//
// Classical semantics without existential import, decided by countermodel
// search over every assignment of the three terms to subsets of a 6-element
// universe. Six elements exceed the model size any countermodel of a
// two-premise monadic argument can require.

namespace detail {

inline constexpr int kUniverseSize = 6;
inline constexpr std::uint32_t kSubsetCount = 1u << kUniverseSize;
inline constexpr std::uint32_t kFullSet = kSubsetCount - 1;

/// Truth of "mood x y" when x and y denote subsets given as bitmasks.
inline constexpr bool statement_holds(Mood m, std::uint32_t x, std::uint32_t y) {
  switch (m) {
    case Mood::A: return (x & ~y & kFullSet) == 0;
    case Mood::I: return (x & y) != 0;
    case Mood::E: return (x & y) == 0;
    case Mood::O: return (x & ~y & kFullSet) != 0;
  }
  return false;
}

}  // namespace detail

/// Bitmask over the eight quantified conclusions (bit i = canonical response i)
/// entailed by every model of the given statements. Statements may only
/// mention term B together with A or C, as syllogistic premises do.
inline std::uint16_t entailed_conclusions_mask(std::span<const Premise> statements) {
  using namespace detail;

  const auto on_pair = [&](Term u, Term v, std::uint32_t x, std::uint32_t y) {
    for (const Premise& s : statements) {
      if (s.subject == u && s.predicate == v && !statement_holds(s.mood, x, y)) return false;
      if (s.subject == v && s.predicate == u && !statement_holds(s.mood, y, x)) return false;
    }
    return true;
  };

  // falsifier[r][a]: C-subsets under which conclusion r fails for this A.
  std::array<std::array<std::uint64_t, kSubsetCount>, 8> falsifier{};
  for (int r = 0; r < 8; ++r) {
    const auto resp = static_cast<ResponseOption>(r);
    const Mood cm = response_mood(resp);
    const bool ac = response_direction(resp) == Direction::AC;
    for (std::uint32_t a = 0; a < kSubsetCount; ++a)
      for (std::uint32_t c = 0; c < kSubsetCount; ++c) {
        const bool holds = ac ? statement_holds(cm, a, c) : statement_holds(cm, c, a);
        if (!holds) falsifier[r][a] |= 1ull << c;
      }
  }

  std::uint16_t valid = 0xFF;
  for (std::uint32_t b = 0; b < kSubsetCount && valid; ++b) {
    // A- and C-subsets compatible with the statements for this B.
    std::uint64_t a_ok = 0, c_ok = 0;
    for (std::uint32_t a = 0; a < kSubsetCount; ++a)
      if (on_pair(Term::A, Term::B, a, b)) a_ok |= 1ull << a;
    for (std::uint32_t c = 0; c < kSubsetCount; ++c)
      if (on_pair(Term::B, Term::C, b, c)) c_ok |= 1ull << c;
    if (!a_ok || !c_ok) continue;

    for (int r = 0; r < 8; ++r) {
      if (!(valid & (1u << r))) continue;
      std::uint64_t rest = a_ok;
      while (rest) {
        const std::uint32_t a = static_cast<std::uint32_t>(__builtin_ctzll(rest));
        rest &= rest - 1;
        if (falsifier[r][a] & c_ok) {  // countermodel found
          valid &= static_cast<std::uint16_t>(~(1u << r));
          break;
        }
      }
    }
  }
  return valid;
}

namespace detail {

inline const std::array<std::uint16_t, kTaskCount>& validity_table() {
  static const std::array<std::uint16_t, kTaskCount> table = [] {
    std::array<std::uint16_t, kTaskCount> out{};
    for (const SyllogisticTask& t : enumerate_tasks()) {
      const auto [p1, p2] = premises_of(t);
      const std::array<Premise, 2> ps{p1, p2};
      out[task_index(t)] = entailed_conclusions_mask(ps);
    }
    return out;
  }();
  return table;
}

}  // namespace detail

/// Quantified conclusions entailed by the task's premises, in canonical
/// response order. Empty means NVC is the correct single response.
inline std::vector<ResponseOption> valid_conclusions(const SyllogisticTask& t) {
  const std::uint16_t mask = detail::validity_table()[task_index(t)];
  std::vector<ResponseOption> out;
  for (int r = 0; r < 8; ++r)
    if (mask & (1u << r)) out.push_back(static_cast<ResponseOption>(r));
  return out;
}

}  // namespace syllobench

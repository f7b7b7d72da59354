#pragma once

// Brute-force validity oracle used to cross-check the library's conclusion
// sets. Deliberately written the slow way: explicit bool-array sets, its own
// figure table, and full enumeration of all term assignments over a
// 6-element universe. Shares no code with the library's bitmask search.

#include <array>
#include <vector>

#include "syllobench/domain.hpp"

namespace oracle {

constexpr int kElements = 6;
using Set = std::array<bool, kElements>;

// Terms by index: 0 = A, 1 = B, 2 = C.
struct Statement {
  syllobench::Mood mood;
  int subject;
  int predicate;
};

inline bool statement_true(const Statement& s, const std::array<Set, 3>& terms) {
  const Set& x = terms[s.subject];
  const Set& y = terms[s.predicate];
  switch (s.mood) {
    case syllobench::Mood::A:
      for (int e = 0; e < kElements; ++e)
        if (x[e] && !y[e]) return false;
      return true;
    case syllobench::Mood::I:
      for (int e = 0; e < kElements; ++e)
        if (x[e] && y[e]) return true;
      return false;
    case syllobench::Mood::E:
      for (int e = 0; e < kElements; ++e)
        if (x[e] && y[e]) return false;
      return true;
    case syllobench::Mood::O:
      for (int e = 0; e < kElements; ++e)
        if (x[e] && !y[e]) return true;
      return false;
  }
  return false;
}

inline Set set_from_bits(unsigned bits) {
  Set s{};
  for (int e = 0; e < kElements; ++e) s[e] = (bits >> e) & 1u;
  return s;
}

// Candidate conclusions in canonical response order: quantifier pairs
// (A, I, E, O), each first as subject-A/predicate-C then reversed.
inline const std::array<Statement, 8>& candidate_conclusions() {
  static const std::array<Statement, 8> cands = {{
      {syllobench::Mood::A, 0, 2}, {syllobench::Mood::A, 2, 0},
      {syllobench::Mood::I, 0, 2}, {syllobench::Mood::I, 2, 0},
      {syllobench::Mood::E, 0, 2}, {syllobench::Mood::E, 2, 0},
      {syllobench::Mood::O, 0, 2}, {syllobench::Mood::O, 2, 0},
  }};
  return cands;
}

/// Conclusions entailed by the statements: a candidate survives only if it
/// holds in every assignment satisfying all statements.
inline std::vector<syllobench::ResponseOption> entailed(const std::vector<Statement>& statements) {
  std::array<bool, 8> alive;
  alive.fill(true);
  constexpr unsigned kSets = 1u << kElements;
  std::array<Set, 3> terms;
  for (unsigned a = 0; a < kSets; ++a) {
    terms[0] = set_from_bits(a);
    for (unsigned b = 0; b < kSets; ++b) {
      terms[1] = set_from_bits(b);
      for (unsigned c = 0; c < kSets; ++c) {
        terms[2] = set_from_bits(c);
        bool premises_ok = true;
        for (const Statement& s : statements)
          if (!statement_true(s, terms)) {
            premises_ok = false;
            break;
          }
        if (!premises_ok) continue;
        for (int r = 0; r < 8; ++r)
          if (alive[r] && !statement_true(candidate_conclusions()[r], terms)) alive[r] = false;
      }
    }
  }
  std::vector<syllobench::ResponseOption> out;
  for (int r = 0; r < 8; ++r)
    if (alive[r]) out.push_back(static_cast<syllobench::ResponseOption>(r));
  return out;
}

/// Premises of a task, from this file's own figure table.
inline std::vector<Statement> premises(const syllobench::SyllogisticTask& task) {
  int s1 = 0, p1 = 0, s2 = 0, p2 = 0;
  switch (task.figure) {
    case 1: s1 = 0; p1 = 1; s2 = 1; p2 = 2; break;  // A-B ; B-C
    case 2: s1 = 1; p1 = 0; s2 = 2; p2 = 1; break;  // B-A ; C-B
    case 3: s1 = 1; p1 = 0; s2 = 1; p2 = 2; break;  // B-A ; B-C
    case 4: s1 = 0; p1 = 1; s2 = 2; p2 = 1; break;  // A-B ; C-B
  }
  return {{task.mood1, s1, p1}, {task.mood2, s2, p2}};
}

inline std::vector<syllobench::ResponseOption> valid_conclusions(
    const syllobench::SyllogisticTask& task) {
  return entailed(premises(task));
}

}  // namespace oracle

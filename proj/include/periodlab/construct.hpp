#pragma once

#include "periodlab/period_set.hpp"
#include "periodlab/word.hpp"

#include <stdexcept>

namespace periodlab {

/// No binary fill of the requested length yields a word free of small
/// periods, even by exhaustive search. Seeing this would falsify the
/// midpoint-fill argument, so it is surfaced loudly.
class ConstructionImpossibleError : public std::runtime_error {
public:
  ConstructionImpossibleError(Word u, int m);
  const Word& u() const noexcept { return u_; }
  int m() const noexcept { return m_; }

private:
  Word u_;
  int m_;
};

/// A recursion step produced a word whose period set differs from the
/// expected tail set: the step-by-step invariant of the construction failed.
class ConstructionMismatchError : public std::runtime_error {
public:
  ConstructionMismatchError(int h, Word produced, PeriodSet expected, PeriodSet actual);
  int h() const noexcept { return h_; }
  const Word& produced() const noexcept { return produced_; }
  const PeriodSet& expected() const noexcept { return expected_; }
  const PeriodSet& actual() const noexcept { return actual_; }

private:
  int h_;
  Word produced_;
  PeriodSet expected_;
  PeriodSet actual_;
};

struct FillResult {
  Word word;
  bool fallback_used = false;  // greedy failed, exhaustive search stepped in
};

/// Builds u a_1..a_m u (binary u, m >= 1 fresh letters) with no period
/// smaller than |u| + m. Letters are chosen one at a time, each inserted at
/// the midpoint of the fill built so far, keeping every intermediate word
/// u fill u free of periods <= half its length; letter 0 is tried first, so
/// the result is deterministic. If the greedy word fails the final check, an
/// exhaustive scan of all 2^m fills (lexicographic order) takes over.
FillResult midpoint_fill(const Word& u, int m);

struct ConstructResult {
  Word word;
  int fallback_count = 0;  // construction steps that needed the exhaustive fill
};

/// Builds a binary word whose period set is exactly `ps`, by descending
/// recursion from the empty word: each step either extends periodically by
/// the gap (gap <= current length) or wraps the current word in a midpoint
/// fill. Requires check_condition_iv(ps).satisfied() (std::invalid_argument
/// otherwise); every step is verified against the expected tail period set
/// and a mismatch raises ConstructionMismatchError.
ConstructResult construct_word_checked(const PeriodSet& ps);

/// Shorthand for construct_word_checked(ps).word.
Word construct_word(const PeriodSet& ps);

}  // namespace periodlab

#include "periodlab/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace periodlab {

ConstructionImpossibleError::ConstructionImpossibleError(Word u, int m)
    : std::runtime_error("no binary fill of length " + std::to_string(m) + " around \"" +
                         u.to_text() + "\" avoids all periods below " +
                         std::to_string(u.size() + m)),
      u_(std::move(u)),
      m_(m) {}

ConstructionMismatchError::ConstructionMismatchError(int h, Word produced, PeriodSet expected,
                                                     PeriodSet actual)
    : std::runtime_error("construction step h=" + std::to_string(h) + " produced \"" +
                         produced.to_text() + "\" with period set " + actual.to_text() +
                         ", expected " + expected.to_text()),
      h_(h),
      produced_(std::move(produced)),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

namespace {

void assemble(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& fill,
              std::vector<std::uint8_t>& out) {
  out.clear();
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), fill.begin(), fill.end());
  out.insert(out.end(), u.begin(), u.end());
}

}  // namespace

FillResult midpoint_fill(const Word& u, int m) {
  if (m < 1) throw std::invalid_argument("fill length must be >= 1, got " + std::to_string(m));
  for (int i = 0; i < u.size(); ++i)
    if (u[i] > 1)
      throw std::invalid_argument("midpoint fill expects a binary word, got \"" + u.to_text() +
                                  "\"");
  const std::vector<std::uint8_t> base(u.letters());
  const int goal = u.size() + m;  // min-period of the result must reach this

  std::vector<std::uint8_t> fill;
  std::vector<std::uint8_t> scratch;
  bool greedy_ok = true;
  for (int step = 1; step <= m && greedy_ok; ++step) {
    // Insert between positions ceil((step-1)/2) and ceil((step-1)/2)+1 of the
    // fill built so far; for the new word of length L = 2|u| + step, no
    // period may drop to floor(L/2) or below.
    const int length = 2 * u.size() + step;
    greedy_ok = false;
    for (std::uint8_t letter = 0; letter <= 1; ++letter) {
      fill.insert(fill.begin() + step / 2, letter);
      assemble(base, fill, scratch);
      if (min_period_span(scratch.data(), length) > length / 2) {
        greedy_ok = true;
        break;
      }
      fill.erase(fill.begin() + step / 2);
    }
  }
  if (greedy_ok) {
    assemble(base, fill, scratch);
    if (min_period_span(scratch.data(), static_cast<int>(scratch.size())) >= goal)
      return FillResult{Word(std::move(scratch), 2), false};
  }

  // Greedy failed somewhere: scan every fill in lexicographic order.
  const std::uint64_t total = checked_pow(2, m, kEnumerationCap);
  fill.assign(static_cast<std::size_t>(m), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    word_from_index(idx, m, 2, fill.data());
    assemble(base, fill, scratch);
    if (min_period_span(scratch.data(), static_cast<int>(scratch.size())) >= goal)
      return FillResult{Word(std::move(scratch), 2), true};
  }
  throw ConstructionImpossibleError(u, m);
}

ConstructResult construct_word_checked(const PeriodSet& ps) {
  if (!check_condition_iv(ps).satisfied())
    throw std::invalid_argument("period set " + ps.to_text() +
                                " does not satisfy the gap condition");
  const auto gaps = deltas(ps);
  ConstructResult result;
  Word current(std::vector<std::uint8_t>{}, 2);
  for (int h = ps.s(); h >= 1; --h) {
    const int gap = gaps[static_cast<std::size_t>(h - 1)];
    Word next;
    if (gap <= current.size()) {
      // Periodic extension: prepend the length-gap prefix.
      std::vector<std::uint8_t> letters(current.letters().begin(),
                                        current.letters().begin() + gap);
      letters.insert(letters.end(), current.letters().begin(), current.letters().end());
      next = Word(std::move(letters), 2);
    } else {
      FillResult fill = midpoint_fill(current, gap - current.size());
      if (fill.fallback_used) ++result.fallback_count;
      next = std::move(fill.word);
    }
    const PeriodSet expected = pi_h(ps, h - 1);
    const PeriodSet actual = periods(next);
    if (!(actual == expected)) throw ConstructionMismatchError(h, next, expected, actual);
    current = std::move(next);
  }
  result.word = std::move(current);
  return result;
}

Word construct_word(const PeriodSet& ps) { return construct_word_checked(ps).word; }

}  // namespace periodlab

#pragma once

#include "periodlab/period_set.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace periodlab {

/// Alphabets are bounded small by construction; 'a'..'h' in text form.
inline constexpr int kMaxAlphabetSize = 8;

/// A finite word over a small indexed alphabet.
///
/// Letters are 0-based alphabet indices; rendering to 'a','b','c',... happens
/// only at the text boundary. Reported positions (mismatch position t, walk
/// positions) are 1-based everywhere in the public contract; letter access
/// via operator[] is plain 0-based indexing.
///
/// Equality and ordering compare the letter sequences only: the alphabet size
/// is an attribute of the ambient alphabet, not of the sequence.
class Word {
public:
  /// The empty word over a unary alphabet.
  Word() = default;

  /// Throws std::invalid_argument if a letter index is out of range or the
  /// alphabet size is not in [1, kMaxAlphabetSize].
  Word(std::vector<std::uint8_t> letters, int alphabet_size);

  /// Parses 'a','b','c',... letters. The alphabet size is the largest letter
  /// used plus one (at least 1), or `alphabet_size` when given and larger.
  /// Throws std::invalid_argument naming the offending character.
  static Word from_text(std::string_view text, int alphabet_size = 0);

  std::string to_text() const;

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  int alphabet_size() const noexcept { return alphabet_size_; }

  std::uint8_t operator[](int i) const noexcept { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& letters() const noexcept { return letters_; }
  const std::uint8_t* data() const noexcept { return letters_.data(); }

  /// Copy with the letter at 1-based position pos1 replaced.
  Word with_letter(int pos1, std::uint8_t letter) const;

  bool operator==(const Word& other) const noexcept { return letters_ == other.letters_; }
  std::strong_ordering operator<=>(const Word& other) const noexcept {
    return letters_ <=> other.letters_;
  }

private:
  std::vector<std::uint8_t> letters_;
  int alphabet_size_ = 1;
};

/// True iff letter i equals letter i+p for every i <= n-p (1-based), so 0 and
/// n are always periods. Throws std::invalid_argument for p outside [0, n].
bool has_period(const Word& w, int p);

/// All periods of w, 0 included. Border-array path, O(n).
PeriodSet periods(const Word& w);

/// Same set computed by the definitional O(n^2) scan over has_period.
/// Kept as an independent cross-check of the border-array path.
PeriodSet periods_by_scan(const Word& w);

/// Lengths b < n of proper borders (prefix == suffix), ascending, including 0
/// for n >= 1; empty for the empty word. periods(w) = {0} + {n - b}.
std::vector<int> border_lengths(const Word& w);

/// Smallest period >= 1, i.e. n minus the longest proper border.
/// 0 for the empty word, which has no positive period.
int min_period(const Word& w);

enum class MismatchKind { equal, single_mismatch, multiple_mismatch };

struct MismatchVerdict {
  MismatchKind kind = MismatchKind::equal;
  int t = 0;  // 1-based mismatch position, set only for single_mismatch
};

/// Letterwise comparison of equal-length words.
/// Throws std::invalid_argument on a length mismatch.
MismatchVerdict coincide_except_one(const Word& w, const Word& v);

Word reverse(const Word& w);

/// First-occurrence letter renaming: the first distinct letter becomes 0,
/// the next new one 1, and so on. Preserves the period set.
Word canonical_letters(const Word& w);

// Raw-span kernels shared by the exhaustive sweeps. The Word-facing
// functions above wrap these.

/// Failure function: pi[i] = length of the longest proper border of the
/// prefix of length i, for 1 <= i <= n. pi must hold n+1 ints.
void fill_border_array(const std::uint8_t* a, int n, int* pi);

/// Bit p set iff p is a period; requires n <= 63.
std::uint64_t period_mask(const std::uint8_t* a, int n);

/// Smallest period >= 1 of a[0..n), 0 if n = 0.
int min_period_span(const std::uint8_t* a, int n);

/// Default ceiling for exhaustive enumerations (about 6.7e7 words): large
/// enough for every sweep the tools run, small enough to fail fast on typos
/// like `catalog --n 50`.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 26;

/// k^n, throwing ResourceLimitError if it exceeds `limit`.
std::uint64_t checked_pow(int k, int n, std::uint64_t limit);

/// Digits of idx in base k, most significant first, so ascending idx is
/// ascending lexicographic order. out must hold n letters.
void word_from_index(std::uint64_t idx, int n, int k, std::uint8_t* out);

}  // namespace periodlab

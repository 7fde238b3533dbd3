#include "periodlab/word.hpp"

#include "periodlab/errors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace periodlab {

Word::Word(std::vector<std::uint8_t> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1 || alphabet_size_ > kMaxAlphabetSize)
    throw std::invalid_argument("alphabet size must be in [1, " +
                                std::to_string(kMaxAlphabetSize) + "]");
  for (std::uint8_t c : letters_)
    if (c >= alphabet_size_)
      throw std::invalid_argument("letter index " + std::to_string(int(c)) +
                                  " out of range for alphabet of size " +
                                  std::to_string(alphabet_size_));
}

Word Word::from_text(std::string_view text, int alphabet_size) {
  std::vector<std::uint8_t> letters;
  letters.reserve(text.size());
  int max_letter = -1;
  for (char c : text) {
    if (c < 'a' || c >= 'a' + kMaxAlphabetSize)
      throw std::invalid_argument(std::string("word text: bad letter '") + c + "'");
    const int idx = c - 'a';
    max_letter = std::max(max_letter, idx);
    letters.push_back(static_cast<std::uint8_t>(idx));
  }
  return Word(std::move(letters), std::max({1, max_letter + 1, alphabet_size}));
}

std::string Word::to_text() const {
  std::string out;
  out.reserve(letters_.size());
  for (std::uint8_t c : letters_) out.push_back(static_cast<char>('a' + c));
  return out;
}

Word Word::with_letter(int pos1, std::uint8_t letter) const {
  if (pos1 < 1 || pos1 > size())
    throw std::invalid_argument("position " + std::to_string(pos1) + " out of range [1, " +
                                std::to_string(size()) + "]");
  Word copy = *this;
  if (letter >= alphabet_size_)
    throw std::invalid_argument("letter index " + std::to_string(int(letter)) +
                                " out of range for alphabet of size " +
                                std::to_string(alphabet_size_));
  copy.letters_[static_cast<std::size_t>(pos1 - 1)] = letter;
  return copy;
}

bool has_period(const Word& w, int p) {
  const int n = w.size();
  if (p < 0 || p > n)
    throw std::invalid_argument("period " + std::to_string(p) + " out of range [0, " +
                                std::to_string(n) + "]");
  if (p == 0) return true;
  for (int i = 0; i + p < n; ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

void fill_border_array(const std::uint8_t* a, int n, int* pi) {
  pi[0] = 0;
  if (n == 0) return;
  pi[1] = 0;
  int b = 0;
  for (int i = 2; i <= n; ++i) {
    while (b > 0 && a[i - 1] != a[b]) b = pi[b];
    if (a[i - 1] == a[b]) ++b;
    pi[i] = b;
  }
}

std::uint64_t period_mask(const std::uint8_t* a, int n) {
  if (n > 63) throw std::invalid_argument("period_mask supports n <= 63");
  std::array<int, 64> pi;
  fill_border_array(a, n, pi.data());
  std::uint64_t mask = 1;  // period 0
  if (n == 0) return mask;
  for (int b = pi[static_cast<std::size_t>(n)];; b = pi[static_cast<std::size_t>(b)]) {
    mask |= 1ull << (n - b);
    if (b == 0) break;
  }
  return mask;
}

int min_period_span(const std::uint8_t* a, int n) {
  if (n == 0) return 0;
  if (n <= 63) {
    std::array<int, 64> pi;
    fill_border_array(a, n, pi.data());
    return n - pi[static_cast<std::size_t>(n)];
  }
  std::vector<int> pi(static_cast<std::size_t>(n) + 1);
  fill_border_array(a, n, pi.data());
  return n - pi[static_cast<std::size_t>(n)];
}

std::vector<int> border_lengths(const Word& w) {
  const int n = w.size();
  std::vector<int> borders;
  if (n == 0) return borders;
  std::vector<int> pi(static_cast<std::size_t>(n) + 1);
  fill_border_array(w.data(), n, pi.data());
  for (int b = pi[static_cast<std::size_t>(n)]; b > 0; b = pi[static_cast<std::size_t>(b)])
    borders.push_back(b);
  borders.push_back(0);
  std::sort(borders.begin(), borders.end());
  return borders;
}

PeriodSet periods(const Word& w) {
  const int n = w.size();
  std::vector<int> members{0};
  for (int b : border_lengths(w))
    if (n - b > 0) members.push_back(n - b);
  std::sort(members.begin(), members.end());
  return PeriodSet::from_members(std::move(members));
}

PeriodSet periods_by_scan(const Word& w) {
  std::vector<int> members;
  for (int p = 0; p <= w.size(); ++p)
    if (has_period(w, p)) members.push_back(p);
  return PeriodSet::from_members(std::move(members));
}

int min_period(const Word& w) { return min_period_span(w.data(), w.size()); }

MismatchVerdict coincide_except_one(const Word& w, const Word& v) {
  if (w.size() != v.size())
    throw std::invalid_argument("coincide_except_one requires equal lengths, got " +
                                std::to_string(w.size()) + " and " + std::to_string(v.size()));
  MismatchVerdict verdict;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == v[i]) continue;
    if (verdict.kind == MismatchKind::equal) {
      verdict.kind = MismatchKind::single_mismatch;
      verdict.t = i + 1;
    } else {
      verdict.kind = MismatchKind::multiple_mismatch;
      verdict.t = 0;
      break;
    }
  }
  return verdict;
}

Word reverse(const Word& w) {
  std::vector<std::uint8_t> letters(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(letters), w.alphabet_size());
}

Word canonical_letters(const Word& w) {
  std::array<int, kMaxAlphabetSize> rename;
  rename.fill(-1);
  int next = 0;
  std::vector<std::uint8_t> letters;
  letters.reserve(w.letters().size());
  for (std::uint8_t c : w.letters()) {
    if (rename[c] < 0) rename[c] = next++;
    letters.push_back(static_cast<std::uint8_t>(rename[c]));
  }
  return Word(std::move(letters), w.alphabet_size());
}

std::uint64_t checked_pow(int k, int n, std::uint64_t limit) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > limit / static_cast<std::uint64_t>(k))
      throw ResourceLimitError("enumeration of " + std::to_string(k) + "^" +
                               std::to_string(n) + " words exceeds the cap of " +
                               std::to_string(limit));
    count *= static_cast<std::uint64_t>(k);
  }
  return count;
}

void word_from_index(std::uint64_t idx, int n, int k, std::uint8_t* out) {
  for (int i = n - 1; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(idx % static_cast<std::uint64_t>(k));
    idx /= static_cast<std::uint64_t>(k);
  }
}

}  // namespace periodlab

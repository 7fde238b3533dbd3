#include "periodlab/catalog.hpp"

#include "periodlab/construct.hpp"
#include "periodlab/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace periodlab {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

// Fixed-width lowercase hex of an (n+1)-bit membership mask, matching
// PeriodSet::mask_hex so catalog keys and set keys compare as strings.
std::string mask_hex_of(std::uint64_t mask, int n) {
  const int digits = (n + 1 + 3) / 4;
  std::string out(static_cast<std::size_t>(digits), '0');
  for (int d = 0; d < digits; ++d)
    out[static_cast<std::size_t>(digits - 1 - d)] = kHexDigits[(mask >> (4 * d)) & 0xf];
  return out;
}

void validate_catalog_domain(int n, int alphabet_size) {
  if (n < 1 || n > 63)
    throw std::invalid_argument("catalog length must be in [1, 63], got " + std::to_string(n));
  if (alphabet_size < 2 || alphabet_size > kMaxAlphabetSize)
    throw std::invalid_argument("catalog alphabet size must be in [2, " +
                                std::to_string(kMaxAlphabetSize) + "], got " +
                                std::to_string(alphabet_size));
}

}  // namespace

bool Catalog::contains(const PeriodSet& ps) const {
  return ps.n() == n && entries.count(ps.mask_hex()) > 0;
}

std::string Catalog::to_text() const {
  std::ostringstream os;
  os << "n=" << n << " alphabet=" << alphabet_size << " words=" << word_count << '\n';
  for (const auto& [key, witness] : entries) os << key << ' ' << witness.to_text() << '\n';
  return os.str();
}

Catalog Catalog::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("catalog text is empty");
  Catalog cat;
  unsigned long long words = 0;
  if (std::sscanf(line.c_str(), "n=%d alphabet=%d words=%llu", &cat.n, &cat.alphabet_size,
                  &words) != 3)
    throw std::invalid_argument("bad catalog header: \"" + line + "\"");
  validate_catalog_domain(cat.n, cat.alphabet_size);
  cat.word_count = words;
  const std::size_t key_width = static_cast<std::size_t>((cat.n + 1 + 3) / 4);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::size_t space = line.find(' ');
    if (space == std::string::npos)
      throw std::invalid_argument("bad catalog line: \"" + line + "\"");
    const std::string key = line.substr(0, space);
    const std::string witness_text = line.substr(space + 1);
    if (key.size() != key_width ||
        key.find_first_not_of("0123456789abcdef") != std::string::npos)
      throw std::invalid_argument("bad catalog key: \"" + key + "\"");
    Word witness = Word::from_text(witness_text);
    if (witness.size() != cat.n)
      throw std::invalid_argument("catalog witness \"" + witness_text + "\" has length " +
                                  std::to_string(witness.size()) + ", expected " +
                                  std::to_string(cat.n));
    if (witness.alphabet_size() > cat.alphabet_size)
      throw std::invalid_argument("catalog witness \"" + witness_text +
                                  "\" uses letters outside alphabet of size " +
                                  std::to_string(cat.alphabet_size));
    Word sized(std::vector<std::uint8_t>(witness.letters()), cat.alphabet_size);
    if (!cat.entries.emplace(key, std::move(sized)).second)
      throw std::invalid_argument("duplicate catalog key: \"" + key + "\"");
  }
  return cat;
}

Catalog enumerate_catalog_serial(int n, int alphabet_size) {
  validate_catalog_domain(n, alphabet_size);
  Catalog cat;
  cat.n = n;
  cat.alphabet_size = alphabet_size;
  cat.word_count = checked_pow(alphabet_size, n - 1, kEnumerationCap);
  std::array<std::uint8_t, 64> buf{};
  buf[0] = 0;  // first letter fixed: renaming preserves period sets
  for (std::uint64_t idx = 0; idx < cat.word_count; ++idx) {
    word_from_index(idx, n - 1, alphabet_size, buf.data() + 1);
    const std::uint64_t mask = period_mask(buf.data(), n);
    cat.entries.emplace(mask_hex_of(mask, n),
                        Word(std::vector<std::uint8_t>(buf.begin(), buf.begin() + n),
                             alphabet_size));
  }
  return cat;
}

Catalog enumerate_catalog(int n, int alphabet_size, int threads) {
  validate_catalog_domain(n, alphabet_size);
  if (threads < 1)
    throw std::invalid_argument("parallelism must be >= 1, got " + std::to_string(threads));
  Catalog cat;
  cat.n = n;
  cat.alphabet_size = alphabet_size;
  cat.word_count = checked_pow(alphabet_size, n - 1, kEnumerationCap);
  // Chunk count is fixed (independent of `threads`) and the merge keeps the
  // lex-least witness per key, so the result is thread-count invariant.
  const int chunks = static_cast<int>(std::min<std::uint64_t>(cat.word_count, 128));
  std::vector<std::map<std::string, Word>> partial(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int chunk = 0; chunk < chunks; ++chunk) {
    auto& local = partial[static_cast<std::size_t>(chunk)];
    const std::uint64_t lo = cat.word_count * chunk / chunks;
    const std::uint64_t hi = cat.word_count * (chunk + 1) / chunks;
    std::array<std::uint8_t, 64> buf{};
    buf[0] = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      word_from_index(idx, n - 1, alphabet_size, buf.data() + 1);
      const std::uint64_t mask = period_mask(buf.data(), n);
      local.emplace(mask_hex_of(mask, n),
                    Word(std::vector<std::uint8_t>(buf.begin(), buf.begin() + n),
                         alphabet_size));
    }
  }
  for (auto& local : partial) {
    for (auto& [key, witness] : local) {
      auto [it, inserted] = cat.entries.emplace(key, witness);
      if (!inserted && witness < it->second) it->second = witness;
    }
  }
  return cat;
}

void verify_catalog(const Catalog& catalog) {
  validate_catalog_domain(catalog.n, catalog.alphabet_size);
  if (catalog.word_count != checked_pow(catalog.alphabet_size, catalog.n - 1, kEnumerationCap))
    throw std::runtime_error("catalog claims " + std::to_string(catalog.word_count) +
                             " enumerated words, which does not match its length and alphabet");
  for (const auto& [key, witness] : catalog.entries) {
    if (witness.size() != catalog.n)
      throw std::runtime_error("catalog witness \"" + witness.to_text() +
                               "\" has the wrong length");
    const PeriodSet actual = periods(witness);
    if (actual.mask_hex() != key)
      throw std::runtime_error("catalog witness \"" + witness.to_text() +
                               "\" realizes period set " + actual.to_text() +
                               " (mask " + actual.mask_hex() + "), not its key " + key);
  }
}

namespace {

struct TheoremPartial {
  std::uint64_t realizable = 0;
  std::uint64_t fallback = 0;
  std::vector<TheoremMismatch> mismatches;
  std::vector<std::pair<std::string, std::string>> constructions;
};

// Judges one candidate set: membership mask has bits 0 and n set; `bits`
// holds the free positions 1..n-1.
void judge_candidate(std::uint64_t bits, int n, const Catalog& binary_catalog,
                     TheoremPartial& out) {
  std::vector<int> members;
  members.push_back(0);
  for (int pos = 1; pos < n; ++pos)
    if (bits & (1ull << (pos - 1))) members.push_back(pos);
  members.push_back(n);
  const PeriodSet ps = PeriodSet::from_members(std::move(members));
  const std::string key = ps.mask_hex();
  const bool realizable = binary_catalog.entries.count(key) > 0;
  const bool iii = check_condition_iii(ps).satisfied();
  const bool iv = check_condition_iv(ps).satisfied();
  bool constructed = false;
  if (iv) {
    try {
      ConstructResult res = construct_word_checked(ps);
      constructed = true;
      out.fallback += static_cast<std::uint64_t>(res.fallback_count);
      out.constructions.emplace_back(key, res.word.to_text());
    } catch (const ConstructionMismatchError&) {
    } catch (const ConstructionImpossibleError&) {
    }
  }
  if (realizable) ++out.realizable;
  if (realizable != iii || realizable != iv || iv != constructed)
    out.mismatches.push_back(TheoremMismatch{ps, realizable, iii, iv, constructed});
}

}  // namespace

TheoremReport verify_theorem_equivalence_serial(int n) {
  const Catalog cat = enumerate_catalog_serial(n, 2);
  const std::uint64_t candidates = n == 1 ? 1 : (1ull << (n - 1));
  TheoremReport report;
  report.n = n;
  report.sets_checked = candidates;
  TheoremPartial all;
  for (std::uint64_t bits = 0; bits < candidates; ++bits) judge_candidate(bits, n, cat, all);
  report.realizable_count = all.realizable;
  report.fallback_count = all.fallback;
  report.mismatches = std::move(all.mismatches);
  report.constructions = std::move(all.constructions);
  return report;
}

TheoremReport verify_theorem_equivalence(int n, int threads) {
  if (threads < 1)
    throw std::invalid_argument("parallelism must be >= 1, got " + std::to_string(threads));
  const Catalog cat = enumerate_catalog(n, 2, threads);
  const std::uint64_t candidates = n == 1 ? 1 : (1ull << (n - 1));
  const int chunks = static_cast<int>(std::min<std::uint64_t>(candidates, 64));
  std::vector<TheoremPartial> partial(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int chunk = 0; chunk < chunks; ++chunk) {
    const std::uint64_t lo = candidates * chunk / chunks;
    const std::uint64_t hi = candidates * (chunk + 1) / chunks;
    for (std::uint64_t bits = lo; bits < hi; ++bits)
      judge_candidate(bits, n, cat, partial[static_cast<std::size_t>(chunk)]);
  }
  TheoremReport report;
  report.n = n;
  report.sets_checked = candidates;
  for (auto& part : partial) {
    report.realizable_count += part.realizable;
    report.fallback_count += part.fallback;
    for (auto& m : part.mismatches) report.mismatches.push_back(std::move(m));
    for (auto& c : part.constructions) report.constructions.push_back(std::move(c));
  }
  return report;
}

}  // namespace periodlab

#pragma once

#include "periodlab/period_set.hpp"
#include "periodlab/word.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace periodlab {

/// Ground-truth table of the period sets realizable at one length and
/// alphabet size, each with its lexicographically least witness word. Only
/// words starting with letter 0 are enumerated (renaming letters never
/// changes periods), so the witnesses are canonical as well as lex-least.
struct Catalog {
  int n = 0;
  int alphabet_size = 0;
  std::uint64_t word_count = 0;  // words enumerated: alphabet_size^(n-1)
  std::map<std::string, Word> entries;  // mask-hex key -> witness

  bool contains(const PeriodSet& ps) const;

  /// Cache-file form: header "n=<n> alphabet=<k> words=<count>", then one
  /// "<mask-hex> <witness>" line per entry in ascending key order.
  std::string to_text() const;

  /// Inverse of to_text; throws std::invalid_argument on malformed input
  /// (bad header, bad key width, letters outside the alphabet). Structural
  /// only; run verify_catalog to re-check the mathematics.
  static Catalog parse(std::string_view text);

  bool operator==(const Catalog&) const = default;
};

/// Enumerates all alphabet_size^(n-1) canonical words of length n and
/// records the lex-least witness per period set. Deterministic: the result
/// is identical for every thread count. Requires 1 <= n <= 63 and
/// 2 <= alphabet_size <= kMaxAlphabetSize; throws ResourceLimitError when
/// the enumeration exceeds kEnumerationCap words.
Catalog enumerate_catalog(int n, int alphabet_size, int threads = 1);
Catalog enumerate_catalog_serial(int n, int alphabet_size);

/// Re-derives every witness's period set and compares with its key; throws
/// std::runtime_error on the first entry that lies. Run on every catalog
/// loaded from a cache file.
void verify_catalog(const Catalog& catalog);

struct TheoremMismatch {
  PeriodSet set;
  bool realizable = false;   // has a binary witness in the catalog
  bool iii = false;          // passes the arithmetic progression condition
  bool iv = false;           // passes the gap condition
  bool constructed = false;  // construct_word_checked succeeded (iv sets only)

  bool operator==(const TheoremMismatch&) const = default;
};

struct TheoremReport {
  int n = 0;
  std::uint64_t sets_checked = 0;
  std::uint64_t realizable_count = 0;
  std::uint64_t fallback_count = 0;  // exhaustive-fill activations while constructing
  std::vector<TheoremMismatch> mismatches;
  /// (mask-hex, constructed word) for every set passing the gap condition,
  /// in ascending mask order; lets callers compare construction output
  /// byte-for-byte across parallelism degrees.
  std::vector<std::pair<std::string, std::string>> constructions;
};

/// Sweeps every candidate set {0} ∪ S ∪ {n}, S ⊆ {1..n-1}, at length n:
/// binary realizability (from the catalog), the two arithmetic conditions,
/// and constructibility must all agree. Any disagreement lands in
/// `mismatches`; an empty list is the equivalence, verified.
TheoremReport verify_theorem_equivalence(int n, int threads = 1);
TheoremReport verify_theorem_equivalence_serial(int n);

}  // namespace periodlab

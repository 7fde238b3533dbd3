#pragma once

#include "periodlab/word.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace periodlab {

/// Which off-letter the walk argues about: the y-side walk starts at the
/// position of the off letter in the p-periodic word and ends at t - c; the
/// x-side walk is the same schedule on the reversed coordinate frame
/// (position i mapped to n+1-i) and ends at t + c.
enum class WalkSide { y_side, x_side };

/// Parameters of one stockpile walk: alternate phases of length-p moves and
/// length-q moves whose budgets come from a Bezout identity
/// k'p + kq = -c with k' < 0 < k and c = gcd(p, q).
struct WalkSpec {
  int n = 0;
  int p = 0;  // larger period, moves against the walk direction
  int q = 0;  // smaller period, moves along the walk direction
  int t = 0;  // 1-based start position (home of the off letter)
  WalkSide side = WalkSide::y_side;
  int c = 0;                // gcd(p, q)
  int stockpile_left = 0;   // |k'|: budget of length-p moves
  int stockpile_right = 0;  // k: budget of length-q moves

  /// Picks the least positive k with k*q = -c (mod p). Validates
  /// 1 <= q < p, q != gcd(p,q), p + q <= n, and p < t <= n for the y side
  /// (1 <= t <= n - p for the x side); throws std::invalid_argument.
  static WalkSpec make(int n, int p, int q, int t, WalkSide side = WalkSide::y_side);

  /// Same, but with an explicit admissible k (any positive solution of
  /// k*q = -c mod p); larger stockpiles exercise longer walks.
  static WalkSpec make_with_k(int n, int p, int q, int t, int k,
                              WalkSide side = WalkSide::y_side);
};

enum class WalkMove { left_p, right_q, right_p, left_q };

const char* to_string(WalkMove move) noexcept;

struct WalkTrace {
  WalkSpec spec;
  std::vector<int> visited;     // starts at t; all positions 1-based in [1, n]
  std::vector<WalkMove> moves;  // one per step, |moves| = |visited| - 1
  int final_pos = 0;

  /// Line-oriented ledger: a spec header, one "pos= move= stockpile_p=
  /// stockpile_q=" line per step with signed remaining stockpiles, then
  /// "final=<pos>".
  std::string to_text() const;

  /// Serialized JSON object with fields spec, visited, moves, final.
  std::string to_json() const;
};

/// A greedy phase could not move although stockpiles remain. This would
/// falsify the walk's termination argument, so it is surfaced, never
/// swallowed; the partial trace shows how far the walk got.
class WalkStalledError : public std::runtime_error {
public:
  explicit WalkStalledError(WalkTrace partial);
  const WalkTrace& partial() const noexcept { return partial_; }

private:
  WalkTrace partial_;
};

/// Runs the greedy schedule: starting at t, alternately take as many length-p
/// moves against the direction and as many length-q moves along it as the
/// stockpiles and the bounds [1, n] allow, until both stockpiles are spent.
/// Every visited position stays in [1, n]; the final position is t - c on the
/// y side and t + c on the x side. Throws WalkStalledError on a stall.
WalkTrace stockpile_walk(const WalkSpec& spec);

/// A single-mismatch pair with asserted periods: q for w, p for v.
struct MismatchInstance {
  Word w;
  Word v;
  int t = 0;  // 1-based; the mismatch position if there is one
  int q = 0;  // period of w
  int p = 0;  // period of v

  /// Validates |w| = |v|, at most one mismatch (at the given t), 1 <= t <= n,
  /// has_period(w, q) and has_period(v, p). Throws std::invalid_argument.
  static MismatchInstance make(Word w, Word v, int t, int q, int p);
};

/// True iff the one-mismatch periodicity property is consistent with the
/// instance: either max(p, q) > floor(n/2) or w = v. A false return is a
/// counterexample to the property itself and indicates a bug.
bool check_one_mismatch_instance(const MismatchInstance& inst);

/// Fine and Wilf, in the property form used here: p and q must be periods of
/// w; returns true iff n < p + q or gcd(p, q) is also a period.
bool check_fine_wilf(const Word& w, int p, int q);

struct OneMismatchViolation {
  Word w;
  Word v;
  int t = 0;
  int q = 0;  // min-period of w
  int p = 0;  // min-period of v

  bool operator==(const OneMismatchViolation&) const = default;
};

struct OneMismatchReport {
  std::uint64_t pairs_checked = 0;
  std::vector<OneMismatchViolation> violations;

  bool operator==(const OneMismatchReport&) const = default;
};

/// Sweeps every word w of length n <= n_max, every position t and every
/// replacement letter producing v != w; a pair whose two minimal periods are
/// both <= floor(n/2) is a violation (checking minimal periods suffices: any
/// pair of periods within the bound implies the minimal ones are too).
/// alphabet_size must be 2 or 3.
OneMismatchReport verify_one_mismatch_exhaustive(int n_max, int alphabet_size,
                                                 int threads = 1);
OneMismatchReport verify_one_mismatch_exhaustive_serial(int n_max, int alphabet_size);

/// A single-mismatch pair with its minimal periods, q for w and p for v.
struct WitnessTuple {
  Word w;
  Word v;
  int q = 0;
  int p = 0;
  int t = 0;

  bool operator==(const WitnessTuple&) const = default;
};

/// All single-mismatch pairs (w != v) of length n with min-period(w) = q,
/// min-period(v) = p, p != q and p + q <= n: witnesses that the p + q <= n
/// hypothesis alone does not force a common period gcd(p, q). Every returned
/// tuple is re-verified to defeat that conclusion. Deduplicated up to letter
/// renaming (applied jointly to the pair). Requires n >= 2.
std::vector<WitnessTuple> find_counterexamples(int n, int alphabet_size);

/// All binary single-mismatch pairs (w != v) of length n whose minimal
/// periods satisfy max(p, q) = floor(n/2) + 1 and p + q <= n, witnessing that
/// the floor(n/2) bound cannot be raised. Empty means the bound is not tight
/// at this n. Requires n >= 2.
std::vector<WitnessTuple> find_tightness_witnesses(int n);

struct WalkSweepReport {
  std::uint64_t walks = 0;
  std::uint64_t stalls = 0;
  std::uint64_t wrong_final = 0;
  std::uint64_t conservation_failures = 0;

  bool clean() const noexcept {
    return stalls == 0 && wrong_final == 0 && conservation_failures == 0;
  }
  bool operator==(const WalkSweepReport&) const = default;
};

/// Runs the y-side walk for every legal spec with n <= n_max (q < p,
/// q != gcd(p,q), p + q <= n, p < t <= n) and checks termination,
/// final = t - c, and move conservation
/// (#left * p - #right * q = t - final with both stockpiles fully spent).
WalkSweepReport sweep_walks(int n_max, int threads = 1);
WalkSweepReport sweep_walks_serial(int n_max);

}  // namespace periodlab

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace periodlab {

/// The set of periods {0 = p_0 < p_1 < ... < p_s = n} of some length-n word.
///
/// Stored both as the sorted member list and as an (n+1)-bit membership mask,
/// so membership queries are O(1) and catalog keys are compact. The empty
/// word's period set is {0} (n = 0, s = 0).
class PeriodSet {
public:
  /// {0}, the period set of the empty word.
  PeriodSet();

  /// Builds from an explicit member list. Throws std::invalid_argument unless
  /// the list starts at 0 and is strictly increasing.
  static PeriodSet from_members(std::vector<int> members);

  /// Parses "{0,2,4,6}" or the bare form "0,2,4,6".
  /// Throws std::invalid_argument naming the offending token.
  static PeriodSet parse(std::string_view text);

  /// Rebuilds from the canonical hex mask form (see mask_hex) for a known n.
  static PeriodSet from_mask_hex(std::string_view hex, int n);

  int n() const noexcept { return n_; }

  /// Index of the largest member, i.e. members().size() - 1.
  int s() const noexcept { return static_cast<int>(members_.size()) - 1; }

  const std::vector<int>& members() const noexcept { return members_; }

  /// O(1) membership; false for p outside [0, n].
  bool contains(int p) const noexcept;

  /// Canonical text form, e.g. "{0,2,4,6}".
  std::string to_text() const;

  /// Lowercase hex of the (n+1)-bit membership mask, bit i = membership of i,
  /// zero-padded to ceil((n+1)/4) digits. Fixed width keeps catalog files
  /// byte-exact and sorted-by-string == sorted-by-value.
  std::string mask_hex() const;

  bool operator==(const PeriodSet& other) const noexcept {
    return members_ == other.members_;
  }

private:
  int n_ = 0;
  std::vector<int> members_;
  std::vector<std::uint64_t> mask_;  // (n+1) bits, 64 per block

  void rebuild_mask();
};

/// Gap sequence delta_h = p_h - p_{h-1}, h = 1..s. Sums to n.
std::vector<int> deltas(const PeriodSet& ps);

/// The shifted tail set {p - p_h : p in ps, p >= p_h}, itself a valid
/// PeriodSet of length n - p_h. h must be in [0, s].
PeriodSet pi_h(const PeriodSet& ps, int h);

enum class ConditionTag { iii_a, iii_b, iv_a, iv_b };

const char* to_string(ConditionTag tag) noexcept;

/// One checker failure. The meaning of `value` depends on the tag:
///   iii-a, iv-a : the member p_h + k*delta_h that is missing from the set
///   iii-b       : delta_h + delta_{h+1}, which failed to exceed
///                 n - p_h + gcd(delta_h, delta_{h+1})
///   iv-b        : the factor k >= 2 with delta_h = k * delta_{h+1}
struct ConditionViolation {
  ConditionTag tag;
  int h;
  long long value;

  bool operator==(const ConditionViolation&) const = default;
};

struct ConditionReport {
  std::vector<ConditionViolation> violations;

  bool satisfied() const noexcept { return violations.empty(); }
};

/// Realizability condition (iii): for each h with delta_h <= n - p_h,
///   (a) p_h + k*delta_h is a member for k = 1..floor((n-p_h)/delta_h), and
///   (b) if delta_{h+1} < delta_h then
///       delta_h + delta_{h+1} > n - p_h + gcd(delta_h, delta_{h+1}).
/// Violations are reported exhaustively, not first-failure.
ConditionReport check_condition_iii(const PeriodSet& ps);

/// Realizability condition (iv): for each h with delta_h <= n - p_h,
///   (a) p_h + delta_h is a member, and
///   (b) delta_h = k*delta_{h+1} for an integer k implies k = 1.
ConditionReport check_condition_iv(const PeriodSet& ps);

}  // namespace periodlab

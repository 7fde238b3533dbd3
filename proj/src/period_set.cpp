#include "periodlab/period_set.hpp"

#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace periodlab {

PeriodSet::PeriodSet() : n_(0), members_{0} { rebuild_mask(); }

PeriodSet PeriodSet::from_members(std::vector<int> members) {
  if (members.empty() || members.front() != 0)
    throw std::invalid_argument("period set must contain 0 as its first member");
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i] <= members[i - 1])
      throw std::invalid_argument("period set members must be strictly increasing");
  PeriodSet ps;
  ps.members_ = std::move(members);
  ps.n_ = ps.members_.back();
  ps.rebuild_mask();
  return ps;
}

PeriodSet PeriodSet::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}')
      throw std::invalid_argument("period set text: missing closing '}' in '" +
                                  std::string(text) + "'");
    body.remove_prefix(1);
    body.remove_suffix(1);
  }
  std::vector<int> members;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    std::string_view token = body.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
      throw std::invalid_argument("period set text: bad token '" + std::string(token) + "'");
    members.push_back(value);
    if (end == body.size()) break;
    start = end + 1;
  }
  return from_members(std::move(members));
}

PeriodSet PeriodSet::from_mask_hex(std::string_view hex, int n) {
  if (n < 0) throw std::invalid_argument("period set length must be nonnegative");
  std::vector<int> members;
  const int bits = n + 1;
  const int want_digits = (bits + 3) / 4;
  if (static_cast<int>(hex.size()) != want_digits)
    throw std::invalid_argument("period set mask: expected " + std::to_string(want_digits) +
                                " hex digits, got '" + std::string(hex) + "'");
  for (int i = 0; i < bits; ++i) {
    const char c = hex[hex.size() - 1 - static_cast<std::size_t>(i / 4)];
    int nibble;
    if (c >= '0' && c <= '9')
      nibble = c - '0';
    else if (c >= 'a' && c <= 'f')
      nibble = c - 'a' + 10;
    else
      throw std::invalid_argument(std::string("period set mask: bad hex digit '") + c + "'");
    if (nibble & (1 << (i % 4))) members.push_back(i);
  }
  PeriodSet ps = from_members(std::move(members));
  if (ps.n() != n)
    throw std::invalid_argument("period set mask: bit " + std::to_string(n) + " must be set");
  return ps;
}

void PeriodSet::rebuild_mask() {
  mask_.assign(static_cast<std::size_t>(n_ / 64) + 1, 0);
  for (int p : members_) mask_[static_cast<std::size_t>(p) / 64] |= 1ull << (p % 64);
}

bool PeriodSet::contains(int p) const noexcept {
  if (p < 0 || p > n_) return false;
  return (mask_[static_cast<std::size_t>(p) / 64] >> (p % 64)) & 1u;
}

std::string PeriodSet::to_text() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

std::string PeriodSet::mask_hex() const {
  const int digits = (n_ + 1 + 3) / 4;
  std::string hex(static_cast<std::size_t>(digits), '0');
  for (int d = 0; d < digits; ++d) {
    const int lo = 4 * d;
    int nibble = 0;
    for (int b = 0; b < 4 && lo + b <= n_; ++b)
      if (contains(lo + b)) nibble |= 1 << b;
    hex[static_cast<std::size_t>(digits - 1 - d)] =
        static_cast<char>(nibble < 10 ? '0' + nibble : 'a' + nibble - 10);
  }
  return hex;
}

std::vector<int> deltas(const PeriodSet& ps) {
  const auto& p = ps.members();
  std::vector<int> gaps;
  gaps.reserve(p.size() - 1);
  for (std::size_t h = 1; h < p.size(); ++h) gaps.push_back(p[h] - p[h - 1]);
  return gaps;
}

PeriodSet pi_h(const PeriodSet& ps, int h) {
  if (h < 0 || h > ps.s())
    throw std::invalid_argument("pi_h: index " + std::to_string(h) + " out of range [0, " +
                                std::to_string(ps.s()) + "]");
  const int base = ps.members()[static_cast<std::size_t>(h)];
  std::vector<int> shifted;
  for (int p : ps.members())
    if (p >= base) shifted.push_back(p - base);
  return PeriodSet::from_members(std::move(shifted));
}

const char* to_string(ConditionTag tag) noexcept {
  switch (tag) {
    case ConditionTag::iii_a: return "iii-a";
    case ConditionTag::iii_b: return "iii-b";
    case ConditionTag::iv_a: return "iv-a";
    case ConditionTag::iv_b: return "iv-b";
  }
  return "?";
}

ConditionReport check_condition_iii(const PeriodSet& ps) {
  ConditionReport report;
  const auto& p = ps.members();
  const auto gap = deltas(ps);
  const int n = ps.n();
  const int s = ps.s();
  for (int h = 1; h <= s; ++h) {
    const int delta_h = gap[static_cast<std::size_t>(h - 1)];
    const int tail = n - p[static_cast<std::size_t>(h)];
    if (delta_h > tail) continue;
    // delta_h <= n - p_h with delta_h >= 1 forces p_h < n, hence h < s and
    // delta_{h+1} exists.
    assert(h < s);
    for (int k = 1; k <= tail / delta_h; ++k) {
      const int member = p[static_cast<std::size_t>(h)] + k * delta_h;
      if (!ps.contains(member))
        report.violations.push_back({ConditionTag::iii_a, h, member});
    }
    const int delta_next = gap[static_cast<std::size_t>(h)];
    if (delta_next < delta_h &&
        delta_h + delta_next <= tail + std::gcd(delta_h, delta_next))
      report.violations.push_back({ConditionTag::iii_b, h, delta_h + delta_next});
  }
  return report;
}

ConditionReport check_condition_iv(const PeriodSet& ps) {
  ConditionReport report;
  const auto& p = ps.members();
  const auto gap = deltas(ps);
  const int n = ps.n();
  const int s = ps.s();
  for (int h = 1; h <= s; ++h) {
    const int delta_h = gap[static_cast<std::size_t>(h - 1)];
    const int tail = n - p[static_cast<std::size_t>(h)];
    if (delta_h > tail) continue;
    assert(h < s);
    const int member = p[static_cast<std::size_t>(h)] + delta_h;
    if (!ps.contains(member))
      report.violations.push_back({ConditionTag::iv_a, h, member});
    const int delta_next = gap[static_cast<std::size_t>(h)];
    if (delta_h % delta_next == 0 && delta_h / delta_next >= 2)
      report.violations.push_back({ConditionTag::iv_b, h, delta_h / delta_next});
  }
  return report;
}

}  // namespace periodlab

#include "periodlab/one_mismatch.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace periodlab {

namespace {

void validate_walk_frame(int n, int p, int q, int t, WalkSide side) {
  if (q < 1 || q >= p)
    throw std::invalid_argument("walk needs 1 <= q < p, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  const int c = std::gcd(p, q);
  if (q == c)
    throw std::invalid_argument("walk needs q != gcd(p, q); q=" + std::to_string(q) +
                                " divides p=" + std::to_string(p));
  if (p + q > n)
    throw std::invalid_argument("walk needs p + q <= n, got p+q=" + std::to_string(p + q) +
                                " n=" + std::to_string(n));
  if (side == WalkSide::y_side) {
    if (t <= p || t > n)
      throw std::invalid_argument("y-side walk needs p < t <= n, got t=" + std::to_string(t));
  } else {
    if (t < 1 || t > n - p)
      throw std::invalid_argument("x-side walk needs 1 <= t <= n - p, got t=" +
                                  std::to_string(t));
  }
}

// Least positive k with k*q = -c (mod p); exists because gcd(q, p) divides c.
int least_positive_k(int p, int q, int c) {
  for (int k = 1; k <= p; ++k)
    if ((c + k * q) % p == 0) return k;
  assert(false && "no admissible k below p");
  return -1;
}

}  // namespace

WalkSpec WalkSpec::make(int n, int p, int q, int t, WalkSide side) {
  validate_walk_frame(n, p, q, t, side);
  const int c = std::gcd(p, q);
  return make_with_k(n, p, q, t, least_positive_k(p, q, c), side);
}

WalkSpec WalkSpec::make_with_k(int n, int p, int q, int t, int k, WalkSide side) {
  validate_walk_frame(n, p, q, t, side);
  const int c = std::gcd(p, q);
  if (k < 1 || (c + k * q) % p != 0)
    throw std::invalid_argument("k=" + std::to_string(k) +
                                " does not solve k*q = -c (mod p) for p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  WalkSpec spec;
  spec.n = n;
  spec.p = p;
  spec.q = q;
  spec.t = t;
  spec.side = side;
  spec.c = c;
  spec.stockpile_left = (c + k * q) / p;  // |k'| with k'p + kq = -c
  spec.stockpile_right = k;
  return spec;
}

const char* to_string(WalkMove move) noexcept {
  switch (move) {
    case WalkMove::left_p: return "left-p";
    case WalkMove::right_q: return "right-q";
    case WalkMove::right_p: return "right-p";
    case WalkMove::left_q: return "left-q";
  }
  return "?";
}

std::string WalkTrace::to_text() const {
  // Remaining stockpiles are rendered signed by move direction: a negative
  // p-stockpile means the pending p-moves point left.
  const bool y = spec.side == WalkSide::y_side;
  const int p_sign = y ? -1 : 1;
  const int q_sign = y ? 1 : -1;
  std::ostringstream os;
  os << "spec n=" << spec.n << " p=" << spec.p << " q=" << spec.q << " t=" << spec.t
     << " side=" << (y ? 'y' : 'x') << " c=" << spec.c
     << " stockpile_p=" << p_sign * spec.stockpile_left
     << " stockpile_q=" << q_sign * spec.stockpile_right << '\n';
  int p_left = spec.stockpile_left;
  int q_left = spec.stockpile_right;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i] == WalkMove::left_p || moves[i] == WalkMove::right_p)
      --p_left;
    else
      --q_left;
    os << "pos=" << visited[i + 1] << " move=" << to_string(moves[i])
       << " stockpile_p=" << p_sign * p_left << " stockpile_q=" << q_sign * q_left << '\n';
  }
  os << "final=" << final_pos << '\n';
  return os.str();
}

std::string WalkTrace::to_json() const {
  nlohmann::json j;
  j["spec"] = {{"n", spec.n},
               {"p", spec.p},
               {"q", spec.q},
               {"t", spec.t},
               {"side", spec.side == WalkSide::y_side ? "y" : "x"},
               {"c", spec.c},
               {"stockpile_p", spec.stockpile_left},
               {"stockpile_q", spec.stockpile_right}};
  j["visited"] = visited;
  auto& moves_json = j["moves"] = nlohmann::json::array();
  for (WalkMove m : moves) moves_json.push_back(to_string(m));
  j["final"] = final_pos;
  return j.dump();
}

WalkStalledError::WalkStalledError(WalkTrace partial)
    : std::runtime_error("stockpile walk stalled at pos=" +
                         std::to_string(partial.visited.back()) + " with stockpiles p=" +
                         std::to_string(partial.spec.stockpile_left) + " q=" +
                         std::to_string(partial.spec.stockpile_right) + " not yet spent"),
      partial_(std::move(partial)) {}

WalkTrace stockpile_walk(const WalkSpec& spec) {
  if (spec.side == WalkSide::x_side) {
    // Same schedule on the reversed frame: i <-> n+1-i swaps move directions.
    WalkSpec mirrored = spec;
    mirrored.side = WalkSide::y_side;
    mirrored.t = spec.n + 1 - spec.t;
    WalkTrace inner;
    try {
      inner = stockpile_walk(mirrored);
    } catch (const WalkStalledError& e) {
      WalkTrace partial = e.partial();
      partial.spec = spec;
      for (int& pos : partial.visited) pos = spec.n + 1 - pos;
      for (WalkMove& m : partial.moves)
        m = m == WalkMove::left_p ? WalkMove::right_p : WalkMove::left_q;
      partial.final_pos = spec.n + 1 - partial.final_pos;
      throw WalkStalledError(std::move(partial));
    }
    WalkTrace trace;
    trace.spec = spec;
    trace.visited.reserve(inner.visited.size());
    for (int pos : inner.visited) trace.visited.push_back(spec.n + 1 - pos);
    trace.moves.reserve(inner.moves.size());
    for (WalkMove m : inner.moves)
      trace.moves.push_back(m == WalkMove::left_p ? WalkMove::right_p : WalkMove::left_q);
    trace.final_pos = spec.n + 1 - inner.final_pos;
    return trace;
  }

  WalkTrace trace;
  trace.spec = spec;
  int pos = spec.t;
  trace.visited.push_back(pos);
  int p_left = spec.stockpile_left;
  int q_left = spec.stockpile_right;
  while (p_left > 0 || q_left > 0) {
    bool moved = false;
    while (p_left > 0 && pos - spec.p >= 1) {
      pos -= spec.p;
      --p_left;
      trace.visited.push_back(pos);
      trace.moves.push_back(WalkMove::left_p);
      moved = true;
    }
    while (q_left > 0 && pos + spec.q <= spec.n) {
      pos += spec.q;
      --q_left;
      trace.visited.push_back(pos);
      trace.moves.push_back(WalkMove::right_q);
      moved = true;
    }
    if (!moved) {
      trace.final_pos = pos;
      throw WalkStalledError(std::move(trace));
    }
  }
  trace.final_pos = pos;
  return trace;
}

MismatchInstance MismatchInstance::make(Word w, Word v, int t, int q, int p) {
  const MismatchVerdict verdict = coincide_except_one(w, v);
  if (verdict.kind == MismatchKind::multiple_mismatch)
    throw std::invalid_argument("words differ in more than one position");
  if (t < 1 || t > w.size())
    throw std::invalid_argument("mismatch position t=" + std::to_string(t) +
                                " out of range [1, " + std::to_string(w.size()) + "]");
  if (verdict.kind == MismatchKind::single_mismatch && verdict.t != t)
    throw std::invalid_argument("words differ at position " + std::to_string(verdict.t) +
                                ", not at t=" + std::to_string(t));
  if (!has_period(w, q))
    throw std::invalid_argument("q=" + std::to_string(q) + " is not a period of \"" +
                                w.to_text() + "\"");
  if (!has_period(v, p))
    throw std::invalid_argument("p=" + std::to_string(p) + " is not a period of \"" +
                                v.to_text() + "\"");
  MismatchInstance inst;
  inst.w = std::move(w);
  inst.v = std::move(v);
  inst.t = t;
  inst.q = q;
  inst.p = p;
  return inst;
}

bool check_one_mismatch_instance(const MismatchInstance& inst) {
  const int n = inst.w.size();
  if (std::max(inst.p, inst.q) <= n / 2) return inst.w == inst.v;
  return true;
}

bool check_fine_wilf(const Word& w, int p, int q) {
  if (!has_period(w, p))
    throw std::invalid_argument("p=" + std::to_string(p) + " is not a period of \"" +
                                w.to_text() + "\"");
  if (!has_period(w, q))
    throw std::invalid_argument("q=" + std::to_string(q) + " is not a period of \"" +
                                w.to_text() + "\"");
  if (w.size() < p + q) return true;
  return has_period(w, std::gcd(p, q));
}

namespace {

void validate_sweep_alphabet(int alphabet_size) {
  if (alphabet_size != 2 && alphabet_size != 3)
    throw std::invalid_argument("exhaustive sweep supports alphabet sizes 2 and 3, got " +
                                std::to_string(alphabet_size));
}

void validate_threads(int threads) {
  if (threads < 1)
    throw std::invalid_argument("parallelism must be >= 1, got " + std::to_string(threads));
}

// Violations among the n*(alphabet-1) modified copies of one word; buf is
// scratch of length n holding the word for index `idx` on return.
void scan_word_pairs(std::uint64_t idx, int n, int alphabet_size, std::uint8_t* buf,
                     std::vector<OneMismatchViolation>& out) {
  word_from_index(idx, n, alphabet_size, buf);
  const int bound = n / 2;
  const int q = min_period_span(buf, n);
  if (q > bound) return;  // both minimal periods would need to fit the bound
  for (int t = 1; t <= n; ++t) {
    const std::uint8_t original = buf[t - 1];
    for (std::uint8_t b = 0; b < alphabet_size; ++b) {
      if (b == original) continue;
      buf[t - 1] = b;
      const int p = min_period_span(buf, n);
      if (p <= bound) {
        buf[t - 1] = original;
        Word w(std::vector<std::uint8_t>(buf, buf + n), alphabet_size);
        buf[t - 1] = b;
        Word v(std::vector<std::uint8_t>(buf, buf + n), alphabet_size);
        out.push_back(OneMismatchViolation{std::move(w), std::move(v), t, q, p});
      }
    }
    buf[t - 1] = original;
  }
}

}  // namespace

OneMismatchReport verify_one_mismatch_exhaustive_serial(int n_max, int alphabet_size) {
  if (n_max < 1)
    throw std::invalid_argument("n_max must be >= 1, got " + std::to_string(n_max));
  validate_sweep_alphabet(alphabet_size);
  OneMismatchReport report;
  std::array<std::uint8_t, 64> buf{};
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t total = checked_pow(alphabet_size, n, kEnumerationCap);
    report.pairs_checked +=
        total * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(alphabet_size - 1);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      scan_word_pairs(idx, n, alphabet_size, buf.data(), report.violations);
  }
  return report;
}

OneMismatchReport verify_one_mismatch_exhaustive(int n_max, int alphabet_size, int threads) {
  if (n_max < 1)
    throw std::invalid_argument("n_max must be >= 1, got " + std::to_string(n_max));
  validate_sweep_alphabet(alphabet_size);
  validate_threads(threads);
  OneMismatchReport report;
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t total = checked_pow(alphabet_size, n, kEnumerationCap);
    report.pairs_checked +=
        total * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(alphabet_size - 1);
    // Fixed chunking, independent of the thread count, so that the merged
    // violation list is identical for any parallelism degree.
    const int chunks = static_cast<int>(std::min<std::uint64_t>(total, 64));
    std::vector<std::vector<OneMismatchViolation>> partial(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int chunk = 0; chunk < chunks; ++chunk) {
      std::array<std::uint8_t, 64> buf{};
      const std::uint64_t lo = total * chunk / chunks;
      const std::uint64_t hi = total * (chunk + 1) / chunks;
      for (std::uint64_t idx = lo; idx < hi; ++idx)
        scan_word_pairs(idx, n, alphabet_size, buf.data(), partial[chunk]);
    }
    for (auto& chunk_violations : partial)
      for (auto& violation : chunk_violations) report.violations.push_back(std::move(violation));
  }
  return report;
}

namespace {

// Canonical pair = letters first appear in the order 0, 1, 2, ... scanning w
// then v. Each joint-renaming class contains exactly one canonical pair, so
// keeping only canonical pairs deduplicates.
bool jointly_canonical(const std::uint8_t* w, const std::uint8_t* v, int n) {
  std::array<bool, kMaxAlphabetSize> seen{};
  std::uint8_t next = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const std::uint8_t* a = pass == 0 ? w : v;
    for (int i = 0; i < n; ++i) {
      if (!seen[a[i]]) {
        if (a[i] != next) return false;
        seen[a[i]] = true;
        ++next;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<WitnessTuple> find_counterexamples(int n, int alphabet_size) {
  if (n < 2) throw std::invalid_argument("witness search needs n >= 2, got " + std::to_string(n));
  if (alphabet_size < 2 || alphabet_size > kMaxAlphabetSize)
    throw std::invalid_argument("alphabet size must be in [2, " +
                                std::to_string(kMaxAlphabetSize) + "], got " +
                                std::to_string(alphabet_size));
  const std::uint64_t total = checked_pow(alphabet_size, n, kEnumerationCap);
  std::vector<WitnessTuple> out;
  std::array<std::uint8_t, 64> wbuf{};
  std::array<std::uint8_t, 64> vbuf{};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    word_from_index(idx, n, alphabet_size, wbuf.data());
    const int q = min_period_span(wbuf.data(), n);
    if (q > n - 1) continue;  // needs p + q <= n with p >= 1
    for (int t = 1; t <= n; ++t) {
      std::copy(wbuf.begin(), wbuf.begin() + n, vbuf.begin());
      for (std::uint8_t b = 0; b < alphabet_size; ++b) {
        if (b == wbuf[t - 1]) continue;
        vbuf[t - 1] = b;
        const int p = min_period_span(vbuf.data(), n);
        if (p == q || p + q > n) continue;
        if (!jointly_canonical(wbuf.data(), vbuf.data(), n)) continue;
        WitnessTuple tuple{Word(std::vector<std::uint8_t>(wbuf.begin(), wbuf.begin() + n),
                                alphabet_size),
                           Word(std::vector<std::uint8_t>(vbuf.begin(), vbuf.begin() + n),
                                alphabet_size),
                           q, p, t};
        // Re-verify before vouching for the tuple: exact minimal periods, a
        // single mismatch at t, and the pair itself defeats "p + q <= n
        // forces equality".
        const MismatchVerdict verdict = coincide_except_one(tuple.w, tuple.v);
        if (verdict.kind != MismatchKind::single_mismatch || verdict.t != t ||
            min_period(tuple.w) != q || min_period(tuple.v) != p || p + q > n || p == q)
          throw std::logic_error("witness re-verification failed");
        out.push_back(std::move(tuple));
      }
    }
  }
  return out;
}

std::vector<WitnessTuple> find_tightness_witnesses(int n) {
  if (n < 2) throw std::invalid_argument("witness search needs n >= 2, got " + std::to_string(n));
  const std::uint64_t total = checked_pow(2, n, kEnumerationCap);
  const int target = n / 2 + 1;
  std::vector<WitnessTuple> out;
  std::array<std::uint8_t, 64> wbuf{};
  std::array<std::uint8_t, 64> vbuf{};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    word_from_index(idx, n, 2, wbuf.data());
    const int q = min_period_span(wbuf.data(), n);
    if (q > target) continue;
    for (int t = 1; t <= n; ++t) {
      std::copy(wbuf.begin(), wbuf.begin() + n, vbuf.begin());
      vbuf[t - 1] ^= 1;
      const int p = min_period_span(vbuf.data(), n);
      if (std::max(p, q) != target || p + q > n) continue;
      out.push_back(WitnessTuple{
          Word(std::vector<std::uint8_t>(wbuf.begin(), wbuf.begin() + n), 2),
          Word(std::vector<std::uint8_t>(vbuf.begin(), vbuf.begin() + n), 2), q, p, t});
    }
  }
  return out;
}

namespace {

// All y-side walks at one n, trusting nothing: stalls, wrong endpoints and
// move-ledger imbalances are counted, not assumed away.
WalkSweepReport sweep_walks_at(int n) {
  WalkSweepReport report;
  for (int p = 3; p < n; ++p) {
    for (int q = 2; q < p && p + q <= n; ++q) {
      const int c = std::gcd(p, q);
      if (q == c) continue;
      const int k = least_positive_k(p, q, c);
      for (int t = p + 1; t <= n; ++t) {
        const WalkSpec spec = WalkSpec::make_with_k(n, p, q, t, k);
        ++report.walks;
        WalkTrace trace;
        try {
          trace = stockpile_walk(spec);
        } catch (const WalkStalledError&) {
          ++report.stalls;
          continue;
        }
        if (trace.final_pos != t - c) ++report.wrong_final;
        int lefts = 0;
        for (WalkMove m : trace.moves) lefts += m == WalkMove::left_p ? 1 : 0;
        const int rights = static_cast<int>(trace.moves.size()) - lefts;
        const bool spent =
            lefts == spec.stockpile_left && rights == spec.stockpile_right;
        if (!spent || t - trace.final_pos != lefts * p - rights * q)
          ++report.conservation_failures;
      }
    }
  }
  return report;
}

}  // namespace

WalkSweepReport sweep_walks_serial(int n_max) {
  if (n_max < 1)
    throw std::invalid_argument("n_max must be >= 1, got " + std::to_string(n_max));
  WalkSweepReport report;
  for (int n = 1; n <= n_max; ++n) {
    const WalkSweepReport at_n = sweep_walks_at(n);
    report.walks += at_n.walks;
    report.stalls += at_n.stalls;
    report.wrong_final += at_n.wrong_final;
    report.conservation_failures += at_n.conservation_failures;
  }
  return report;
}

WalkSweepReport sweep_walks(int n_max, int threads) {
  if (n_max < 1)
    throw std::invalid_argument("n_max must be >= 1, got " + std::to_string(n_max));
  validate_threads(threads);
  std::vector<WalkSweepReport> partial(static_cast<std::size_t>(n_max));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int n = 1; n <= n_max; ++n) partial[static_cast<std::size_t>(n - 1)] = sweep_walks_at(n);
  WalkSweepReport report;
  for (const WalkSweepReport& at_n : partial) {
    report.walks += at_n.walks;
    report.stalls += at_n.stalls;
    report.wrong_final += at_n.wrong_final;
    report.conservation_failures += at_n.conservation_failures;
  }
  return report;
}

}  // namespace periodlab

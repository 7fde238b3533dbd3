#include "periodlab/cli.hpp"

#include "periodlab/catalog.hpp"
#include "periodlab/construct.hpp"
#include "periodlab/errors.hpp"
#include "periodlab/one_mismatch.hpp"
#include "periodlab/period_set.hpp"
#include "periodlab/word.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace periodlab::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string format = "text";
  int parallelism = 1;
  std::string cache_dir;  // empty: no cache

  std::string word_text;
  std::string set_text;
  int n = 0;
  int p = 0;
  int q = 0;
  int t = 0;
  int k = 0;  // 0: pick the least admissible k
  std::string side = "y";
  int n_max = 0;
  int alphabet = 2;

  bool want_json() const { return format == "json"; }
};

void emit(std::ostream& out, const RunConfig& cfg, const std::string& text, const json& j) {
  if (cfg.want_json())
    out << j.dump(2) << '\n';
  else
    out << text;
}

std::string braced(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

int run_periods(const RunConfig& cfg, std::ostream& out) {
  const Word w = Word::from_text(cfg.word_text);
  const PeriodSet ps = periods(w);
  const json j{{"word", w.to_text()}, {"n", w.size()}, {"periods", ps.members()}};
  emit(out, cfg, ps.to_text() + "\n", j);
  return 0;
}

int run_borders(const RunConfig& cfg, std::ostream& out) {
  const Word w = Word::from_text(cfg.word_text);
  const std::vector<int> borders = border_lengths(w);
  const json j{{"word", w.to_text()}, {"n", w.size()}, {"borders", borders}};
  emit(out, cfg, braced(borders) + "\n", j);
  return 0;
}

json condition_json(const ConditionReport& report) {
  json violations = json::array();
  for (const ConditionViolation& v : report.violations)
    violations.push_back({{"tag", to_string(v.tag)}, {"h", v.h}, {"value", v.value}});
  return {{"satisfied", report.satisfied()}, {"violations", violations}};
}

void render_condition(std::ostringstream& os, const char* name, const ConditionReport& report) {
  os << "condition " << name << ": " << (report.satisfied() ? "satisfied" : "violated") << '\n';
  for (const ConditionViolation& v : report.violations)
    os << "  " << to_string(v.tag) << " h=" << v.h << " value=" << v.value << '\n';
}

int run_check_set(const RunConfig& cfg, std::ostream& out) {
  const PeriodSet ps = PeriodSet::parse(cfg.set_text);
  const ConditionReport iii = check_condition_iii(ps);
  const ConditionReport iv = check_condition_iv(ps);
  std::ostringstream os;
  os << "set " << ps.to_text() << " n=" << ps.n() << '\n';
  render_condition(os, "iii", iii);
  render_condition(os, "iv", iv);
  const json j{{"set", ps.to_text()},
               {"n", ps.n()},
               {"iii", condition_json(iii)},
               {"iv", condition_json(iv)}};
  emit(out, cfg, os.str(), j);
  return 0;  // reporting on the input is not a falsification
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
  const PeriodSet ps = PeriodSet::parse(cfg.set_text);
  const ConstructResult res = construct_word_checked(ps);
  const json j{{"set", ps.to_text()},
               {"n", ps.n()},
               {"word", res.word.to_text()},
               {"fallbacks", res.fallback_count}};
  emit(out, cfg, res.word.to_text() + "\n", j);
  return 0;
}

int run_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const WalkSide side = cfg.side == "x" ? WalkSide::x_side : WalkSide::y_side;
  const WalkSpec spec = cfg.k == 0 ? WalkSpec::make(cfg.n, cfg.p, cfg.q, cfg.t, side)
                                   : WalkSpec::make_with_k(cfg.n, cfg.p, cfg.q, cfg.t, cfg.k,
                                                           side);
  try {
    const WalkTrace trace = stockpile_walk(spec);
    emit(out, cfg, trace.to_text(), json::parse(trace.to_json()));
    return 0;
  } catch (const WalkStalledError& e) {
    emit(out, cfg, e.partial().to_text(), json::parse(e.partial().to_json()));
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_prop1_verify(const RunConfig& cfg, std::ostream& out) {
  const OneMismatchReport report =
      verify_one_mismatch_exhaustive(cfg.n_max, cfg.alphabet, cfg.parallelism);
  std::ostringstream os;
  os << "n_max=" << cfg.n_max << " alphabet=" << cfg.alphabet << " pairs=" << report.pairs_checked
     << " violations=" << report.violations.size() << '\n';
  json violations = json::array();
  for (const OneMismatchViolation& v : report.violations) {
    os << "violation w=" << v.w.to_text() << " v=" << v.v.to_text() << " t=" << v.t
       << " q=" << v.q << " p=" << v.p << '\n';
    violations.push_back({{"w", v.w.to_text()},
                          {"v", v.v.to_text()},
                          {"t", v.t},
                          {"q", v.q},
                          {"p", v.p}});
  }
  const json j{{"n_max", cfg.n_max},
               {"alphabet", cfg.alphabet},
               {"pairs", report.pairs_checked},
               {"violations", violations}};
  emit(out, cfg, os.str(), j);
  return report.violations.empty() ? 0 : 1;
}

json witness_json(const std::vector<WitnessTuple>& tuples) {
  json arr = json::array();
  for (const WitnessTuple& wt : tuples)
    arr.push_back({{"w", wt.w.to_text()},
                   {"v", wt.v.to_text()},
                   {"q", wt.q},
                   {"p", wt.p},
                   {"t", wt.t}});
  return arr;
}

void render_witnesses(std::ostringstream& os, const std::vector<WitnessTuple>& tuples) {
  for (const WitnessTuple& wt : tuples)
    os << "w=" << wt.w.to_text() << " v=" << wt.v.to_text() << " q=" << wt.q << " p=" << wt.p
       << " t=" << wt.t << '\n';
}

int run_counterexamples(const RunConfig& cfg, std::ostream& out) {
  const std::vector<WitnessTuple> tuples = find_counterexamples(cfg.n, cfg.alphabet);
  std::ostringstream os;
  os << "n=" << cfg.n << " alphabet=" << cfg.alphabet << " count=" << tuples.size() << '\n';
  render_witnesses(os, tuples);
  const json j{{"n", cfg.n},
               {"alphabet", cfg.alphabet},
               {"count", tuples.size()},
               {"witnesses", witness_json(tuples)}};
  emit(out, cfg, os.str(), j);
  return 0;  // the witnesses are the sought output, not a failure
}

int run_tightness(const RunConfig& cfg, std::ostream& out) {
  const std::vector<WitnessTuple> tuples = find_tightness_witnesses(cfg.n);
  std::ostringstream os;
  os << "n=" << cfg.n << " count=" << tuples.size() << '\n';
  render_witnesses(os, tuples);
  const json j{{"n", cfg.n}, {"count", tuples.size()}, {"witnesses", witness_json(tuples)}};
  emit(out, cfg, os.str(), j);
  return 0;
}

json catalog_json(const Catalog& cat) {
  json entries = json::array();
  for (const auto& [key, witness] : cat.entries)
    entries.push_back({{"mask", key}, {"witness", witness.to_text()}});
  return {{"n", cat.n},
          {"alphabet", cat.alphabet_size},
          {"words", cat.word_count},
          {"entries", entries}};
}

int run_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Catalog cat;
  if (!cfg.cache_dir.empty()) {
    const std::filesystem::path path =
        std::filesystem::path(cfg.cache_dir) /
        ("catalog-n" + std::to_string(cfg.n) + "-a" + std::to_string(cfg.alphabet) + ".txt");
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      std::ostringstream content;
      content << in.rdbuf();
      cat = Catalog::parse(content.str());
      if (cat.n != cfg.n || cat.alphabet_size != cfg.alphabet)
        throw std::invalid_argument("cache file " + path.string() +
                                    " holds a different catalog (n=" + std::to_string(cat.n) +
                                    " alphabet=" + std::to_string(cat.alphabet_size) + ")");
      try {
        verify_catalog(cat);  // never trust a cache that cannot re-verify
      } catch (const std::runtime_error& e) {
        err << "error: cache file " << path.string() << " failed verification: " << e.what()
            << '\n';
        return 1;
      }
      err << "loaded catalog from " << path.string() << '\n';
    } else {
      cat = enumerate_catalog(cfg.n, cfg.alphabet, cfg.parallelism);
      std::filesystem::create_directories(path.parent_path());
      std::ofstream file(path);
      file << cat.to_text();
      if (!file)
        err << "warning: could not write cache file " << path.string() << '\n';
      else
        err << "wrote catalog cache " << path.string() << '\n';
    }
  } else {
    cat = enumerate_catalog(cfg.n, cfg.alphabet, cfg.parallelism);
  }
  emit(out, cfg, cat.to_text(), catalog_json(cat));
  return 0;
}

int run_verify_theorem(const RunConfig& cfg, std::ostream& out) {
  const TheoremReport report = verify_theorem_equivalence(cfg.n, cfg.parallelism);
  std::ostringstream os;
  os << "n=" << report.n << " sets=" << report.sets_checked
     << " realizable=" << report.realizable_count << " fallbacks=" << report.fallback_count
     << " mismatches=" << report.mismatches.size() << '\n';
  json mismatches = json::array();
  for (const TheoremMismatch& m : report.mismatches) {
    os << "mismatch set=" << m.set.to_text() << " realizable=" << (m.realizable ? "yes" : "no")
       << " iii=" << (m.iii ? "yes" : "no") << " iv=" << (m.iv ? "yes" : "no")
       << " constructed=" << (m.constructed ? "yes" : "no") << '\n';
    mismatches.push_back({{"set", m.set.to_text()},
                          {"realizable", m.realizable},
                          {"iii", m.iii},
                          {"iv", m.iv},
                          {"constructed", m.constructed}});
  }
  const json j{{"n", report.n},
               {"sets", report.sets_checked},
               {"realizable", report.realizable_count},
               {"fallbacks", report.fallback_count},
               {"mismatches", mismatches}};
  emit(out, cfg, os.str(), j);
  return report.mismatches.empty() ? 0 : 1;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--parallelism,-j", cfg.parallelism, "worker thread count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cache-dir", cfg.cache_dir, "directory for catalog cache files")
      ->envname("PERIODLAB_CACHE_DIR");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"periodlab: periods, borders and period sets of words, exhaustively checked"};
  app.require_subcommand(1);
  add_common(&app, cfg);

  auto* periods_cmd = app.add_subcommand("periods", "print the period set of a word");
  periods_cmd->add_option("word", cfg.word_text, "word over letters a..h")->required();
  add_common(periods_cmd, cfg);

  auto* borders_cmd = app.add_subcommand("borders", "print the border lengths of a word");
  borders_cmd->add_option("word", cfg.word_text, "word over letters a..h")->required();
  add_common(borders_cmd, cfg);

  auto* check_cmd =
      app.add_subcommand("check-set", "run both realizability conditions on a period set");
  check_cmd->add_option("set", cfg.set_text, "period set, e.g. {0,2,4,6} or 0,2,4,6")
      ->required();
  add_common(check_cmd, cfg);

  auto* construct_cmd =
      app.add_subcommand("construct", "build a binary word realizing a period set");
  construct_cmd->add_option("set", cfg.set_text, "period set satisfying the gap condition")
      ->required();
  add_common(construct_cmd, cfg);

  auto* walk_cmd = app.add_subcommand("walk", "run one stockpile walk and print its ledger");
  walk_cmd->add_option("n", cfg.n, "word length")->required();
  walk_cmd->add_option("p", cfg.p, "larger period")->required();
  walk_cmd->add_option("q", cfg.q, "smaller period")->required();
  walk_cmd->add_option("t", cfg.t, "start position (1-based)")->required();
  walk_cmd->add_option("--side", cfg.side, "which off-letter the walk argues about")
      ->check(CLI::IsMember({"y", "x"}));
  walk_cmd->add_option("--k", cfg.k, "override the Bezout coefficient k (least by default)")
      ->check(CLI::PositiveNumber);
  add_common(walk_cmd, cfg);

  auto* prop1_cmd = app.add_subcommand(
      "prop1-verify", "exhaustively check the one-mismatch property for all words up to n-max");
  prop1_cmd->add_option("--n-max", cfg.n_max, "largest word length")->required();
  prop1_cmd->add_option("--alphabet", cfg.alphabet, "alphabet size (2 or 3)");
  add_common(prop1_cmd, cfg);

  auto* counter_cmd = app.add_subcommand(
      "counterexamples",
      "list single-mismatch pairs defeating a Fine-and-Wilf style p+q <= n conclusion");
  counter_cmd->add_option("--n", cfg.n, "word length")->required();
  counter_cmd->add_option("--alphabet", cfg.alphabet, "alphabet size");
  add_common(counter_cmd, cfg);

  auto* tight_cmd = app.add_subcommand(
      "tightness", "list binary pairs showing the floor(n/2) bound cannot be raised");
  tight_cmd->add_option("--n", cfg.n, "word length")->required();
  add_common(tight_cmd, cfg);

  auto* catalog_cmd = app.add_subcommand(
      "catalog", "enumerate all realizable period sets at one length, with witnesses");
  catalog_cmd->add_option("--n", cfg.n, "word length")->required();
  catalog_cmd->add_option("--alphabet", cfg.alphabet, "alphabet size");
  add_common(catalog_cmd, cfg);

  auto* theorem_cmd = app.add_subcommand(
      "verify-theorem",
      "check realizability = condition iii = condition iv = constructibility at one length");
  theorem_cmd->add_option("--n", cfg.n, "word length")->required();
  add_common(theorem_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*periods_cmd) return run_periods(cfg, out);
    if (*borders_cmd) return run_borders(cfg, out);
    if (*check_cmd) return run_check_set(cfg, out);
    if (*construct_cmd) return run_construct(cfg, out);
    if (*walk_cmd) return run_walk(cfg, out, err);
    if (*prop1_cmd) return run_prop1_verify(cfg, out);
    if (*counter_cmd) return run_counterexamples(cfg, out);
    if (*tight_cmd) return run_tightness(cfg, out);
    if (*catalog_cmd) return run_catalog(cfg, out, err);
    if (*theorem_cmd) return run_verify_theorem(cfg, out);
    err << "error: no subcommand given\n";
    return 2;
  } catch (const ConstructionMismatchError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConstructionImpossibleError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace periodlab::cli

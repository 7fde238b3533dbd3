#include "periodlab/catalog.hpp"
#include "periodlab/errors.hpp"
#include "periodlab/word.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using namespace periodlab;

TEST_SUITE("catalog") {

TEST_CASE("n=6 binary catalog holds the worked entries") {
  const Catalog cat = enumerate_catalog_serial(6, 2);
  CHECK(cat.word_count == 32);
  CHECK(cat.contains(PeriodSet::parse("{0,2,4,6}")));
  CHECK(cat.contains(PeriodSet::parse("{0,4,6}")));
  CHECK_FALSE(cat.contains(PeriodSet::parse("{0,2,6}")));
  REQUIRE(cat.entries.count("55") == 1);
  CHECK(cat.entries.at("55") == Word::from_text("ababab"));
  REQUIRE(cat.entries.count("51") == 1);
  CHECK(cat.entries.at("51") == Word::from_text("abaaab"));
}

TEST_CASE("n=1 catalog has exactly the one key") {
  const Catalog cat = enumerate_catalog_serial(1, 2);
  CHECK(cat.word_count == 1);
  REQUIRE(cat.entries.size() == 1);
  CHECK(cat.entries.begin()->first == PeriodSet::parse("{0,1}").mask_hex());
  CHECK(cat.entries.begin()->second == Word::from_text("a"));
}

TEST_CASE("binary and ternary catalogs at n=6 have identical key sets") {
  const Catalog two = enumerate_catalog_serial(6, 2);
  const Catalog three = enumerate_catalog_serial(6, 3);
  std::vector<std::string> keys2;
  std::vector<std::string> keys3;
  for (const auto& [key, _] : two.entries) keys2.push_back(key);
  for (const auto& [key, _] : three.entries) keys3.push_back(key);
  CHECK(keys2 == keys3);
}

TEST_CASE("ternary keys are binary keys for every n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    const Catalog two = enumerate_catalog(n, 2);
    const Catalog three = enumerate_catalog(n, 3);
    for (const auto& [key, _] : three.entries) REQUIRE(two.entries.count(key) == 1);
  }
}

TEST_CASE("witnesses verify and survive a text round trip") {
  const Catalog cat = enumerate_catalog_serial(10, 2);
  CHECK_NOTHROW(verify_catalog(cat));
  const Catalog reparsed = Catalog::parse(cat.to_text());
  CHECK(reparsed == cat);
  CHECK(reparsed.to_text() == cat.to_text());
}

TEST_CASE("verification rejects a tampered witness") {
  Catalog cat = enumerate_catalog_serial(6, 2);
  cat.entries.at("55") = Word::from_text("abaaab");
  CHECK_THROWS_AS(verify_catalog(cat), std::runtime_error);
}

TEST_CASE("parse rejects malformed catalog text") {
  CHECK_THROWS_AS(Catalog::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Catalog::parse("words=32\n"), std::invalid_argument);
  CHECK_THROWS_AS(Catalog::parse("n=6 alphabet=2 words=32\nxyz\n"), std::invalid_argument);
  CHECK_THROWS_AS(Catalog::parse("n=6 alphabet=2 words=32\n5 ababab\n"),
                  std::invalid_argument);  // key too narrow
  CHECK_THROWS_AS(Catalog::parse("n=6 alphabet=2 words=32\n55 abab\n"),
                  std::invalid_argument);  // wrong length
  CHECK_THROWS_AS(Catalog::parse("n=6 alphabet=2 words=32\n55 abcbab\n"),
                  std::invalid_argument);  // letter outside alphabet
  CHECK_THROWS_AS(Catalog::parse("n=6 alphabet=2 words=32\n55 ababab\n55 ababab\n"),
                  std::invalid_argument);  // duplicate key
}

TEST_CASE("enumeration caps and argument validation") {
  CHECK_THROWS_AS(enumerate_catalog(40, 2), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_catalog(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_catalog(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_catalog(6, 9), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_catalog(6, 2, 0), std::invalid_argument);
}

TEST_CASE("parallel catalogs are byte-identical to the serial reference") {
  const Catalog serial = enumerate_catalog_serial(12, 2);
  for (int threads : {1, 2, 8}) {
    const Catalog parallel = enumerate_catalog(12, 2, threads);
    CHECK(parallel == serial);
    CHECK(parallel.to_text() == serial.to_text());
  }
  const Catalog ternary_serial = enumerate_catalog_serial(8, 3);
  for (int threads : {1, 2, 8})
    CHECK(enumerate_catalog(8, 3, threads).to_text() == ternary_serial.to_text());
}

TEST_CASE("theorem equivalence at small n") {
  const TheoremReport six = verify_theorem_equivalence(6);
  CHECK(six.sets_checked == 32);
  CHECK(six.mismatches.empty());
  CHECK(six.realizable_count == enumerate_catalog_serial(6, 2).entries.size());

  const TheoremReport one = verify_theorem_equivalence(1);
  CHECK(one.sets_checked == 1);
  CHECK(one.mismatches.empty());
  CHECK(one.realizable_count == 1);
}

TEST_CASE("theorem sweep: parallel equals serial, constructions in mask order") {
  const TheoremReport serial = verify_theorem_equivalence_serial(10);
  CHECK(serial.mismatches.empty());
  REQUIRE(!serial.constructions.empty());
  for (std::size_t i = 1; i < serial.constructions.size(); ++i)
    REQUIRE(serial.constructions[i - 1].first < serial.constructions[i].first);
  for (int threads : {1, 2, 8}) {
    const TheoremReport parallel = verify_theorem_equivalence(10, threads);
    CHECK(parallel.sets_checked == serial.sets_checked);
    CHECK(parallel.realizable_count == serial.realizable_count);
    CHECK(parallel.fallback_count == serial.fallback_count);
    CHECK(parallel.mismatches == serial.mismatches);
    CHECK(parallel.constructions == serial.constructions);
  }
}

}  // TEST_SUITE

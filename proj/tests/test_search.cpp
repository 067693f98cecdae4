#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dssat/bounds.hpp"
#include "dssat/predicates.hpp"
#include "dssat/search.hpp"
#include "dssat/text.hpp"
#include "oracles.hpp"

using namespace dssat;

namespace {

const Pattern abab = parse_pattern("abab");

std::vector<std::vector<Letter>> words(const SearchResult& r) {
  std::vector<std::vector<Letter>> out;
  for (const Sequence& s : r.witnesses) out.push_back(s.vec());
  return out;
}

oracle::Kind oracle_kind(SearchKind k) {
  switch (k) {
    case SearchKind::MinSat: return oracle::Kind::Sat;
    case SearchKind::MinSsat: return oracle::Kind::Ssat;
    case SearchKind::MaxFree: return oracle::Kind::Free;
  }
  return oracle::Kind::Sat;
}

void check_witnesses(const SearchResult& r, const Pattern& u) {
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const Sequence& w = r.witnesses[i];
    CHECK(is_valid_witness(r.kind, w, u, r.n));
    CHECK(canonical_letters(w.letters()) == w.vec());
    CHECK(static_cast<std::int64_t>(w.size()) == *r.value);
    if (i) CHECK(r.witnesses[i - 1].vec() < w.vec());
  }
}

}  // namespace

TEST_CASE("saturation values") {
  CHECK(*min_saturated(abab, 3).value == 5);
  CHECK(*min_saturated(abab, 4).value == 7);
  CHECK(*min_saturated(parse_pattern("ab"), 5).value == 1);

  const SearchResult u3 = min_saturated(Pattern::alternation(3), 4);
  REQUIRE(u3.exact());
  CHECK(*u3.value == 10);
  const BoundReport b = xi_bounds(4, 3);
  CHECK(*b.lower <= *u3.value);
  CHECK(*u3.value <= *b.upper);
  check_witnesses(u3, Pattern::alternation(3));
}

TEST_CASE("semisaturation values") {
  // The conjectured 2n = 12 is not the minimum: length 9 suffices.
  const SearchResult two = min_semisaturated(abab, 6);
  REQUIRE(two.exact());
  CHECK(*two.value == 9);
  CHECK(two.witnesses.front().vec() == std::vector<Letter>{0, 1, 0, 2, 3, 4, 0, 5, 3});
  check_witnesses(two, abab);

  CHECK(*min_semisaturated(Pattern::alternation(3), 5).value == 11);
  CHECK(*min_semisaturated(parse_pattern("aba"), 3).value == 3);
}

TEST_CASE("semisaturation value for abab on six letters matches brute force") {
  const auto ex = oracle::exhaustive({0, 1, 0, 1}, 6, oracle::Kind::Ssat, 9);
  REQUIRE(ex.value.has_value());
  CHECK(*ex.value == 9);
  const SearchResult r = enumerate_minimal(abab, 6, SearchKind::MinSsat);
  CHECK(words(r) == ex.witnesses);
}

TEST_CASE("extremal values") {
  CHECK(*max_free(abab, 3).value == 5);
  CHECK(*max_free(parse_pattern("ab"), 9).value == 1);
  const SearchResult ex = max_free(Pattern::alternation(3), 3);
  REQUIRE(ex.exact());
  CHECK(*ex.value >= *min_saturated(Pattern::alternation(3), 3).value);
  check_witnesses(ex, Pattern::alternation(3));
}

TEST_CASE("minimal witnesses") {
  const SearchResult r = enumerate_minimal(abab, 3, SearchKind::MinSat);
  const auto w = words(r);
  CHECK(std::find(w.begin(), w.end(), std::vector<Letter>{0, 1, 0, 2, 0}) != w.end());
  CHECK(r.witness_count == w.size());

  const SearchResult seven = enumerate_minimal(abab, 7, SearchKind::MinSat);
  REQUIRE(seven.exact());
  CHECK(*seven.value == 13);
  const auto all = words(seven);
  for (const TableRow& row : saturation_table()) {
    if (row.s != 2) continue;
    CHECK(std::binary_search(all.begin(), all.end(), canonical_letters(row.letters)));
  }

  // The length-12 semisaturated row is valid but longer than the minimum.
  const SearchResult semi = enumerate_minimal(abab, 6, SearchKind::MinSsat);
  CHECK(*semi.value == 9);
  const std::vector<Letter> row{0, 1, 0, 1, 2, 3, 2, 3, 4, 5, 4, 5};
  CHECK(check_semisaturated(Sequence(row, 6), abab, 6).passed());
  const auto semi_words = words(semi);
  CHECK(std::find(semi_words.begin(), semi_words.end(), row) == semi_words.end());
}

TEST_CASE("search agrees with exhaustive brute force") {
  const std::vector<const char*> patterns{"ab", "aba", "abab", "abc", "abca", "aab",
                                          "abba", "ababa", "abcb", "abb"};
  for (const char* text : patterns) {
    const Pattern u = parse_pattern(text);
    const oracle::Word raw(u.letters().begin(), u.letters().end());
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto kind : {SearchKind::MinSat, SearchKind::MinSsat, SearchKind::MaxFree}) {
        SearchOptions opts;
        opts.enumerate = true;
        opts.seed_from_bounds = false;
        opts.max_length = 8;
        const SearchResult r = run_search(kind, u, n, opts);
        const auto ex = oracle::exhaustive(raw, n, oracle_kind(kind), 8);
        INFO(text << " n=" << n << " " << to_string(kind));
        if (kind == SearchKind::MaxFree) {
          REQUIRE(ex.value.has_value());
          if (*ex.value < 8) {
            REQUIRE(r.exact());
            CHECK(*r.value == static_cast<std::int64_t>(*ex.value));
            CHECK(words(r) == ex.witnesses);
          } else {
            CHECK(r.status == SearchStatus::LevelCapReached);
          }
          continue;
        }
        if (ex.value) {
          REQUIRE(r.exact());
          CHECK(*r.value == static_cast<std::int64_t>(*ex.value));
          CHECK(words(r) == ex.witnesses);
          check_witnesses(r, u);
        } else {
          CHECK(r.status == SearchStatus::LevelCapReached);
          CHECK(r.lo == 9);
        }
      }
    }
  }
}

TEST_CASE("values do not depend on the number of workers") {
  for (const char* text : {"abab", "ababa", "abcab", "abcacb"}) {
    const Pattern u = parse_pattern(text);
    for (auto kind : {SearchKind::MinSat, SearchKind::MinSsat, SearchKind::MaxFree}) {
      const std::size_t n = kind == SearchKind::MaxFree ? 3 : 4;
      for (bool enumerate : {false, true}) {
        SearchOptions one, many;
        one.enumerate = many.enumerate = enumerate;
        many.jobs = 4;
        const SearchResult a = run_search(kind, u, n, one);
        const SearchResult b = run_search(kind, u, n, many);
        INFO(text << " " << to_string(kind) << " enumerate=" << enumerate);
        CHECK(a.value == b.value);
        CHECK(words(a) == words(b));
        CHECK(a.witness_count == b.witness_count);
        CHECK(a.status == b.status);
      }
    }
  }
}

TEST_CASE("sandwich and bounds") {
  for (const char* text : {"ab", "aba", "abab", "ababa", "abcab", "abca", "aab"}) {
    const Pattern u = parse_pattern(text);
    for (std::size_t n = 1; n <= 4; ++n) {
      SearchOptions opts;
      opts.seed_from_bounds = false;
      const SearchResult ssat = min_semisaturated(u, n, opts);
      const SearchResult sat = min_saturated(u, n, opts);
      const SearchResult ex = max_free(u, n, opts);
      REQUIRE(ssat.exact());
      REQUIRE(sat.exact());
      REQUIRE(ex.exact());
      INFO(text << " n=" << n);
      CHECK(*ssat.value <= *sat.value);
      CHECK(*sat.value <= *ex.value);
      const BoundReport sb = sat_bounds(u, n), tb = ssat_bounds(u, n);
      if (sb.lower) CHECK(*sb.lower <= *sat.value);
      if (sb.upper) CHECK(*sat.value <= *sb.upper);
      if (tb.lower) CHECK(*tb.lower <= *ssat.value);
      if (tb.upper) CHECK(*ssat.value <= *tb.upper);
    }
  }
}

TEST_CASE("budget and level cap") {
  SearchOptions tight;
  tight.budget = 50;
  tight.seed_from_bounds = false;
  const SearchResult r = min_saturated(Pattern::alternation(3), 5, tight);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.lo <= 13);
  CHECK(r.hi == 13);

  SearchOptions capped;
  capped.max_length = 6;
  const SearchResult c = min_saturated(abab, 5, capped);
  CHECK(c.status == SearchStatus::LevelCapReached);
  CHECK(c.lo == 7);

  SearchOptions ex_cap;
  ex_cap.max_length = 4;
  CHECK(max_free(abab, 3, ex_cap).status == SearchStatus::LevelCapReached);

  CHECK_THROWS_AS(min_saturated(parse_pattern("aa"), 3), std::invalid_argument);
  CHECK_THROWS_AS(min_saturated(abab, 0), std::invalid_argument);
}

TEST_CASE("result cache") {
  const auto path = std::filesystem::temp_directory_path() / "dssat_test_cache.jsonl";
  std::filesystem::remove(path);
  SearchOptions opts;
  {
    SearchCache cache(path);
    CHECK(cache.size() == 0);
    const SearchResult a = cached_search(&cache, SearchKind::MinSat, abab, 4, opts);
    CHECK(cache.size() == 1);
    const SearchResult b = cached_search(&cache, SearchKind::MinSat, abab, 4, opts);
    CHECK(a == b);
  }
  {
    SearchCache reloaded(path);
    CHECK(reloaded.size() == 1);
    CHECK(reloaded.rejected_on_load() == 0);
    REQUIRE(reloaded.find(SearchKind::MinSat, parse_pattern("0,1,0,1"), 4).has_value());
    CHECK_FALSE(reloaded.find(SearchKind::MinSsat, abab, 4).has_value());
  }
  {
    // A tampered witness is dropped on load.
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    in.close();
    const auto at = line.find("[0,1,0,2,0,3,0]");
    REQUIRE(at != std::string::npos);
    line.replace(at, 15, "[0,1,0,2,0,3,1]");
    std::ofstream out(path);
    out << line << '\n' << "not json\n";
  }
  SearchCache bad(path);
  CHECK(bad.size() == 0);
  CHECK(bad.rejected_on_load() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("conjecture formulas") {
  CHECK(predicted_sat_alt_length(7, 2) == 13);
  CHECK(predicted_sat_alt_length(6, 5) == 26);
  CHECK(predicted_sat_alt_length(7, 4) == 25);
  CHECK(predicted_ssat_alt_length(4, 5) == 13);
  CHECK(predicted_ssat_alt_length(6, 2) == 12);
  CHECK(predicted_ssat_alt_length(5, 3) == 11);
}

TEST_CASE("saturation conjecture on small cases") {
  const ConjectureReport two = verify_conjecture_sat_alt(2, {2, 3, 4, 5, 6});
  REQUIRE(two.points.size() == 5);
  for (const ConjecturePoint& p : two.points) {
    CHECK(p.status == PointStatus::Confirmed);
    CHECK(p.value == static_cast<std::int64_t>(2 * p.n - 1));
    CHECK(p.items.at("length"));
  }
  const ConjectureReport three = verify_conjecture_sat_alt(3, {2, 3, 4});
  for (const ConjecturePoint& p : three.points) {
    CHECK(p.status == PointStatus::Confirmed);
    CHECK(p.value == p.predicted);
    CHECK(p.items.count("first_last_order") == 1);
  }
  const ConjectureReport four = verify_conjecture_sat_alt(4, {2, 3});
  CHECK(four.count(PointStatus::Confirmed) == 2);

  SearchOptions tight;
  tight.budget = 10;
  const ConjectureReport skipped = verify_conjecture_sat_alt(4, {5}, tight);
  CHECK(skipped.points.at(0).status == PointStatus::Skipped);
  CHECK_FALSE(skipped.points.at(0).note.empty());
}

TEST_CASE("semisaturation conjecture on small cases") {
  const ConjectureReport two = verify_conjecture_ssat_alt(2, {2, 3, 4, 5, 6});
  const std::vector<std::int64_t> values{3, 5, 6, 7, 9};
  for (std::size_t i = 0; i < two.points.size(); ++i) {
    const ConjecturePoint& p = two.points[i];
    CHECK(p.value == values[i]);
    CHECK(p.status == PointStatus::Refuted);
    REQUIRE(p.counterexample.has_value());
    CHECK(check_semisaturated(*p.counterexample, abab, p.n).passed());
    CHECK(static_cast<std::int64_t>(p.counterexample->size()) < *p.predicted);
  }

  const ConjectureReport three = verify_conjecture_ssat_alt(3, {2, 3, 4, 5});
  CHECK(three.points[0].status == PointStatus::Refuted);
  CHECK(three.points[0].value == 4);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(three.points[i].value == three.points[i].predicted);
    CHECK(three.points[i].items.at("length"));
  }

  const ConjectureReport four = verify_conjecture_ssat_alt(4, {2, 3, 4});
  CHECK(four.points[2].value == 10);
  CHECK(four.points[2].predicted == 12);
  CHECK(four.points[2].status == PointStatus::Refuted);
}

TEST_CASE("bundled tables") {
  CHECK(saturation_table().size() == 16);
  CHECK(semisaturation_table().size() == 16);
  const ConjectureReport r = verify_tables();
  CHECK(r.points.size() == 32);
  CHECK(r.count(PointStatus::Confirmed) == 25);
  // Seven odd-order semisaturation rows admit an insertion that creates no new
  // copy of u_s; each is u_{s-1}-semisaturated instead.
  std::vector<std::string> refuted;
  for (const ConjecturePoint& p : r.points)
    if (p.status == PointStatus::Refuted) {
      refuted.push_back(p.note);
      CHECK(p.s % 2 == 1);
      REQUIRE(p.counterexample.has_value());
      CHECK_FALSE(check_semisaturated(*p.counterexample, Pattern::alternation(static_cast<int>(p.s)), p.n).passed());
      CHECK(check_semisaturated(*p.counterexample, Pattern::alternation(static_cast<int>(p.s) - 1), p.n).passed());
    }
  CHECK(refuted == std::vector<std::string>{"semisaturation row 9", "semisaturation row 10",
                                            "semisaturation row 11", "semisaturation row 12",
                                            "semisaturation row 13", "semisaturation row 14",
                                            "semisaturation row 16"});
}

TEST_CASE("enum strings round-trip") {
  for (auto k : {SearchKind::MinSat, SearchKind::MinSsat, SearchKind::MaxFree})
    CHECK(search_kind_from_string(to_string(k)) == k);
  for (auto s : {SearchStatus::Exact, SearchStatus::BudgetExceeded, SearchStatus::LevelCapReached})
    CHECK(search_status_from_string(to_string(s)) == s);
  for (auto s : {PointStatus::Confirmed, PointStatus::Refuted, PointStatus::Skipped})
    CHECK(point_status_from_string(to_string(s)) == s);
}

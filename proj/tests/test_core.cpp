#include <doctest.h>

#include <numeric>

#include "dssat/core.hpp"
#include "dssat/text.hpp"
#include "oracles.hpp"

using namespace dssat;

namespace {

Sequence seq(std::vector<Letter> v, std::size_t n = 0) {
  if (n == 0) return Sequence::over_used_letters(std::move(v));
  return Sequence(std::move(v), n);
}

const Pattern abab = parse_pattern("abab");

}  // namespace

TEST_CASE("sequence construction validates letters") {
  CHECK_THROWS_AS(Sequence({0, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Sequence({-1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Sequence({}, 0), std::invalid_argument);
  CHECK(Sequence({}, 1).empty());
  CHECK(Sequence::over_used_letters({0, 4, 2}).alphabet_size() == 5);
  CHECK(Sequence::over_used_letters({}).alphabet_size() == 1);
  CHECK(seq({0, 4, 2, 4}).distinct_count() == 3);
}

TEST_CASE("pattern statistics") {
  const Pattern p = parse_pattern("0,1,2,1,0");
  CHECK(p.distinct() == 3);
  CHECK(p.length() == 5);
  CHECK(p.first_multiplicity() == 2);
  CHECK(p.last_multiplicity() == 2);
  CHECK(p.singleton_count() == 1);
  CHECK(p.min_frequency() == 1);
  CHECK(p.word() == "abcba");

  const Pattern q = parse_pattern("7,3,7,3");
  CHECK(q == abab);
  CHECK(q.alternation_order() == 2);
  CHECK(Pattern::alternation(3).word() == "ababa");
  CHECK(Pattern::alternation(0).word() == "ab");
  CHECK_FALSE(parse_pattern("abba").alternation_order().has_value());
  CHECK(parse_pattern("aab").frequency(0) == 2);
  CHECK_THROWS_AS(Pattern(std::vector<Letter>{}), std::invalid_argument);
  CHECK_THROWS_AS(Pattern(std::vector<Letter>{0, -2}), std::invalid_argument);
}

TEST_CASE("canonical form renames by first occurrence") {
  CHECK(canonical_letters(std::vector<Letter>{5, 2, 5, 9, 2}) == std::vector<Letter>{0, 1, 0, 2, 1});
  const Sequence c = canonicalize(Sequence({3, 1, 3}, 4));
  CHECK(c.vec() == std::vector<Letter>{0, 1, 0});
  CHECK(c.alphabet_size() == 4);
}

TEST_CASE("insert and erase") {
  CHECK(insert(Sequence({0, 1, 0}, 3), 1, 2).vec() == std::vector<Letter>{0, 2, 1, 0});
  CHECK(insert(Sequence({}, 1), 0, 0).vec() == std::vector<Letter>{0});
  CHECK(insert(Sequence({0, 1}, 2), 2, 0).vec() == std::vector<Letter>{0, 1, 0});
  CHECK_THROWS_AS(insert(Sequence({0}, 2), 2, 0), std::out_of_range);
  CHECK_THROWS_AS(insert(Sequence({0}, 2), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(erase(Sequence({0}, 2), 1), std::out_of_range);

  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto w = oracle::random_word(rng, rng() % 10, 4);
    const Sequence s(w, 4);
    const std::size_t pos = rng() % (w.size() + 1);
    CHECK(erase(insert(s, pos, static_cast<Letter>(rng() % 4)), pos) == s);
  }
}

TEST_CASE("r-sparsity") {
  CHECK(is_r_sparse(std::vector<Letter>{0, 1, 2, 0, 1, 2}, 3));
  CHECK_FALSE(is_r_sparse(std::vector<Letter>{0, 1, 0}, 3));
  CHECK(is_r_sparse(std::vector<Letter>{0, 1, 0}, 2));
  CHECK(is_r_sparse(std::vector<Letter>{}, 5));
  CHECK(first_sparsity_violation(std::vector<Letter>{0, 1, 2, 3, 2}, 3) == 2u);
  CHECK_FALSE(first_sparsity_violation(std::vector<Letter>{0, 1, 0}, 2).has_value());

  std::mt19937 rng(5);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t r = 1 + rng() % 4;
    const auto w = oracle::random_word(rng, rng() % 12, 5);
    CHECK(is_r_sparse(w, r) == oracle::sparse(w, r));
    if (auto v = first_sparsity_violation(w, r)) {
      // The reported window repeats a letter and no earlier window does.
      const std::vector<int> window(w.begin() + static_cast<std::ptrdiff_t>(*v),
                                    w.begin() + static_cast<std::ptrdiff_t>(std::min(w.size(), *v + r)));
      CHECK_FALSE(oracle::sparse(window, r));
      if (*v > 0)
        CHECK(oracle::sparse(std::vector<int>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*v + r - 1)), r));
    }
    if (oracle::sparse(w, r)) {
      const std::size_t pos = rng() % (w.size() + 1);
      const int a = static_cast<int>(rng() % 5);
      auto grown = w;
      grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), a);
      CHECK(insertion_keeps_sparse(w, pos, a, r) == oracle::sparse(grown, r));
    }
  }
}

TEST_CASE("contains on fixed cases") {
  const auto e = contains(seq({0, 1, 2, 0, 1, 2}), abab);
  REQUIRE(e.has_value());
  CHECK(is_valid_embedding(std::vector<Letter>{0, 1, 2, 0, 1, 2}, abab, *e));
  CHECK(e->positions == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(e->letter_map == std::vector<Letter>{0, 1});

  CHECK_FALSE(contains(seq({0, 1, 2, 1, 3, 1, 4, 5, 4, 1, 6, 1, 0}), abab).has_value());
  const auto alt = contains(seq({0, 1, 0, 1, 0}), Pattern::alternation(3));
  REQUIRE(alt.has_value());
  CHECK(alt->positions == std::vector<std::size_t>{0, 1, 2, 3, 4});

  CHECK_FALSE(contains(seq({0}), parse_pattern("ab")).has_value());
  CHECK_FALSE(contains_naive(seq({0}), parse_pattern("ab")).has_value());
  CHECK(contains_naive(seq({0, 1, 2, 0, 1, 2}), abab).has_value());
  CHECK_FALSE(contains_naive(seq({0, 1, 2, 1, 3, 1, 4, 5, 4, 1, 6, 1, 0}), abab).has_value());
  CHECK(contains_naive(seq({0, 1, 0, 1, 0}), Pattern::alternation(3)).has_value());
  // Letters far above the host length take the compacting path.
  CHECK(contains(std::vector<Letter>{900, 40, 900, 40}, abab).has_value());
  CHECK_FALSE(contains(std::vector<Letter>{900, 40, 40, 900}, abab).has_value());
}

TEST_CASE("contains agrees with brute force") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 2000; ++t) {
    const int host_letters = 1 + static_cast<int>(rng() % 5);
    const auto s = oracle::random_word(rng, rng() % 12, host_letters);
    const auto raw = oracle::random_word(rng, 1 + rng() % 5, 1 + static_cast<int>(rng() % 3));
    const Pattern u(raw);
    const bool expect = oracle::contains(s, oracle::canonical(raw));
    const auto fast = contains(s, u);
    CHECK(fast.has_value() == expect);
    CHECK(contains_naive(s, u).has_value() == expect);
    if (fast) CHECK(is_valid_embedding(s, u, *fast));
  }
}

TEST_CASE("contains is invariant under renaming the host") {
  std::mt19937 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto s = oracle::random_word(rng, rng() % 12, 4);
    const Pattern u(oracle::random_word(rng, 2 + rng() % 4, 3));
    std::vector<Letter> perm{10, 11, 12, 13};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Letter> renamed;
    for (int x : s) renamed.push_back(perm[static_cast<std::size_t>(x)]);
    const bool base = contains(s, u).has_value();
    CHECK(contains(renamed, u).has_value() == base);
    CHECK(contains(canonical_letters(s), u).has_value() == base);
  }
}

TEST_CASE("contains_through") {
  CHECK(contains_through(seq({0, 1, 0, 1, 0}), abab, 4));
  CHECK_FALSE(contains_through(seq({0, 1, 2}), abab, 1));
  CHECK_FALSE(contains_through(seq({0, 1, 0, 1, 2}), abab, 4));
  CHECK_THROWS_AS(contains_through(seq({0, 1}), abab, 2), std::out_of_range);

  std::mt19937 rng(17);
  Matcher reused(abab);
  for (int t = 0; t < 2000; ++t) {
    const auto s = oracle::random_word(rng, 1 + rng() % 11, 1 + static_cast<int>(rng() % 4));
    const auto raw = oracle::random_word(rng, 1 + rng() % 5, 1 + static_cast<int>(rng() % 3));
    const Pattern u(raw);
    const std::size_t pos = rng() % s.size();
    const bool expect = oracle::contains_through(s, oracle::canonical(raw), pos);
    CHECK(contains_through(s, u, pos) == expect);
    if (expect) {
      CHECK(contains(s, u).has_value());
      const auto e = embedding_through(s, u, pos);
      REQUIRE(e.has_value());
      CHECK(is_valid_embedding(s, u, *e));
      CHECK(std::find(e->positions.begin(), e->positions.end(), pos) != e->positions.end());
    }
    CHECK(reused.occurs_through(s, pos) == oracle::contains_through(s, {0, 1, 0, 1}, pos));
  }
}

TEST_CASE("containment is monotone under insertion") {
  std::mt19937 rng(23);
  for (int t = 0; t < 500; ++t) {
    auto s = oracle::random_word(rng, rng() % 9, 3);
    const Pattern u(oracle::random_word(rng, 2 + rng() % 3, 2));
    const bool before = contains(s, u).has_value();
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng() % (s.size() + 1)), static_cast<int>(rng() % 3));
    if (before) CHECK(contains(s, u).has_value());
  }
}

TEST_CASE("longest alternation") {
  CHECK(longest_alternation(seq({0, 1, 0, 1}), 0, 1) == 4);
  CHECK(longest_alternation(seq({0, 1, 2, 0, 1, 2}), 0, 2) == 4);
  CHECK(longest_alternation(Sequence({}, 2), 0, 1) == 0);

  std::mt19937 rng(8);
  for (int t = 0; t < 2000; ++t) {
    const auto s = oracle::random_word(rng, rng() % 14, 4);
    const int a = static_cast<int>(rng() % 4);
    const int b = static_cast<int>(rng() % 4);
    CHECK(longest_alternation(s, a, b) == oracle::longest_alternation(s, a, b));
  }
}

TEST_CASE("text parsing") {
  CHECK(parse_pattern("abab").letters().size() == 4);
  CHECK(parse_pattern("abab") == Pattern(std::vector<Letter>{0, 1, 0, 1}));
  const Pattern p = parse_pattern("0,1,2,1,0");
  CHECK(p.distinct() == 3);
  CHECK(p.length() == 5);
  CHECK(parse_pattern("4, 9, 4") == parse_pattern("aba"));
  CHECK_THROWS_AS(parse_pattern("a,,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("  "), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("0,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("0,-1"), std::invalid_argument);

  CHECK(parse_sequence("0 1  0\t2").vec() == std::vector<Letter>{0, 1, 0, 2});
  CHECK(parse_sequence("0,1,0,2", 7).alphabet_size() == 7);
  CHECK(parse_sequence("").empty());
  CHECK_THROWS_AS(parse_sequence("0,1,", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("0,5", 3), std::invalid_argument);
  CHECK(format_letters(std::vector<Letter>{3, 1, 2}) == "3,1,2");
}

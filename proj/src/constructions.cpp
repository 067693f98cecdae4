#include "dssat/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "dssat/predicates.hpp"

namespace dssat {

namespace {

void require_pattern_r2(const Pattern& u) {
  if (u.distinct() < 2)
    throw std::invalid_argument("patterns with a single distinct letter are not supported");
}

void require_two_letter_shape(const Pattern& u) {
  auto x = u.letters();
  if (u.distinct() != 2 || x.size() < 2 || x[0] == x[1] ||
      x[x.size() - 2] == x[x.size() - 1])
    throw std::invalid_argument(
        "pattern must have two letters, distinct first two and distinct last two");
}

}  // namespace

Sequence up(std::size_t n, std::size_t l) {
  if (n == 0) throw std::invalid_argument("up: n must be positive");
  std::vector<Letter> v;
  v.reserve(n * l);
  for (std::size_t b = 0; b < l; ++b)
    for (std::size_t a = 0; a < n; ++a) v.push_back(static_cast<Letter>(a));
  return Sequence(std::move(v), n);
}

ConstructionOutput alt_saturated(std::size_t n, std::size_t s) {
  if (n < 2) throw std::invalid_argument("alt_saturated: n must be at least 2");
  if (s < 1) throw std::invalid_argument("alt_saturated: s must be at least 1");
  std::vector<Letter> v;
  if (s % 2 == 0) {
    // 0,j,0,j,... (s terms) for j = 1..n-1, then a closing 0.
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t t = 0; t < s; ++t) v.push_back(t % 2 ? static_cast<Letter>(j) : 0);
    v.push_back(0);
  } else {
    // j,j+1,j,...,j (s terms) for j = 0..n-2, then n-1.
    for (std::size_t j = 0; j + 1 < n; ++j)
      for (std::size_t t = 0; t < s; ++t)
        v.push_back(static_cast<Letter>(t % 2 ? j + 1 : j));
    v.push_back(static_cast<Letter>(n - 1));
  }
  ConstructionOutput out{Sequence(std::move(v), n),
                         static_cast<std::int64_t>(s * (n - 1) + 1),
                         "alt-sat",
                         {{"n", static_cast<std::int64_t>(n)}, {"s", static_cast<std::int64_t>(s)}},
                         Pattern::alternation(static_cast<int>(s)).word()};
  return out;
}

ConstructionOutput power_block_saturated(std::size_t k, std::size_t repeats,
                                         std::size_t n) {
  if (k < 2 || repeats < 2)
    throw std::invalid_argument("power_block_saturated: need k >= 2 and repeats >= 2");
  if (n < k) throw std::invalid_argument("power_block_saturated: need n >= k");
  std::vector<Letter> prefix;  // A_k = 0, ..., k-2
  for (std::size_t a = 0; a + 1 < k; ++a) prefix.push_back(static_cast<Letter>(a));
  std::vector<Letter> v;
  for (std::size_t i = k - 1; i < n; ++i) {
    for (std::size_t t = 0; t + 1 < repeats; ++t) {
      v.insert(v.end(), prefix.begin(), prefix.end());
      v.push_back(static_cast<Letter>(i));
    }
  }
  v.insert(v.end(), prefix.begin(), prefix.end());

  const auto K = static_cast<std::int64_t>(k), R = static_cast<std::int64_t>(repeats),
             N = static_cast<std::int64_t>(n);
  std::vector<Letter> u;
  for (std::size_t t = 0; t < repeats; ++t)
    for (std::size_t a = 0; a < k; ++a) u.push_back(static_cast<Letter>(a));
  return ConstructionOutput{Sequence(std::move(v), n),
                            (K * R - K) * N - (K - 1) * (K * R - K - 1),
                            "power-block",
                            {{"k", K}, {"repeats", R}, {"n", N}},
                            Pattern(u).word()};
}

Sequence longest_avoiding_alternation(const Pattern& u) {
  require_two_letter_shape(u);
  // Alternations are nested, so the first length that contains u ends the scan.
  std::vector<Letter> alt;
  for (std::size_t m = 1; m <= 2 * u.length() + 1; ++m) {
    alt.push_back(static_cast<Letter>((m - 1) % 2));
    if (contains(alt, u)) {
      alt.pop_back();
      return Sequence(std::move(alt), 2);
    }
  }
  throw std::logic_error("alternation of length 2l+1 avoids a two-letter pattern");
}

ConstructionOutput two_letter_saturated(const Pattern& u, std::size_t n) {
  require_two_letter_shape(u);
  if (n < 2) throw std::invalid_argument("two_letter_saturated: n must be at least 2");
  const std::vector<Letter> base = longest_avoiding_alternation(u).vec();
  std::vector<Letter> v = base;
  for (std::size_t y = 2; y < n; ++y) {
    // Copy of the base alternation on (last letter, y) without its first letter.
    const Letter x = v.back();
    for (std::size_t i = 1; i < base.size(); ++i)
      v.push_back(base[i] == 0 ? x : static_cast<Letter>(y));
  }
  const auto len = static_cast<std::int64_t>(v.size());
  return ConstructionOutput{Sequence(std::move(v), n),
                            len,
                            "two-letter",
                            {{"n", static_cast<std::int64_t>(n)},
                             {"base_length", static_cast<std::int64_t>(base.size())},
                             {"length_bound", static_cast<std::int64_t>(2 * u.length() * n)}},
                            u.word()};
}

Pattern double_last(const Pattern& u) {
  std::vector<Letter> v(u.letters().begin(), u.letters().end());
  v.push_back(v.back());
  return Pattern(v);
}

ConstructionOutput double_last_extend(const Pattern& u, const Sequence& s,
                                      std::size_t n) {
  require_pattern_r2(u);
  const std::size_t r = u.distinct();
  if (n < r) throw std::invalid_argument("double_last_extend: need n >= r");
  if (s.size() + 1 < r)
    throw std::invalid_argument("double_last_extend: sequence shorter than r - 1");
  if (check_saturated(s, u, n).status != VerdictStatus::Saturated)
    throw std::invalid_argument("double_last_extend: input is not u-saturated");

  // Relabel so the last r-1 letters of s become n-r+1, ..., n-1 in order and
  // the remaining letters take 0, 1, ... by first occurrence.
  std::vector<Letter> rename(n, -1);
  std::vector<bool> taken(n, false);
  for (std::size_t t = 0; t + 1 < r; ++t) {
    const Letter a = s[s.size() - (r - 1) + t];
    rename[a] = static_cast<Letter>(n - r + 1 + t);
    taken[n - r + 1 + t] = true;
  }
  Letter next_free = 0;
  auto fresh = [&] {
    while (taken[next_free]) ++next_free;
    taken[next_free] = true;
    return next_free;
  };
  std::vector<Letter> v;
  v.reserve(s.size() + r * n);
  for (Letter a : s) {
    if (rename[a] < 0) rename[a] = fresh();
    v.push_back(rename[a]);
  }
  const std::size_t copy_end = v.size();
  for (std::size_t a = 0; a < n; ++a) v.push_back(static_cast<Letter>(a));

  // Greedy stage: smallest admissible (letter, gap) after the copy of s,
  // restarting after each insertion until a full pass adds nothing.
  const Pattern target = double_last(u);
  std::size_t added = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t a = n - r + 1; a < n && !progress; ++a) {
      const auto letter = static_cast<Letter>(a);
      for (std::size_t pos = copy_end; pos <= v.size() && !progress; ++pos) {
        if (!insertion_keeps_sparse(v, pos, letter, r)) continue;
        std::vector<Letter> grown = v;
        grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), letter);
        if (!contains_through(grown, target, pos)) {
          v = std::move(grown);
          ++added;
          progress = true;
        }
      }
    }
  }

  const auto len = static_cast<std::int64_t>(v.size());
  return ConstructionOutput{
      Sequence(std::move(v), n),
      len,
      "double-last",
      {{"n", static_cast<std::int64_t>(n)},
       {"input_length", static_cast<std::int64_t>(s.size())},
       {"copy_end", static_cast<std::int64_t>(copy_end)},
       {"greedy_added", static_cast<std::int64_t>(added)},
       {"length_bound_exclusive", static_cast<std::int64_t>(s.size() + r * n)}},
      target.word()};
}

ConstructionOutput ssat_general(const Pattern& u, std::size_t n) {
  require_pattern_r2(u);
  if (n < u.distinct())
    throw std::invalid_argument("ssat_general: need n >= r for up(n, l) to be r-sparse");
  const std::size_t l = u.length();
  return ConstructionOutput{up(n, l),
                            static_cast<std::int64_t>(n * l),
                            "ssat-general",
                            {{"n", static_cast<std::int64_t>(n)}, {"l", static_cast<std::int64_t>(l)}},
                            u.word()};
}

ConstructionOutput ssat_constant(const Pattern& u) {
  require_pattern_r2(u);
  if (u.first_multiplicity() != 1 || u.last_multiplicity() != 1)
    throw std::invalid_argument("ssat_constant: first and last letters must occur once");
  const std::size_t r = u.distinct(), l = u.length();
  return ConstructionOutput{up(r, 2 * l),
                            static_cast<std::int64_t>(2 * l * r),
                            "ssat-const",
                            {{"r", static_cast<std::int64_t>(r)}, {"l", static_cast<std::int64_t>(l)}},
                            u.word()};
}

ConstructionOutput ssat_alt(std::size_t n, std::size_t s) {
  if (n < 2) throw std::invalid_argument("ssat_alt: n must be at least 2");
  if (s < 1) throw std::invalid_argument("ssat_alt: s must be at least 1");
  std::vector<Letter> v;
  std::int64_t claimed = 0;
  if (s % 2 == 0) {
    v = up(n, (s + 2) / 2).vec();
    claimed = static_cast<std::int64_t>((s + 2) / 2 * n);
  } else {
    v = up(n, (s + 1) / 2).vec();
    v.push_back(0);
    claimed = static_cast<std::int64_t>((s + 1) / 2 * n + 1);
  }
  return ConstructionOutput{Sequence(std::move(v), n),
                            claimed,
                            "ssat-alt",
                            {{"n", static_cast<std::int64_t>(n)}, {"s", static_cast<std::int64_t>(s)}},
                            Pattern::alternation(static_cast<int>(s)).word()};
}

}  // namespace dssat

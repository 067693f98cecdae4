#include "dssat/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dssat {

std::string to_string(BoundTarget t) {
  switch (t) {
    case BoundTarget::Sat: return "SAT";
    case BoundTarget::Ssat: return "SSAT";
    case BoundTarget::Xi: return "XI";
  }
  return "?";
}

std::string to_string(Growth g) {
  switch (g) {
    case Growth::Constant: return "CONSTANT";
    case Growth::AtLeastN: return "AT_LEAST_N";
    case Growth::ThetaN: return "THETA_N";
    case Growth::Unknown: return "UNKNOWN";
  }
  return "?";
}

BoundTarget bound_target_from_string(const std::string& text) {
  for (auto t : {BoundTarget::Sat, BoundTarget::Ssat, BoundTarget::Xi})
    if (to_string(t) == text) return t;
  throw std::invalid_argument("unknown bound target: " + text);
}

Growth growth_from_string(const std::string& text) {
  for (auto g : {Growth::Constant, Growth::AtLeastN, Growth::ThetaN, Growth::Unknown})
    if (to_string(g) == text) return g;
  throw std::invalid_argument("unknown growth class: " + text);
}

bool is_all_distinct(const Pattern& u) { return u.length() == u.distinct(); }

bool is_first_repeated_at_end(const Pattern& u) {
  return u.length() == u.distinct() + 1 && u.letters().back() == 0 &&
         u.first_multiplicity() == 2;
}

std::optional<std::pair<std::size_t, std::size_t>> power_block_shape(const Pattern& u) {
  const std::size_t k = u.distinct(), l = u.length();
  if (l % k != 0 || l / k < 2) return std::nullopt;
  for (std::size_t i = 0; i < l; ++i)
    if (u.letters()[i] != static_cast<Letter>(i % k)) return std::nullopt;
  return std::pair{k, l / k};
}

bool is_nested(const Pattern& u) {
  const std::size_t k = u.distinct();
  if (k < 2 || u.length() != 2 * k - 1) return false;
  for (std::size_t i = 0; i < u.length(); ++i) {
    std::size_t expect = i < k ? i : 2 * k - 2 - i;
    if (u.letters()[i] != static_cast<Letter>(expect)) return false;
  }
  return true;
}

bool is_second_too_far(const Pattern& u) {
  const std::size_t r = u.distinct();
  if (r < 3 || u.first_multiplicity() != 1 || u.length() < r) return false;
  for (std::size_t i = 1; i < r; ++i)
    if (u.frequency(u.letters()[i]) < 2) return false;
  return true;
}

Growth classify_ssat(const Pattern& u) {
  if (u.distinct() < 2) throw std::invalid_argument("pattern needs two distinct letters");
  return u.first_multiplicity() == 1 && u.last_multiplicity() == 1 ? Growth::Constant
                                                                   : Growth::ThetaN;
}

Growth classify_sat_two_letter(const Pattern& u) {
  if (u.distinct() != 2) throw std::invalid_argument("pattern must have exactly two letters");
  return u.length() == 2 ? Growth::Constant : Growth::ThetaN;
}

std::int64_t sparse_length_bound(std::int64_t r, std::int64_t k, std::int64_t l) {
  if (k < 0 || k >= r) throw std::invalid_argument("sparse_length_bound: need 0 <= k < r");
  if (l < 0) throw std::invalid_argument("sparse_length_bound: need l >= 0");
  return (r * l + r * k - k) / (r - k);
}

namespace {

using I = std::int64_t;

struct Builder {
  BoundReport report;
  bool lower_n_growth = false;   // some clause gives Sat >= n (or Omega(n))
  bool linear_growth = false;    // some clause gives O(n)
  bool constant_growth = false;

  Clause& add(std::string id, std::string citation, bool applicable) {
    report.clauses.push_back(Clause{std::move(id), std::move(citation), applicable, {}, {}, false});
    return report.clauses.back();
  }

  void finish() {
    for (const Clause& c : report.clauses) {
      if (!c.applicable) continue;
      if (c.lower) report.lower = report.lower ? std::max(*report.lower, *c.lower) : *c.lower;
      if (c.upper) report.upper = report.upper ? std::min(*report.upper, *c.upper) : *c.upper;
    }
    if (constant_growth) report.classification = Growth::Constant;
    else if (lower_n_growth && linear_growth) report.classification = Growth::ThetaN;
    else if (lower_n_growth) report.classification = Growth::AtLeastN;
    else report.classification = Growth::Unknown;
  }
};

void require(const Pattern& u, std::size_t n) {
  if (u.distinct() < 2) throw std::invalid_argument("pattern needs two distinct letters");
  if (n == 0) throw std::invalid_argument("alphabet size must be positive");
}

// Alternation bounds shared by Sat and Ssat: the lower bound holds for n >= 3.
std::optional<I> alternation_lower(I n, I s) {
  if (n < 3) return std::nullopt;
  return s % 2 == 0 ? n * (s / 2) + 1 : n * (s / 2) + 3;
}

void small_alphabet_clause(Builder& b, const Pattern& u, I n) {
  const I r = static_cast<I>(u.distinct());
  Clause& c = b.add("small_alphabet",
                    "n < r: r-sparse sequences are lists of distinct letters and cannot hold u, "
                    "so exactly the sequences using all n letters qualify",
                    n < r);
  if (c.applicable) c.lower = c.upper = n;
}

}  // namespace

BoundReport sat_bounds(const Pattern& u, std::size_t n_size) {
  require(u, n_size);
  const I n = static_cast<I>(n_size), r = static_cast<I>(u.distinct()),
          l = static_cast<I>(u.length());
  Builder b;
  b.report.target = BoundTarget::Sat;
  b.report.pattern = u.word();
  b.report.n = n_size;

  small_alphabet_clause(b, u, n);

  {
    Clause& c = b.add("all_distinct", "Sat(u,n) = min(n, r-1) when every letter of u occurs once",
                      is_all_distinct(u));
    if (c.applicable) {
      c.lower = c.upper = std::min(n, r - 1);
      b.constant_growth = true;
    }
  }
  {
    bool repeated = u.first_multiplicity() > 1 || u.last_multiplicity() > 1;
    Clause& c = b.add("first_or_last_repeated",
                      "Sat(u,n) >= n when the first or the last letter of u occurs multiple times",
                      repeated);
    if (repeated) {
      c.lower = n;
      b.lower_n_growth = true;
    }
  }
  {
    Clause& c = b.add("first_repeated_at_end", "Sat(a_1 a_2 ... a_k a_1, n) = n",
                      is_first_repeated_at_end(u));
    if (c.applicable) {
      c.lower = c.upper = n;
      b.lower_n_growth = b.linear_growth = true;
    }
  }
  {
    auto shape = power_block_shape(u);
    Clause& c = b.add("power_block",
                      "Sat((a_1...a_k)^t, n) <= (kt-k)n - (k-1)(kt-k-1) for n >= k",
                      shape && n >= static_cast<I>(shape->first));
    if (shape) b.linear_growth = true;
    if (c.applicable) {
      const I k = static_cast<I>(shape->first), t = static_cast<I>(shape->second);
      c.upper = (k * t - k) * n - (k - 1) * (k * t - k - 1);
    }
  }
  {
    auto s = u.alternation_order();
    bool alt = s && *s >= 1;
    Clause& c = b.add("alternation",
                      "xi(n,s) <= s(n-1)+1 for n >= 2; xi(n,s) >= n*floor(s/2)+1 (s even) or "
                      "+3 (s odd) for n >= 3; xi(n,1) = n",
                      alt && n >= 2);
    if (alt) b.linear_growth = true;
    if (c.applicable) {
      const I order = *s;
      c.upper = order * (n - 1) + 1;
      c.lower = alternation_lower(n, order);
      if (order == 1) c.lower = c.upper = n;
    }
  }
  {
    Clause& c = b.add("nested",
                      "Sat(a_1...a_k...a_1, n) = Theta(n) via a linear extremal bound from "
                      "outside this library",
                      is_nested(u));
    c.external = true;
    if (c.applicable) b.linear_growth = b.lower_n_growth = true;
  }
  {
    const I m = static_cast<I>(u.min_frequency());
    Clause& c = b.add("min_frequency",
                      "Sat(u,n) >= (m_u - 1) n when m_u >= 2, for n >= 2r - 2",
                      m >= 2 && n >= 2 * r - 2);
    if (m >= 2) b.lower_n_growth = true;
    if (c.applicable) c.lower = (m - 1) * n;
  }
  b.add("dichotomy", "either Sat(u,n) >= n for every n, or Sat(u,n) = O(1)", true);
  {
    Clause& c = b.add("two_letter", "Sat(u,n) <= 2 l n when u has two distinct letters", r == 2);
    if (c.applicable) {
      c.upper = 2 * l * n;
      b.linear_growth = true;
    }
  }
  {
    bool shape = is_second_too_far(u);
    Clause& c = b.add("second_too_far",
                      "Sat(u,n) >= n for n >= r when r >= 3, the first letter occurs once and "
                      "the next r-1 letters each occur more than once",
                      shape && n >= r);
    if (shape) b.lower_n_growth = true;
    if (c.applicable) c.lower = n;
  }
  {
    bool shape = l >= 3 && u.singleton_count() < 3;
    Clause& c = b.add("few_singletons",
                      "Sat(u,n) >= n when |u| >= 3 and fewer than 3 letters occur exactly once; "
                      "Sat(u,n) = O(1) needs at least 3 such letters",
                      shape);
    if (shape) {
      c.lower = n;
      b.lower_n_growth = true;
    }
  }
  b.finish();
  return b.report;
}

BoundReport xi_bounds(std::size_t n, std::size_t s) {
  if (s < 1) throw std::invalid_argument("xi_bounds: s must be at least 1");
  BoundReport report = sat_bounds(Pattern::alternation(static_cast<int>(s)), n);
  report.target = BoundTarget::Xi;
  return report;
}

BoundReport ssat_bounds(const Pattern& u, std::size_t n_size) {
  require(u, n_size);
  const I n = static_cast<I>(n_size), r = static_cast<I>(u.distinct()),
          l = static_cast<I>(u.length());
  Builder b;
  b.report.target = BoundTarget::Ssat;
  b.report.pattern = u.word();
  b.report.n = n_size;

  small_alphabet_clause(b, u, n);
  {
    Clause& c = b.add("all_distinct", "Ssat(u,n) = min(n, r-1) when every letter of u occurs once",
                      is_all_distinct(u));
    if (c.applicable) c.lower = c.upper = std::min(n, r - 1);
  }
  {
    bool repeated = u.first_multiplicity() > 1 || u.last_multiplicity() > 1;
    Clause& c = b.add("first_or_last_repeated",
                      "Ssat(u,n) >= n when the first or the last letter of u occurs multiple times",
                      repeated);
    if (repeated) c.lower = n;
  }
  {
    Clause& c = b.add("first_repeated_at_end", "Ssat(a_1 a_2 ... a_k a_1, n) = n",
                      is_first_repeated_at_end(u));
    if (c.applicable) c.lower = c.upper = n;
  }
  {
    Clause& c = b.add("repeated_blocks", "up(n, l) is u-semisaturated, so Ssat(u,n) <= l n",
                      n >= r);
    if (c.applicable) c.upper = l * n;
  }
  {
    bool shape = u.first_multiplicity() == 1 && u.last_multiplicity() == 1;
    Clause& c = b.add("constant_witness",
                      "up(r, 2l) is u-semisaturated when the first and last letters of u occur "
                      "once, so Ssat(u,n) <= 2 l r",
                      shape && n >= r);
    if (c.applicable) c.upper = 2 * l * r;
  }
  {
    auto s = u.alternation_order();
    bool alt = s && *s >= 1;
    Clause& c = b.add("alternation",
                      "Ssat(u_s,n) <= ((s+1)/2) n + 1 (s odd) or ((s+2)/2) n (s even) for n >= 2; "
                      "lower bound as for xi for n >= 3",
                      alt && n >= 2);
    if (c.applicable) {
      const I order = *s;
      c.upper = order % 2 ? (order + 1) / 2 * n + 1 : (order + 2) / 2 * n;
      c.lower = alternation_lower(n, order);
    }
  }
  b.finish();
  b.report.classification = classify_ssat(u);
  return b.report;
}

}  // namespace dssat

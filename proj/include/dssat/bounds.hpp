#pragma once

// Closed-form lower and upper bounds on Sat, Ssat and xi, assembled from
// pattern-shape clauses. Each report lists every clause consulted.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dssat/core.hpp"

namespace dssat {

enum class BoundTarget { Sat, Ssat, Xi };
enum class Growth { Constant, AtLeastN, ThetaN, Unknown };

std::string to_string(BoundTarget t);
std::string to_string(Growth g);
BoundTarget bound_target_from_string(const std::string& text);
Growth growth_from_string(const std::string& text);

struct Clause {
  std::string id;
  std::string citation;  // the statement the clause evaluates
  bool applicable = false;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  /// The clause gives growth information only (no numeric value here).
  bool external = false;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct BoundReport {
  BoundTarget target = BoundTarget::Sat;
  std::string pattern;
  std::size_t n = 0;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  Growth classification = Growth::Unknown;
  std::vector<Clause> clauses;

  bool exact() const { return lower && upper && *lower == *upper; }
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// xi(n, s) = Sat(u_s, n). Throws std::invalid_argument for n < 1 or s < 1.
BoundReport xi_bounds(std::size_t n, std::size_t s);

/// Throws std::invalid_argument if u has fewer than two distinct letters or
/// n is zero.
BoundReport sat_bounds(const Pattern& u, std::size_t n);
BoundReport ssat_bounds(const Pattern& u, std::size_t n);

/// Constant iff the first and last letters of u each occur exactly once.
Growth classify_ssat(const Pattern& u);

/// For two-letter u: Constant iff u is ab, otherwise Theta(n).
Growth classify_sat_two_letter(const Pattern& u);

/// floor((r l + r k - k) / (r - k)): the longest an r-sparse sequence can be
/// when all but k of its letters occur l times in total. Requires k < r.
std::int64_t sparse_length_bound(std::int64_t r, std::int64_t k, std::int64_t l);

/// Shape predicates used by the clauses.
bool is_all_distinct(const Pattern& u);
/// a_1 a_2 ... a_k a_1 with k >= 1 distinct inner letters.
bool is_first_repeated_at_end(const Pattern& u);
/// (a_1 ... a_k)^t with t >= 2; returns (k, t).
std::optional<std::pair<std::size_t, std::size_t>> power_block_shape(const Pattern& u);
/// a_1 a_2 ... a_k ... a_2 a_1 with k >= 2.
bool is_nested(const Pattern& u);
/// r >= 3, first letter once, and each of the next r-1 letters more than once.
bool is_second_too_far(const Pattern& u);

}  // namespace dssat

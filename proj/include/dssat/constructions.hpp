#pragma once

// Explicit saturated and semisaturated sequences. Every generator emits
// 0-based letters; the checks that they satisfy their predicates live in the
// tests and in `verify_construction`.

#include <cstdint>
#include <map>
#include <string>

#include "dssat/core.hpp"

namespace dssat {

struct ConstructionOutput {
  Sequence sequence;
  std::int64_t claimed_length = 0;
  std::string construction_id;
  std::map<std::string, std::int64_t> parameters;
  std::string pattern;  // pattern word the sequence is built for, if any

  friend bool operator==(const ConstructionOutput&, const ConstructionOutput&) = default;
};

/// up(n, l): the block 0, 1, ..., n-1 repeated l times.
Sequence up(std::size_t n, std::size_t l);

/// u_s-saturated sequence of length s(n-1)+1 on n >= 2 letters.
ConstructionOutput alt_saturated(std::size_t n, std::size_t s);

/// (a_1 ... a_k)^repeats-saturated k-sparse sequence on n >= k letters with
/// length (k*repeats - k) n - (k-1)(k*repeats - k - 1).
ConstructionOutput power_block_saturated(std::size_t k, std::size_t repeats,
                                         std::size_t n);

/// Longest alternation 0,1,0,1,... avoiding a two-letter u whose first two
/// letters differ and whose last two letters differ.
Sequence longest_avoiding_alternation(const Pattern& u);

/// u-saturated sequence on n >= 2 letters of length at most 2 l n, for u as
/// in `longest_avoiding_alternation`.
ConstructionOutput two_letter_saturated(const Pattern& u, std::size_t n);

/// Given u-saturated s on n >= r letters, a u'-saturated sequence where u' is
/// u with its last letter doubled. Length is below |s| + r n. Letters of the
/// greedy stage are only ever placed after the copy of s.
ConstructionOutput double_last_extend(const Pattern& u, const Sequence& s,
                                      std::size_t n);

/// u with its last letter appended once more.
Pattern double_last(const Pattern& u);

/// up(n, l) for l = |u|; u-semisaturated when n >= r >= 2.
ConstructionOutput ssat_general(const Pattern& u, std::size_t n);

/// up(r, 2l) for u whose first and last letters each occur once.
ConstructionOutput ssat_constant(const Pattern& u);

/// u_s-semisaturated: up(n, (s+2)/2) for even s, up(n, (s+1)/2) plus a
/// trailing 0 for odd s.
ConstructionOutput ssat_alt(std::size_t n, std::size_t s);

}  // namespace dssat

#pragma once

// Saturation and semisaturation verdicts with witnesses, and per-sequence
// checks of the structural lemmas about sequences saturated for alternations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dssat/core.hpp"

namespace dssat {

enum class VerdictStatus {
  Saturated,
  Semisaturated,
  NotSparse,
  NotUFree,
  AdmissibleInsertion,
};

std::string to_string(VerdictStatus status);
VerdictStatus verdict_status_from_string(const std::string& text);

struct Insertion {
  Letter letter = 0;
  std::size_t position = 0;
  friend bool operator==(const Insertion&, const Insertion&) = default;
};

/// Result of a (semi)saturation check. Failure statuses carry exactly one
/// witness: an embedding for NotUFree, an insertion for AdmissibleInsertion,
/// and the start of an offending window for NotSparse.
struct Verdict {
  VerdictStatus status = VerdictStatus::Saturated;
  std::optional<Embedding> embedding;
  std::optional<Insertion> insertion;
  std::optional<std::size_t> window;

  bool passed() const {
    return status == VerdictStatus::Saturated ||
           status == VerdictStatus::Semisaturated;
  }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

bool is_u_free(std::span<const Letter> s, const Pattern& u);
inline bool is_u_free(const Sequence& s, const Pattern& u) {
  return is_u_free(s.letters(), u);
}

/// Lexicographically smallest (letter, position) insertion that keeps
/// r-sparsity and creates no copy of u through the inserted index. On a
/// u-free host that is the same as creating no copy at all, so this serves
/// both saturation and semisaturation. Letters that do not occur in s are
/// interchangeable, so only the smallest unused letter below n is tried.
/// Assumes s is r-sparse with letters below n.
std::optional<Insertion> first_admissible_insertion(std::span<const Letter> s,
                                                    const Pattern& u,
                                                    std::size_t n);

/// Throws std::invalid_argument if some letter of s is not below n.
Verdict check_saturated(const Sequence& s, const Pattern& u, std::size_t n);
Verdict check_semisaturated(const Sequence& s, const Pattern& u, std::size_t n);

struct LemmaCheck {
  bool passed = true;
  /// Indices into the checked sequence locating the first failure.
  std::vector<std::size_t> counterexample;
  std::string detail;
  friend bool operator==(const LemmaCheck&, const LemmaCheck&) = default;
};

/// One entry per lemma that applies to the given (s, n); `valid` is false
/// when the input is not u_s-saturated, in which case no lemma is evaluated.
struct StructuralReport {
  bool valid = false;
  Verdict verdict;
  std::map<std::string, LemmaCheck> lemmas;

  bool all_passed() const;
  friend bool operator==(const StructuralReport&, const StructuralReport&) = default;
};

StructuralReport check_structure_alt(const Sequence& s, int order,
                                     std::size_t n);

}  // namespace dssat

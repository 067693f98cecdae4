#pragma once

// Sequences, forbidden patterns, r-sparsity and pattern containment up to
// injective renaming of letters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dssat {

using Letter = std::int32_t;

/// A finite word over the alphabet [0, n). Letters need not all occur.
class Sequence {
 public:
  Sequence() = default;
  /// Throws std::invalid_argument if n == 0 or a letter is outside [0, n).
  Sequence(std::vector<Letter> letters, std::size_t alphabet_size);

  /// Alphabet size is the smallest n that fits every letter (at least 1).
  static Sequence over_used_letters(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  const std::vector<Letter>& vec() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Number of distinct letters that occur.
  std::size_t distinct_count() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Letter> letters_;
  std::size_t alphabet_size_ = 1;
};

/// A forbidden sequence u, stored in canonical form (the k-th distinct letter
/// to appear is k-1), together with the statistics the bounds depend on.
class Pattern {
 public:
  /// Canonicalizes `letters`. Throws std::invalid_argument when empty or
  /// when a letter is negative.
  explicit Pattern(std::span<const Letter> letters);
  explicit Pattern(const std::vector<Letter>& letters)
      : Pattern(std::span<const Letter>(letters)) {}

  /// The alternation u_s = abab... of length s + 2.
  static Pattern alternation(int s);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  /// r, the number of distinct letters.
  std::size_t distinct() const { return freq_.size(); }
  std::size_t frequency(Letter a) const;
  /// m_u, the smallest positive letter frequency.
  std::size_t min_frequency() const;
  std::size_t first_multiplicity() const { return freq_[letters_.front()]; }
  std::size_t last_multiplicity() const { return freq_[letters_.back()]; }
  /// Number of letters occurring exactly once.
  std::size_t singleton_count() const;

  /// Compact lowercase word ("abab") when r <= 26, else a comma list.
  std::string word() const;

  /// Alternation order s if this pattern is isomorphic to u_s (s >= 0).
  std::optional<int> alternation_order() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  std::vector<std::size_t> freq_;
};

/// Witness that a subsequence of a host is isomorphic to a pattern.
struct Embedding {
  std::vector<std::size_t> positions;  // strictly increasing, one per pattern letter
  std::vector<Letter> letter_map;      // pattern letter -> host letter, injective

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Reusable backtracking matcher for one pattern. Depth-first over pattern
/// positions: an already mapped letter extends to its next occurrence in the
/// host; an unmapped one tries every unused host letter. Buffers are reused
/// across calls, so one instance must not be shared between threads.
class Matcher {
 public:
  explicit Matcher(const Pattern& u);

  std::optional<Embedding> find(std::span<const Letter> host);
  /// Throws std::out_of_range if pos >= |host|.
  std::optional<Embedding> find_through(std::span<const Letter> host, std::size_t pos);
  bool occurs(std::span<const Letter> host);
  bool occurs_through(std::span<const Letter> host, std::size_t pos);

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool run(std::span<const Letter> host, std::size_t forced);
  void load(std::span<const Letter> host);
  Embedding embedding() const;
  bool place(std::size_t i, std::size_t c, std::size_t h, std::size_t at, bool through,
             bool fresh);
  bool extend(std::size_t i, std::size_t c, std::size_t h, std::size_t frontier,
              bool through, bool fresh);
  bool dfs(std::size_t i, std::size_t frontier, bool through);

  std::vector<Letter> u_;
  std::size_t distinct_;
  std::size_t length_ = 0;
  std::size_t k_ = 0;
  std::vector<std::size_t> compact_;
  std::vector<Letter> original_;
  std::vector<std::size_t> next_;  // next_[i * k_ + h]: first index >= i holding h
  std::vector<std::size_t> map_;
  std::vector<char> used_;
  std::vector<std::size_t> positions_;
  std::size_t forced_ = kNone;
};

/// Letters renamed by order of first occurrence; the alphabet size is kept.
Sequence canonicalize(const Sequence& s);
std::vector<Letter> canonical_letters(std::span<const Letter> letters);

bool is_r_sparse(std::span<const Letter> s, std::size_t r);
inline bool is_r_sparse(const Sequence& s, std::size_t r) {
  return is_r_sparse(s.letters(), r);
}

/// First index i such that the window [i, i + r) repeats a letter.
std::optional<std::size_t> first_sparsity_violation(std::span<const Letter> s,
                                                    std::size_t r);

/// Whether inserting `a` at gap `pos` of an r-sparse host keeps it r-sparse.
/// Only the 2r - 2 letters around the gap can conflict.
bool insertion_keeps_sparse(std::span<const Letter> s, std::size_t pos,
                            Letter a, std::size_t r);

/// Throws std::out_of_range if pos > |s| and std::invalid_argument if a >= n.
Sequence insert(const Sequence& s, std::size_t pos, Letter a);
/// Throws std::out_of_range if pos >= |s|.
Sequence erase(const Sequence& s, std::size_t pos);

/// Some embedding of u in s, found by backtracking over injective letter
/// assignments with leftmost extension.
std::optional<Embedding> contains(std::span<const Letter> s, const Pattern& u);
inline std::optional<Embedding> contains(const Sequence& s, const Pattern& u) {
  return contains(s.letters(), u);
}

/// Reference decision procedure: every injective map from pattern letters to
/// host letters, each followed by a greedy subsequence test. Exponential in r.
std::optional<Embedding> contains_naive(std::span<const Letter> s,
                                        const Pattern& u);
inline std::optional<Embedding> contains_naive(const Sequence& s,
                                               const Pattern& u) {
  return contains_naive(s.letters(), u);
}

/// Whether some embedding of u in s uses index `pos`. Throws
/// std::out_of_range if pos >= |s|.
bool contains_through(std::span<const Letter> s, const Pattern& u,
                      std::size_t pos);
inline bool contains_through(const Sequence& s, const Pattern& u,
                             std::size_t pos) {
  return contains_through(s.letters(), u, pos);
}
std::optional<Embedding> embedding_through(std::span<const Letter> s,
                                           const Pattern& u, std::size_t pos);

/// Length of the longest subsequence alternating between a and b.
std::size_t longest_alternation(std::span<const Letter> s, Letter a, Letter b);
inline std::size_t longest_alternation(const Sequence& s, Letter a, Letter b) {
  return longest_alternation(s.letters(), a, b);
}

/// Checks the Embedding invariants against host and pattern.
bool is_valid_embedding(std::span<const Letter> s, const Pattern& u,
                        const Embedding& e);

}  // namespace dssat

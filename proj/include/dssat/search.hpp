#pragma once

// Exact Sat / Ssat / Ex values by exhaustive search over canonical r-sparse
// sequences, plus checks of the alternation conjectures and the bundled
// tables of short (semi)saturated sequences.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dssat/core.hpp"

namespace dssat {

enum class SearchKind { MinSat, MinSsat, MaxFree };
enum class SearchStatus { Exact, BudgetExceeded, LevelCapReached };

std::string to_string(SearchKind k);
std::string to_string(SearchStatus s);
SearchKind search_kind_from_string(const std::string& text);
SearchStatus search_status_from_string(const std::string& text);

struct SearchOptions {
  /// Node cap over the whole run; 0 means unlimited.
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  /// Collect every witness at the optimal length instead of the
  /// lexicographically first one.
  bool enumerate = false;
  std::size_t max_witnesses = 1000;
  /// Start the level scan at the closed-form lower bound instead of 0.
  bool seed_from_bounds = true;
  /// Last level tried (minimization) or deepest length explored (Ex).
  std::optional<std::size_t> max_length;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::size_t first_level = 0;
  std::size_t last_level = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchResult {
  SearchKind kind = SearchKind::MinSat;
  std::string pattern;
  std::size_t n = 0;
  SearchStatus status = SearchStatus::Exact;
  std::optional<std::int64_t> value;
  /// Verified interval for the value; lo == hi == value when exact.
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;
  /// Canonical, sorted, pairwise distinct.
  std::vector<Sequence> witnesses;
  std::uint64_t witness_count = 0;
  SearchStats stats;

  bool exact() const { return status == SearchStatus::Exact; }
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Sat(u, n). Throws std::invalid_argument for r < 2 or n == 0.
SearchResult min_saturated(const Pattern& u, std::size_t n, const SearchOptions& opts = {});
/// Ssat(u, n).
SearchResult min_semisaturated(const Pattern& u, std::size_t n, const SearchOptions& opts = {});
/// Ex(u, n): longest r-sparse u-free sequence on at most n letters.
SearchResult max_free(const Pattern& u, std::size_t n, const SearchOptions& opts = {});

SearchResult run_search(SearchKind kind, const Pattern& u, std::size_t n,
                        const SearchOptions& opts = {});
/// Same as run_search with enumerate forced on.
SearchResult enumerate_minimal(const Pattern& u, std::size_t n, SearchKind kind,
                               SearchOptions opts = {});

/// Whether `s` satisfies the predicate that witnesses of `kind` must satisfy.
bool is_valid_witness(SearchKind kind, const Sequence& s, const Pattern& u, std::size_t n);

/// Exact results keyed by (canonical pattern, n, kind), persisted as JSON
/// lines. Entries whose witnesses fail re-verification are dropped on load.
class SearchCache {
 public:
  explicit SearchCache(std::filesystem::path path);

  std::optional<SearchResult> find(SearchKind kind, const Pattern& u, std::size_t n) const;
  /// Appends exact results; others are ignored.
  void store(const SearchResult& result);
  std::size_t size() const { return entries_.size(); }
  std::size_t rejected_on_load() const { return rejected_; }

 private:
  std::filesystem::path path_;
  std::map<std::string, SearchResult> entries_;
  std::size_t rejected_ = 0;
};

/// Search through the cache when one is given.
SearchResult cached_search(SearchCache* cache, SearchKind kind, const Pattern& u,
                           std::size_t n, const SearchOptions& opts);

// ---------------------------------------------------------------------------
// Conjectures and tables

enum class PointStatus { Confirmed, Refuted, Skipped };
std::string to_string(PointStatus s);
PointStatus point_status_from_string(const std::string& text);

struct ConjecturePoint {
  std::size_t s = 0;
  std::size_t n = 0;
  PointStatus status = PointStatus::Skipped;
  std::optional<std::int64_t> value;
  std::optional<std::int64_t> predicted;
  std::map<std::string, bool> items;
  std::optional<Sequence> counterexample;
  std::uint64_t witnesses_checked = 0;
  std::string note;

  friend bool operator==(const ConjecturePoint&, const ConjecturePoint&) = default;
};

struct ConjectureReport {
  std::string id;
  std::vector<ConjecturePoint> points;

  std::size_t count(PointStatus s) const;
  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

/// Predicted shortest lengths for u_s-saturated / u_s-semisaturated sequences.
std::int64_t predicted_sat_alt_length(std::size_t n, std::size_t s);
std::int64_t predicted_ssat_alt_length(std::size_t n, std::size_t s);

/// Items of the saturation conjecture on one shortest witness.
std::map<std::string, bool> sat_alt_items(const Sequence& x, std::size_t s, std::size_t n);
std::map<std::string, bool> ssat_alt_items(const Sequence& x, std::size_t s, std::size_t n);

/// Exact minimal witnesses for each n, each checked against the conjecture
/// items and the structural lemmas. A structural failure on a verified
/// witness throws std::logic_error.
ConjectureReport verify_conjecture_sat_alt(std::size_t s, const std::vector<std::size_t>& ns,
                                           const SearchOptions& opts = {});
ConjectureReport verify_conjecture_ssat_alt(std::size_t s, const std::vector<std::size_t>& ns,
                                            const SearchOptions& opts = {});

struct TableRow {
  bool saturation = true;  // false: semisaturation table
  std::size_t s = 0;
  std::size_t n = 0;
  std::vector<Letter> letters;
};

const std::vector<TableRow>& saturation_table();
const std::vector<TableRow>& semisaturation_table();

/// Every row of both tables checked for its predicate and its predicted length.
ConjectureReport verify_tables();

}  // namespace dssat

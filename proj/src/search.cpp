#include "dssat/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dssat/bounds.hpp"
#include "dssat/predicates.hpp"

namespace dssat {

std::string to_string(SearchKind k) {
  switch (k) {
    case SearchKind::MinSat: return "MIN_SAT";
    case SearchKind::MinSsat: return "MIN_SSAT";
    case SearchKind::MaxFree: return "MAX_FREE";
  }
  return "?";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exact: return "EXACT";
    case SearchStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
    case SearchStatus::LevelCapReached: return "LEVEL_CAP_REACHED";
  }
  return "?";
}

SearchKind search_kind_from_string(const std::string& text) {
  for (auto k : {SearchKind::MinSat, SearchKind::MinSsat, SearchKind::MaxFree})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown search kind: " + text);
}

SearchStatus search_status_from_string(const std::string& text) {
  for (auto s : {SearchStatus::Exact, SearchStatus::BudgetExceeded, SearchStatus::LevelCapReached})
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown search status: " + text);
}

bool is_valid_witness(SearchKind kind, const Sequence& s, const Pattern& u, std::size_t n) {
  switch (kind) {
    case SearchKind::MinSat: return check_saturated(s, u, n).status == VerdictStatus::Saturated;
    case SearchKind::MinSsat:
      return check_semisaturated(s, u, n).status == VerdictStatus::Semisaturated;
    case SearchKind::MaxFree:
      return s.distinct_count() <= n && is_r_sparse(s, u.distinct()) && is_u_free(s, u);
  }
  return false;
}

namespace {

enum class Action { Descend, Skip, Stop };

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t cap) : cap_(cap) {}

  bool add(std::uint64_t k) {
    std::uint64_t total = nodes_.fetch_add(k, std::memory_order_relaxed) + k;
    if (cap_ && total > cap_) exceeded_.store(true, std::memory_order_relaxed);
    return !exceeded();
  }
  bool exceeded() const { return exceeded_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exceeded_{false};
};

// Depth-first generator of canonical r-sparse sequences on at most n letters,
// optionally restricted to u-free ones. Children are visited in increasing
// letter order, so same-length sequences come out lexicographically sorted.
class Walker {
 public:
  Walker(const Pattern& u, std::size_t n, bool prune_free, NodeBudget& budget)
      : u_(u), n_(n), r_(u.distinct()), prune_free_(prune_free), matcher_(u), budget_(budget) {}

  ~Walker() { flush(); }

  template <class Visit>
  bool walk(std::vector<Letter>& buf, std::size_t distinct, std::size_t max_depth,
            Visit& visit) {
    if (buf.size() >= max_depth) return true;
    const std::size_t top = std::min(distinct, n_ - 1);
    for (std::size_t a = 0; a <= top; ++a) {
      const auto letter = static_cast<Letter>(a);
      if (!insertion_keeps_sparse(buf, buf.size(), letter, r_)) continue;
      buf.push_back(letter);
      // A copy in a u-free prefix extended by one letter must end at it.
      if (prune_free_ && buf.size() >= u_.length() &&
          matcher_.occurs_through(buf, buf.size() - 1)) {
        buf.pop_back();
        continue;
      }
      if (!tick()) {
        buf.pop_back();
        return false;
      }
      const std::size_t d = distinct + (a == distinct ? 1 : 0);
      const Action act = visit(std::span<const Letter>(buf), d);
      bool keep_going = act != Action::Stop;
      if (act == Action::Descend) keep_going = walk(buf, d, max_depth, visit);
      buf.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  void flush() {
    if (pending_) budget_.add(pending_);
    pending_ = 0;
  }

 private:
  bool tick() {
    if (++pending_ >= 1024) {
      budget_.add(pending_);
      pending_ = 0;
    }
    return !budget_.exceeded();
  }

  const Pattern& u_;
  std::size_t n_;
  std::size_t r_;
  bool prune_free_;
  Matcher matcher_;
  NodeBudget& budget_;
  std::uint64_t pending_ = 0;
};

// Saturation / semisaturation test for a canonical r-sparse host that uses
// letters 0..distinct-1; reuses its buffers between calls.
class LeafCheck {
 public:
  LeafCheck(const Pattern& u, std::size_t n) : matcher_(u), n_(n), r_(u.distinct()) {}

  bool passes(std::span<const Letter> s, std::size_t distinct) {
    grown_.resize(s.size() + 1);
    const std::size_t letters = std::min(n_, distinct + 1);
    for (std::size_t a = 0; a < letters; ++a) {
      const auto letter = static_cast<Letter>(a);
      for (std::size_t pos = 0; pos <= s.size(); ++pos) {
        if (!insertion_keeps_sparse(s, pos, letter, r_)) continue;
        std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(pos), grown_.begin());
        grown_[pos] = letter;
        std::copy(s.begin() + static_cast<std::ptrdiff_t>(pos), s.end(),
                  grown_.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        if (!matcher_.occurs_through(grown_, pos)) return false;
      }
    }
    return true;
  }

 private:
  Matcher matcher_;
  std::size_t n_;
  std::size_t r_;
  std::vector<Letter> grown_;
};

struct Prefix {
  std::vector<Letter> letters;
  std::size_t distinct = 0;
};

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Collected sequences of one length, kept sorted and capped.
struct WitnessSet {
  std::size_t length = 0;
  std::vector<std::vector<Letter>> items;
  std::uint64_t count = 0;

  void add(std::span<const Letter> s, std::size_t cap) {
    ++count;
    if (items.size() < cap) items.emplace_back(s.begin(), s.end());
  }

  void merge(WitnessSet&& other, std::size_t cap) {
    count += other.count;
    for (auto& w : other.items) items.push_back(std::move(w));
    std::sort(items.begin(), items.end());
    if (items.size() > cap) items.resize(cap);
  }
};

class Engine {
 public:
  Engine(SearchKind kind, const Pattern& u, std::size_t n, const SearchOptions& opts)
      : kind_(kind), u_(u), n_(n), opts_(opts), budget_(opts.budget) {
    if (u.distinct() < 2) throw std::invalid_argument("search needs a pattern with r >= 2");
    if (n == 0) throw std::invalid_argument("alphabet size must be positive");
  }

  SearchResult run() {
    const auto start = std::chrono::steady_clock::now();
    SearchResult result = kind_ == SearchKind::MaxFree ? maximize() : minimize();
    result.kind = kind_;
    result.pattern = u_.word();
    result.n = n_;
    result.stats.nodes = budget_.nodes();
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

 private:
  bool prune_free() const { return kind_ != SearchKind::MinSsat; }
  std::size_t cap() const { return opts_.enumerate ? opts_.max_witnesses : 1; }

  // Splits the tree into lexicographically ordered subtrees at a shallow depth.
  // Every node generated here is passed to `seen`.
  template <class Seen>
  std::vector<Prefix> split(std::size_t max_depth, Seen&& seen) {
    std::vector<Prefix> frontier{Prefix{}};
    if (opts_.jobs <= 1) return frontier;
    const std::size_t want = 16 * static_cast<std::size_t>(opts_.jobs);
    Walker walker(u_, n_, prune_free(), budget_);
    for (std::size_t depth = 0; depth < max_depth && frontier.size() < want; ++depth) {
      std::vector<Prefix> grown;
      for (Prefix& p : frontier) {
        auto visit = [&](std::span<const Letter> s, std::size_t d) {
          seen(s, d);
          grown.push_back(Prefix{{s.begin(), s.end()}, d});
          return Action::Skip;
        };
        if (!walker.walk(p.letters, p.distinct, depth + 1, visit)) return {};
      }
      if (grown.empty()) break;
      frontier = std::move(grown);
    }
    return frontier;
  }

  // All witnesses (or the first one) among sequences of length exactly L.
  // Returns false if the budget ran out.
  bool scan_level(std::size_t level, WitnessSet& found, bool& any_node) {
    LeafCheck root_check(u_, n_);
    std::atomic<bool> reached{false};
    std::vector<Prefix> tasks = split(level, [&](std::span<const Letter> s, std::size_t) {
      if (s.size() == level) reached = true;
    });
    if (budget_.exceeded()) return false;
    if (level == 0) {
      any_node = true;
      if (root_check.passes({}, 0)) found.add({}, cap());
      return true;
    }

    std::vector<WitnessSet> per_task(tasks.size());
    std::atomic<std::size_t> best_task{tasks.size()};
    parallel_for(tasks.size(), opts_.jobs, [&](std::size_t t) {
      if (!opts_.enumerate && best_task.load() < t) return;
      LeafCheck check(u_, n_);
      WitnessSet& mine = per_task[t];
      auto record = [&](std::span<const Letter> s) {
        mine.add(s, cap());
        if (!opts_.enumerate) {
          std::size_t cur = best_task.load();
          while (t < cur && !best_task.compare_exchange_weak(cur, t)) {}
        }
      };
      Prefix& p = tasks[t];
      if (p.letters.size() == level) {
        reached = true;
        if (check.passes(p.letters, p.distinct)) record(p.letters);
        return;
      }
      Walker walker(u_, n_, prune_free(), budget_);
      auto visit = [&](std::span<const Letter> s, std::size_t d) {
        if (s.size() == level) {
          reached = true;
          if (check.passes(s, d)) {
            record(s);
            if (!opts_.enumerate) return Action::Stop;
          }
          return Action::Skip;
        }
        if (!opts_.enumerate && best_task.load() < t) return Action::Stop;
        return Action::Descend;
      };
      walker.walk(p.letters, p.distinct, level, visit);
    });
    for (auto& w : per_task) found.merge(std::move(w), cap());
    any_node = reached;
    return !budget_.exceeded() || found.count > 0;
  }

  SearchResult minimize() {
    SearchResult result;
    const BoundReport bounds =
        kind_ == SearchKind::MinSat ? sat_bounds(u_, n_) : ssat_bounds(u_, n_);
    std::size_t level = 0;
    if (opts_.seed_from_bounds && bounds.lower && *bounds.lower > 0)
      level = static_cast<std::size_t>(*bounds.lower);
    result.stats.first_level = level;
    result.hi = bounds.upper;
    const std::size_t last = opts_.max_length.value_or(static_cast<std::size_t>(-1));

    for (; level <= last; ++level) {
      result.stats.last_level = level;
      WitnessSet found;
      bool any_node = false;
      const bool complete = scan_level(level, found, any_node);
      if (found.count > 0) {
        result.status = SearchStatus::Exact;
        result.value = static_cast<std::int64_t>(level);
        result.lo = static_cast<std::int64_t>(level);
        result.hi = result.value;
        result.witness_count = found.count;
        for (auto& w : found.items) result.witnesses.emplace_back(std::move(w), n_);
        if (budget_.exceeded()) result.status = SearchStatus::BudgetExceeded;
        return result;
      }
      if (!complete) {
        result.status = SearchStatus::BudgetExceeded;
        result.lo = static_cast<std::int64_t>(level);
        return result;
      }
      if (!any_node)
        throw std::logic_error("search space exhausted before a witness was found");
    }
    result.status = SearchStatus::LevelCapReached;
    result.lo = static_cast<std::int64_t>(level);
    return result;
  }

  SearchResult maximize() {
    SearchResult result;
    const std::size_t cap_depth = opts_.max_length.value_or(static_cast<std::size_t>(-1));
    // The empty sequence is always u-free.
    WitnessSet best;
    best.add({}, cap());
    std::mutex best_mutex;
    auto offer = [&](WitnessSet& set, std::span<const Letter> s) {
      if (s.size() > set.length) {
        set = WitnessSet{};
        set.length = s.size();
      }
      if (s.size() == set.length && (opts_.enumerate || set.items.empty())) set.add(s, cap());
      else if (s.size() == set.length) ++set.count;
    };

    std::vector<Prefix> tasks =
        split(cap_depth, [&](std::span<const Letter> s, std::size_t) { offer(best, s); });
    std::vector<WitnessSet> per_task(tasks.size());
    if (!budget_.exceeded()) {
      parallel_for(tasks.size(), opts_.jobs, [&](std::size_t t) {
        Walker walker(u_, n_, true, budget_);
        WitnessSet& mine = per_task[t];
        auto visit = [&](std::span<const Letter> s, std::size_t) {
          offer(mine, s);
          return Action::Descend;
        };
        Prefix& p = tasks[t];
        walker.walk(p.letters, p.distinct, cap_depth, visit);
      });
    }
    std::size_t length = best.length;
    for (auto& w : per_task) length = std::max(length, w.length);
    WitnessSet merged;
    merged.length = length;
    if (best.length == length) merged.merge(std::move(best), cap());
    for (auto& w : per_task)
      if (w.length == length && w.count) merged.merge(std::move(w), cap());
    if (!opts_.enumerate && merged.items.size() > 1) merged.items.resize(1);

    result.lo = static_cast<std::int64_t>(length);
    result.witness_count = merged.count;
    for (auto& w : merged.items) result.witnesses.emplace_back(std::move(w), n_);
    result.stats.first_level = 0;
    result.stats.last_level = length;
    if (budget_.exceeded()) {
      result.status = SearchStatus::BudgetExceeded;
    } else if (length >= cap_depth) {
      result.status = SearchStatus::LevelCapReached;
    } else {
      result.status = SearchStatus::Exact;
      result.value = result.lo;
      result.hi = result.value;
    }
    return result;
  }

  SearchKind kind_;
  const Pattern& u_;
  std::size_t n_;
  SearchOptions opts_;
  NodeBudget budget_;
};

}  // namespace

SearchResult run_search(SearchKind kind, const Pattern& u, std::size_t n,
                        const SearchOptions& opts) {
  return Engine(kind, u, n, opts).run();
}

SearchResult min_saturated(const Pattern& u, std::size_t n, const SearchOptions& opts) {
  return run_search(SearchKind::MinSat, u, n, opts);
}

SearchResult min_semisaturated(const Pattern& u, std::size_t n, const SearchOptions& opts) {
  return run_search(SearchKind::MinSsat, u, n, opts);
}

SearchResult max_free(const Pattern& u, std::size_t n, const SearchOptions& opts) {
  return run_search(SearchKind::MaxFree, u, n, opts);
}

SearchResult enumerate_minimal(const Pattern& u, std::size_t n, SearchKind kind,
                               SearchOptions opts) {
  opts.enumerate = true;
  return run_search(kind, u, n, opts);
}

}  // namespace dssat

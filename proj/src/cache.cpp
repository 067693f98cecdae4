#include <fstream>

#include "dssat/serialize.hpp"
#include "dssat/search.hpp"
#include "dssat/text.hpp"

namespace dssat {

namespace {

std::string key_of(SearchKind kind, const std::string& pattern, std::size_t n, bool all) {
  return to_string(kind) + "|" + pattern + "|" + std::to_string(n) + (all ? "|all" : "|first");
}

bool all_witnesses(const SearchResult& r) {
  return r.witnesses.size() == r.witness_count && r.witness_count != 1;
}

bool verifies(const SearchResult& r) {
  if (!r.exact() || !r.value) return false;
  const Pattern u = parse_pattern(r.pattern);
  if (u.word() != r.pattern) return false;
  for (const Sequence& w : r.witnesses) {
    if (static_cast<std::int64_t>(w.size()) != *r.value) return false;
    if (canonical_letters(w.letters()) != w.vec()) return false;
    if (!is_valid_witness(r.kind, w, u, r.n)) return false;
  }
  return r.kind == SearchKind::MaxFree || !r.witnesses.empty();
}

}  // namespace

SearchCache::SearchCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const SearchResult r = Json::parse(line).get<SearchResult>();
      if (!verifies(r)) {
        ++rejected_;
        continue;
      }
      const bool all = all_witnesses(r);
      entries_.insert_or_assign(key_of(r.kind, r.pattern, r.n, all), r);
    } catch (const std::exception&) {
      ++rejected_;
    }
  }
}

std::optional<SearchResult> SearchCache::find(SearchKind kind, const Pattern& u,
                                              std::size_t n) const {
  for (bool all : {true, false}) {
    auto it = entries_.find(key_of(kind, u.word(), n, all));
    if (it != entries_.end()) return it->second;
  }
  return std::nullopt;
}

void SearchCache::store(const SearchResult& result) {
  if (!result.exact()) return;
  entries_.insert_or_assign(key_of(result.kind, result.pattern, result.n, all_witnesses(result)),
                            result);
  std::ofstream out(path_, std::ios::app);
  out << Json(result).dump() << '\n';
}

SearchResult cached_search(SearchCache* cache, SearchKind kind, const Pattern& u, std::size_t n,
                           const SearchOptions& opts) {
  if (cache) {
    if (auto hit = cache->find(kind, u, n)) {
      if (!opts.enumerate) {
        if (hit->witnesses.size() > 1) hit->witnesses.resize(1);
        return *hit;
      }
      if (all_witnesses(*hit) && hit->witnesses.size() <= opts.max_witnesses) return *hit;
    }
  }
  SearchResult result = run_search(kind, u, n, opts);
  if (cache) cache->store(result);
  return result;
}

}  // namespace dssat

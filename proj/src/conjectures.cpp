#include <algorithm>
#include <stdexcept>

#include "dssat/predicates.hpp"
#include "dssat/search.hpp"

namespace dssat {

std::string to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Confirmed: return "CONFIRMED";
    case PointStatus::Refuted: return "REFUTED";
    case PointStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

PointStatus point_status_from_string(const std::string& text) {
  for (auto s : {PointStatus::Confirmed, PointStatus::Refuted, PointStatus::Skipped})
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown point status: " + text);
}

std::size_t ConjectureReport::count(PointStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const auto& p) { return p.status == s; }));
}

std::int64_t predicted_sat_alt_length(std::size_t n, std::size_t s) {
  return static_cast<std::int64_t>(n * s) - static_cast<std::int64_t>(s) + 1;
}

std::int64_t predicted_ssat_alt_length(std::size_t n, std::size_t s) {
  const auto nn = static_cast<std::int64_t>(n);
  const auto ss = static_cast<std::int64_t>(s);
  return s % 2 == 0 ? nn * (ss + 2) / 2 : nn * (ss + 1) / 2 + 1;
}

namespace {

std::vector<std::size_t> occurrence_counts(const std::vector<Letter>& x, std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  for (Letter a : x) ++count[static_cast<std::size_t>(a)];
  return count;
}

}  // namespace

std::map<std::string, bool> sat_alt_items(const Sequence& x, std::size_t s, std::size_t n) {
  std::map<std::string, bool> items;
  const std::vector<Letter> c = canonical_letters(x.letters());
  items["length"] = static_cast<std::int64_t>(c.size()) == predicted_sat_alt_length(n, s);

  if (s % 2 == 1) {
    const std::size_t used = x.distinct_count();
    std::vector<std::size_t> last(used, 0);
    for (std::size_t i = 0; i < c.size(); ++i) last[static_cast<std::size_t>(c[i])] = i;
    items["first_last_order"] = std::is_sorted(last.begin(), last.end());

    const auto count = occurrence_counts(c, used);
    bool ok = used == n;
    for (std::size_t a = 0; ok && a < used; ++a) {
      const bool end = a == 0 || a + 1 == used;
      ok = count[a] == (end ? (s + 1) / 2 : s);
    }
    items["end_multiplicities"] = ok;
  }

  bool neighbors = true;
  std::vector<std::ptrdiff_t> prev(x.alphabet_size(), -1);
  for (std::size_t j = 0; j < c.size() && neighbors; ++j) {
    const auto a = static_cast<std::size_t>(c[j]);
    if (prev[a] >= 0) {
      const auto i = static_cast<std::size_t>(prev[a]);
      neighbors = c[i + 1] == c[j - 1];
    }
    prev[a] = static_cast<std::ptrdiff_t>(j);
  }
  items["gap_neighbors"] = neighbors;
  return items;
}

std::map<std::string, bool> ssat_alt_items(const Sequence& x, std::size_t s, std::size_t n) {
  std::map<std::string, bool> items;
  items["length"] = static_cast<std::int64_t>(x.size()) == predicted_ssat_alt_length(n, s);
  std::vector<std::size_t> count = occurrence_counts(x.vec(), x.alphabet_size());
  const bool all_used = std::count(count.begin(), count.end(), 0) == 0 && count.size() == n;
  if (s % 2 == 0) {
    const std::size_t each = (s + 2) / 2;
    items["occurrences"] =
        all_used && std::all_of(count.begin(), count.end(), [&](auto k) { return k == each; });
  } else {
    const std::size_t base = (s + 1) / 2;
    const auto extra = std::count(count.begin(), count.end(), base + 1);
    const auto plain = std::count(count.begin(), count.end(), base);
    items["occurrences"] = all_used && extra == 1 && plain + 1 == static_cast<std::ptrdiff_t>(n);
  }
  return items;
}

namespace {

ConjecturePoint evaluate(bool saturation, std::size_t s, std::size_t n,
                         const SearchOptions& opts) {
  ConjecturePoint point;
  point.s = s;
  point.n = n;
  point.predicted =
      saturation ? predicted_sat_alt_length(n, s) : predicted_ssat_alt_length(n, s);
  const Pattern u = Pattern::alternation(static_cast<int>(s));
  const SearchResult result =
      enumerate_minimal(u, n, saturation ? SearchKind::MinSat : SearchKind::MinSsat, opts);
  if (!result.exact()) {
    point.status = PointStatus::Skipped;
    point.note = to_string(result.status) + " after " + std::to_string(result.stats.nodes) +
                 " nodes; value >= " + std::to_string(result.lo);
    return point;
  }
  point.value = result.value;
  point.status = PointStatus::Confirmed;
  for (const Sequence& w : result.witnesses) {
    ++point.witnesses_checked;
    auto items = saturation ? sat_alt_items(w, s, n) : ssat_alt_items(w, s, n);
    if (saturation) {
      const StructuralReport structure = check_structure_alt(w, static_cast<int>(s), n);
      if (!structure.all_passed())
        throw std::logic_error("structural lemma failed on a minimal witness for s=" +
                               std::to_string(s) + ", n=" + std::to_string(n));
    }
    for (const auto& [name, ok] : items) {
      auto [it, fresh] = point.items.emplace(name, ok);
      if (!fresh) it->second = it->second && ok;
    }
    const bool all = std::all_of(items.begin(), items.end(), [](auto& kv) { return kv.second; });
    if (!all && !point.counterexample) {
      point.status = PointStatus::Refuted;
      point.counterexample = w;
    }
  }
  if (result.witness_count > result.witnesses.size())
    point.note = "items checked on " + std::to_string(result.witnesses.size()) + " of " +
                 std::to_string(result.witness_count) + " witnesses";
  return point;
}

}  // namespace

ConjectureReport verify_conjecture_sat_alt(std::size_t s, const std::vector<std::size_t>& ns,
                                           const SearchOptions& opts) {
  if (s < 1) throw std::invalid_argument("alternation order must be at least 1");
  ConjectureReport report{"sat-alt", {}};
  for (std::size_t n : ns) report.points.push_back(evaluate(true, s, n, opts));
  return report;
}

ConjectureReport verify_conjecture_ssat_alt(std::size_t s, const std::vector<std::size_t>& ns,
                                            const SearchOptions& opts) {
  if (s < 1) throw std::invalid_argument("alternation order must be at least 1");
  ConjectureReport report{"ssat-alt", {}};
  for (std::size_t n : ns) report.points.push_back(evaluate(false, s, n, opts));
  return report;
}

ConjectureReport verify_tables() {
  ConjectureReport report{"tables", {}};
  auto check = [&](const std::vector<TableRow>& rows, const char* label) {
    std::size_t index = 0;
    for (const TableRow& row : rows) {
      ConjecturePoint point;
      point.s = row.s;
      point.n = row.n;
      const Sequence x(canonical_letters(row.letters), row.n);
      const Pattern u = Pattern::alternation(static_cast<int>(row.s));
      const Verdict v = row.saturation ? check_saturated(x, u, row.n)
                                       : check_semisaturated(x, u, row.n);
      point.value = static_cast<std::int64_t>(x.size());
      point.predicted = row.saturation ? predicted_sat_alt_length(row.n, row.s)
                                       : predicted_ssat_alt_length(row.n, row.s);
      point.items["predicate"] = v.passed();
      point.items["length"] = point.value == point.predicted;
      point.witnesses_checked = 1;
      point.note = std::string(label) + " row " + std::to_string(++index);
      point.status = v.passed() && point.value == point.predicted ? PointStatus::Confirmed
                                                                  : PointStatus::Refuted;
      if (point.status == PointStatus::Refuted) point.counterexample = x;
      report.points.push_back(std::move(point));
    }
  };
  check(saturation_table(), "saturation");
  check(semisaturation_table(), "semisaturation");
  return report;
}

}  // namespace dssat

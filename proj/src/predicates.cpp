#include "dssat/predicates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dssat {

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Saturated: return "SATURATED";
    case VerdictStatus::Semisaturated: return "SEMISATURATED";
    case VerdictStatus::NotSparse: return "NOT_SPARSE";
    case VerdictStatus::NotUFree: return "NOT_U_FREE";
    case VerdictStatus::AdmissibleInsertion: return "ADMISSIBLE_INSERTION";
  }
  return "?";
}

VerdictStatus verdict_status_from_string(const std::string& text) {
  for (auto s : {VerdictStatus::Saturated, VerdictStatus::Semisaturated,
                 VerdictStatus::NotSparse, VerdictStatus::NotUFree,
                 VerdictStatus::AdmissibleInsertion})
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown verdict status: " + text);
}

bool is_u_free(std::span<const Letter> s, const Pattern& u) {
  return !contains(s, u).has_value();
}

std::optional<Insertion> first_admissible_insertion(std::span<const Letter> s,
                                                    const Pattern& u,
                                                    std::size_t n) {
  const std::size_t r = u.distinct();
  std::vector<bool> used(n, false);
  for (Letter a : s) used[a] = true;
  bool representative_done = false;
  std::vector<Letter> grown(s.size() + 1);
  Matcher matcher(u);
  for (std::size_t a = 0; a < n; ++a) {
    if (!used[a]) {
      if (representative_done) continue;
      representative_done = true;
    }
    const auto letter = static_cast<Letter>(a);
    for (std::size_t pos = 0; pos <= s.size(); ++pos) {
      if (!insertion_keeps_sparse(s, pos, letter, r)) continue;
      std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(pos), grown.begin());
      grown[pos] = letter;
      std::copy(s.begin() + static_cast<std::ptrdiff_t>(pos), s.end(),
                grown.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      if (!matcher.occurs_through(grown, pos)) return Insertion{letter, pos};
    }
  }
  return std::nullopt;
}

namespace {

void require_alphabet(const Sequence& s, std::size_t n) {
  if (n == 0) throw std::invalid_argument("alphabet size must be positive");
  for (Letter a : s)
    if (static_cast<std::size_t>(a) >= n)
      throw std::invalid_argument("sequence letter outside alphabet");
}

}  // namespace

Verdict check_saturated(const Sequence& s, const Pattern& u, std::size_t n) {
  require_alphabet(s, n);
  Verdict v;
  if (auto w = first_sparsity_violation(s.letters(), u.distinct())) {
    v.status = VerdictStatus::NotSparse;
    v.window = *w;
    return v;
  }
  if (auto e = contains(s, u)) {
    v.status = VerdictStatus::NotUFree;
    v.embedding = std::move(e);
    return v;
  }
  if (auto ins = first_admissible_insertion(s.letters(), u, n)) {
    v.status = VerdictStatus::AdmissibleInsertion;
    v.insertion = ins;
    return v;
  }
  v.status = VerdictStatus::Saturated;
  return v;
}

Verdict check_semisaturated(const Sequence& s, const Pattern& u, std::size_t n) {
  require_alphabet(s, n);
  Verdict v;
  if (auto w = first_sparsity_violation(s.letters(), u.distinct())) {
    v.status = VerdictStatus::NotSparse;
    v.window = *w;
    return v;
  }
  if (auto ins = first_admissible_insertion(s.letters(), u, n)) {
    v.status = VerdictStatus::AdmissibleInsertion;
    v.insertion = ins;
    return v;
  }
  v.status = VerdictStatus::Semisaturated;
  return v;
}

bool StructuralReport::all_passed() const {
  return valid && std::all_of(lemmas.begin(), lemmas.end(),
                              [](const auto& kv) { return kv.second.passed; });
}

namespace {

LemmaCheck fail(std::vector<std::size_t> where, std::string detail) {
  return LemmaCheck{false, std::move(where), std::move(detail)};
}

// Pairs (i, j) of consecutive occurrences of the same letter.
std::vector<std::pair<std::size_t, std::size_t>> consecutive_repeats(
    std::span<const Letter> x) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::map<Letter, std::size_t> last;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (auto it = last.find(x[j]); it != last.end()) out.emplace_back(it->second, j);
    last[x[j]] = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

LemmaCheck check_friends(std::span<const Letter> x, std::size_t s) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    std::size_t len = longest_alternation(x, x[i], x[i + 1]);
    if (len != s && len != s + 1)
      return fail({i, i + 1}, "adjacent letters alternate " + std::to_string(len) + " times");
  }
  return {};
}

LemmaCheck check_adjacent_insertion(std::span<const Letter> x, std::size_t s) {
  std::vector<Letter> grown;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    Letter a1 = x[i], a2 = x[i + 1];
    if (i + 2 < x.size() && x[i + 2] == a1) continue;
    grown.assign(x.begin(), x.end());
    grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(i) + 2, a1);
    if (longest_alternation(grown, a1, a2) < s + 2)
      return fail({i, i + 1}, "insertion after the pair does not complete u_s on it");
  }
  return {};
}

LemmaCheck check_parity(std::span<const Letter> x, std::size_t s) {
  bool same = x.front() == x.back();
  if (s % 2 == 0 && !same) return fail({0, x.size() - 1}, "even order, ends differ");
  if (s % 2 == 1 && same) return fail({0, x.size() - 1}, "odd order, ends agree");
  return {};
}

LemmaCheck check_disjoint_split(std::span<const Letter> x) {
  for (auto [i1, i2] : consecutive_repeats(x)) {
    // Gap x[i1+1 .. i2-1]; a split at k is letter-disjoint iff no letter of the
    // left part occurs again at or after k.
    std::map<Letter, std::size_t> last_in_gap;
    for (std::size_t p = i1 + 1; p < i2; ++p) last_in_gap[x[p]] = p;
    std::size_t reach = 0;
    for (std::size_t p = i1 + 1; p + 1 < i2; ++p) {
      reach = std::max(reach, last_in_gap[x[p]]);
      if (reach <= p) return fail({i1, i2, p + 1}, "gap splits into letter-disjoint halves");
    }
  }
  return {};
}

LemmaCheck check_another_occurrence(std::span<const Letter> x) {
  for (auto [i1, i2] : consecutive_repeats(x)) {
    if (i1 + 3 > i2) continue;
    if (i1 + 4 > i2) return fail({i1, i2}, "gap of exactly two letters");
    bool found = false;
    for (std::size_t p = i1 + 3; p < i2 && !found; ++p) found = x[p] == x[i1 + 1];
    if (!found) return fail({i1, i2}, "letter after the first occurrence does not recur in the gap");
  }
  return {};
}

LemmaCheck check_first_occurrence_neighbor(std::span<const Letter> x) {
  std::set<Letter> seen;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    bool first_of_a1 = !seen.count(x[i]);
    seen.insert(x[i]);
    if (!first_of_a1 || x[i + 1] == x[i]) continue;
    bool first_of_a2 = !seen.count(x[i + 1]);
    bool mirrored = i > 0 && x[i - 1] == x[i + 1];
    if (!first_of_a2 && !mirrored)
      return fail({i, i + 1}, "follower is neither new nor mirrored");
  }
  return {};
}

LemmaCheck check_gap_ends(std::span<const Letter> x) {
  for (auto [i, j] : consecutive_repeats(x))
    if (x[i + 1] != x[j - 1]) return fail({i, j}, "gap ends differ");
  return {};
}

LemmaCheck check_aba_occurrences(std::span<const Letter> x) {
  std::vector<std::size_t> count;
  for (Letter a : x) {
    if (static_cast<std::size_t>(a) >= count.size()) count.resize(a + 1, 0);
    ++count[a];
  }
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    Letter a = x[i], b = x[i + 1];
    if (x[i + 2] != a || a == b) continue;
    bool left_max = i == 0 || x[i - 1] != b;
    bool right_max = i + 3 >= x.size() || x[i + 3] != b;
    if (left_max && right_max && count[a] < 3)
      return fail({i, i + 1, i + 2}, "maximal aba run whose outer letter occurs twice");
  }
  return {};
}

}  // namespace

StructuralReport check_structure_alt(const Sequence& seq, int order,
                                     std::size_t n) {
  if (order < 1) throw std::invalid_argument("alternation order must be positive");
  StructuralReport report;
  report.verdict = check_saturated(seq, Pattern::alternation(order), n);
  report.valid = report.verdict.status == VerdictStatus::Saturated;
  if (!report.valid) return report;

  const auto s = static_cast<std::size_t>(order);
  std::span<const Letter> x = seq.letters();
  report.lemmas["friends"] = check_friends(x, s);
  report.lemmas["adjacent_insertion"] = check_adjacent_insertion(x, s);
  if (x.size() >= 2) report.lemmas["parity"] = check_parity(x, s);
  report.lemmas["disjoint_split"] = check_disjoint_split(x);
  report.lemmas["another_occurrence"] = check_another_occurrence(x);
  report.lemmas["first_occurrence_neighbor"] = check_first_occurrence_neighbor(x);
  if (s == 2) {
    LemmaCheck length;
    if (x.size() != 2 * n - 1)
      length = fail({}, "length " + std::to_string(x.size()) + " != 2n-1");
    report.lemmas["abab_length"] = length;
    report.lemmas["abab_first_last"] =
        x.front() == x.back() ? LemmaCheck{} : fail({0, x.size() - 1}, "ends differ");
    report.lemmas["abab_gap_ends"] = check_gap_ends(x);
  }
  if (s == 3 && n != 2) report.lemmas["aba_three_occurrences"] = check_aba_occurrences(x);
  return report;
}

}  // namespace dssat

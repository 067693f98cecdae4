#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into the library's matching or search code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline bool isomorphic(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> fwd, back;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, fresh_f] = fwd.emplace(a[i], b[i]);
    auto [g, fresh_g] = back.emplace(b[i], a[i]);
    if (f->second != b[i] || g->second != a[i]) return false;
  }
  return true;
}

// Calls f(indices) for every increasing index tuple of length k into [0, len).
template <class F>
bool for_each_subset(std::size_t len, std::size_t k, F&& f) {
  if (k > len) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == len - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Every embedding of u in s as a list of position tuples.
inline std::vector<std::vector<std::size_t>> embeddings(const Word& s, const Word& u) {
  std::vector<std::vector<std::size_t>> out;
  if (u.empty()) return out;
  for_each_subset(s.size(), u.size(), [&](const std::vector<std::size_t>& idx) {
    Word sub;
    for (auto i : idx) sub.push_back(s[i]);
    if (isomorphic(sub, u)) out.push_back(idx);
    return true;
  });
  return out;
}

inline bool contains(const Word& s, const Word& u) {
  bool found = false;
  for_each_subset(s.size(), u.size(), [&](const std::vector<std::size_t>& idx) {
    Word sub;
    for (auto i : idx) sub.push_back(s[i]);
    found = isomorphic(sub, u);
    return !found;
  });
  return found;
}

inline bool contains_through(const Word& s, const Word& u, std::size_t pos) {
  bool found = false;
  for_each_subset(s.size(), u.size(), [&](const std::vector<std::size_t>& idx) {
    if (!std::binary_search(idx.begin(), idx.end(), pos)) return true;
    Word sub;
    for (auto i : idx) sub.push_back(s[i]);
    found = isomorphic(sub, u);
    return !found;
  });
  return found;
}

inline bool sparse(const Word& s, std::size_t r) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::set<int> window;
    for (std::size_t j = i; j < std::min(s.size(), i + r); ++j)
      if (!window.insert(s[j]).second) return false;
  }
  return true;
}

inline std::size_t distinct(const Word& u) { return std::set<int>(u.begin(), u.end()).size(); }

// Every letter of [0, n) at every gap; no symmetry reduction.
inline bool saturated(const Word& s, const Word& u, std::size_t n, bool semi) {
  const std::size_t r = distinct(u);
  if (!sparse(s, r)) return false;
  if (!semi && contains(s, u)) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t p = 0; p <= s.size(); ++p) {
      Word t = s;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(p), static_cast<int>(a));
      if (!sparse(t, r)) continue;
      if (!contains_through(t, u, p)) return false;
    }
  }
  return true;
}

// Longest alternation by dynamic programming over all subsequences.
inline std::size_t longest_alternation(const Word& s, int a, int b) {
  std::size_t best_a = 0, best_b = 0;  // longest alternating subsequence ending in a / b
  for (int x : s) {
    if (x == a) best_a = std::max(best_a, best_b + 1);
    if (x == b) best_b = std::max(best_b, best_a + 1);
  }
  if (a == b) return s.empty() ? 0 : std::min<std::size_t>(1, std::count(s.begin(), s.end(), a));
  return std::max(best_a, best_b);
}

inline Word canonical(const Word& s) {
  std::map<int, int> m;
  Word out;
  for (int x : s) out.push_back(m.emplace(x, static_cast<int>(m.size())).first->second);
  return out;
}

// All restricted-growth words of the given length with at most n letters.
inline void canonical_words(std::size_t len, std::size_t n, std::vector<Word>& out) {
  Word w;
  auto rec = [&](auto& self, int used) -> void {
    if (w.size() == len) {
      out.push_back(w);
      return;
    }
    for (int a = 0; a <= used && a < static_cast<int>(n); ++a) {
      w.push_back(a);
      self(self, std::max(used, a + 1));
      w.pop_back();
    }
  };
  rec(rec, 0);
}

enum class Kind { Sat, Ssat, Free };

// Minimum length (Sat / Ssat) or maximum length (Free) among canonical words of
// length at most max_len, with every witness at that length.
struct Exhaustive {
  std::optional<std::size_t> value;
  std::vector<Word> witnesses;
};

inline Exhaustive exhaustive(const Word& u, std::size_t n, Kind kind, std::size_t max_len) {
  Exhaustive res;
  const std::size_t r = distinct(u);
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Word> words;
    canonical_words(len, n, words);
    std::vector<Word> hits;
    for (const Word& w : words) {
      bool ok;
      if (kind == Kind::Free) ok = sparse(w, r) && !contains(w, u);
      else ok = saturated(w, u, n, kind == Kind::Ssat);
      if (ok) hits.push_back(w);
    }
    if (kind == Kind::Free) {
      if (!hits.empty()) {
        res.value = len;
        res.witnesses = hits;
      }
    } else if (!hits.empty()) {
      res.value = len;
      res.witnesses = hits;
      return res;
    }
  }
  return res;
}

inline Word random_word(std::mt19937& rng, std::size_t len, int letters) {
  std::uniform_int_distribution<int> d(0, letters - 1);
  Word w(len);
  for (auto& x : w) x = d(rng);
  return w;
}

// Random r-sparse word over [0, letters) with letters >= r.
inline Word random_sparse_word(std::mt19937& rng, std::size_t len, std::size_t r, int letters) {
  Word w;
  std::uniform_int_distribution<int> d(0, letters - 1);
  while (w.size() < len) {
    const int a = d(rng);
    bool ok = true;
    for (std::size_t j = 1; j < r && j <= w.size(); ++j) ok = ok && w[w.size() - j] != a;
    if (ok) w.push_back(a);
  }
  return w;
}

}  // namespace oracle

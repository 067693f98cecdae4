#include "dssat/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dssat {

Sequence::Sequence(std::vector<Letter> letters, std::size_t alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0) throw std::invalid_argument("alphabet size must be positive");
  for (Letter a : letters_) {
    if (a < 0 || static_cast<std::size_t>(a) >= alphabet_size_)
      throw std::invalid_argument("letter " + std::to_string(a) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
  }
}

Sequence Sequence::over_used_letters(std::vector<Letter> letters) {
  Letter top = 0;
  for (Letter a : letters) top = std::max(top, a);
  return Sequence(std::move(letters), static_cast<std::size_t>(top) + 1);
}

std::size_t Sequence::distinct_count() const {
  std::vector<bool> seen(alphabet_size_, false);
  std::size_t count = 0;
  for (Letter a : letters_) {
    if (!seen[a]) {
      seen[a] = true;
      ++count;
    }
  }
  return count;
}

std::vector<Letter> canonical_letters(std::span<const Letter> letters) {
  std::unordered_map<Letter, Letter> rename;
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter a : letters) {
    auto [it, fresh] = rename.try_emplace(a, static_cast<Letter>(rename.size()));
    out.push_back(it->second);
  }
  return out;
}

Sequence canonicalize(const Sequence& s) {
  return Sequence(canonical_letters(s.letters()), s.alphabet_size());
}

Pattern::Pattern(std::span<const Letter> letters) {
  if (letters.empty()) throw std::invalid_argument("pattern must be nonempty");
  for (Letter a : letters)
    if (a < 0) throw std::invalid_argument("negative letter in pattern");
  letters_ = canonical_letters(letters);
  for (Letter a : letters_) {
    if (static_cast<std::size_t>(a) >= freq_.size()) freq_.resize(a + 1, 0);
    ++freq_[a];
  }
}

Pattern Pattern::alternation(int s) {
  if (s < 0) throw std::invalid_argument("alternation order must be nonnegative");
  std::vector<Letter> v(static_cast<std::size_t>(s) + 2);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Letter>(i % 2);
  return Pattern(v);
}

std::size_t Pattern::frequency(Letter a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= freq_.size()) return 0;
  return freq_[a];
}

std::size_t Pattern::min_frequency() const {
  return *std::min_element(freq_.begin(), freq_.end());
}

std::size_t Pattern::singleton_count() const {
  return static_cast<std::size_t>(std::count(freq_.begin(), freq_.end(), 1u));
}

std::string Pattern::word() const {
  std::string out;
  if (distinct() <= 26) {
    for (Letter a : letters_) out.push_back(static_cast<char>('a' + a));
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::optional<int> Pattern::alternation_order() const {
  if (distinct() != 2 || length() < 2) return std::nullopt;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] != static_cast<Letter>(i % 2)) return std::nullopt;
  return static_cast<int>(length()) - 2;
}

std::optional<std::size_t> first_sparsity_violation(std::span<const Letter> s,
                                                    std::size_t r) {
  if (r <= 1) return std::nullopt;
  // A window of r repeats a letter iff two equal letters lie fewer than r
  // apart; the earliest such right end gives the earliest window.
  std::unordered_map<Letter, std::size_t> last;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto it = last.find(s[i]);
    if (it != last.end() && i - it->second < r) return i + 1 >= r ? i + 1 - r : 0;
    last[s[i]] = i;
  }
  return std::nullopt;
}

bool is_r_sparse(std::span<const Letter> s, std::size_t r) {
  if (r <= 1) return true;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t lo = i >= r - 1 ? i - (r - 1) : 0;
    for (std::size_t j = lo; j < i; ++j)
      if (s[j] == s[i]) return false;
  }
  return true;
}

bool insertion_keeps_sparse(std::span<const Letter> s, std::size_t pos,
                            Letter a, std::size_t r) {
  if (r <= 1) return true;
  std::size_t lo = pos >= r - 1 ? pos - (r - 1) : 0;
  std::size_t hi = std::min(s.size(), pos + r - 1);
  for (std::size_t j = lo; j < hi; ++j)
    if (s[j] == a) return false;
  return true;
}

Sequence insert(const Sequence& s, std::size_t pos, Letter a) {
  if (pos > s.size()) throw std::out_of_range("insertion position out of range");
  std::vector<Letter> v = s.vec();
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), a);
  return Sequence(std::move(v), s.alphabet_size());
}

Sequence erase(const Sequence& s, std::size_t pos) {
  if (pos >= s.size()) throw std::out_of_range("erase position out of range");
  std::vector<Letter> v = s.vec();
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
  return Sequence(std::move(v), s.alphabet_size());
}

Matcher::Matcher(const Pattern& u)
    : u_(u.letters().begin(), u.letters().end()), distinct_(u.distinct()) {}

void Matcher::load(std::span<const Letter> host) {
  length_ = host.size();
  compact_.resize(length_);
  Letter top = -1;
  for (Letter a : host) top = std::max(top, a);
  if (top >= 0 && static_cast<std::size_t>(top) <= 2 * length_ + 16) {
    // Small letters index the table directly.
    k_ = static_cast<std::size_t>(top) + 1;
    original_.resize(k_);
    std::iota(original_.begin(), original_.end(), 0);
    for (std::size_t i = 0; i < length_; ++i) compact_[i] = static_cast<std::size_t>(host[i]);
  } else {
    original_.assign(host.begin(), host.end());
    std::sort(original_.begin(), original_.end());
    original_.erase(std::unique(original_.begin(), original_.end()), original_.end());
    k_ = original_.size();
    for (std::size_t i = 0; i < length_; ++i)
      compact_[i] = static_cast<std::size_t>(
          std::lower_bound(original_.begin(), original_.end(), host[i]) - original_.begin());
  }
  next_.assign((length_ + 1) * k_, length_);
  for (std::size_t i = length_; i-- > 0;) {
    std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k_), k_,
                next_.begin() + static_cast<std::ptrdiff_t>(i * k_));
    next_[i * k_ + compact_[i]] = i;
  }
  map_.assign(distinct_, kNone);
  used_.assign(k_, 0);
  positions_.assign(u_.size(), 0);
}

bool Matcher::run(std::span<const Letter> host, std::size_t forced) {
  if (u_.size() > host.size()) return false;
  load(host);
  forced_ = forced;
  return dfs(0, 0, forced_ == kNone);
}

Embedding Matcher::embedding() const {
  Embedding e;
  e.positions = positions_;
  e.letter_map.reserve(map_.size());
  for (std::size_t h : map_) e.letter_map.push_back(original_[h]);
  return e;
}

std::optional<Embedding> Matcher::find(std::span<const Letter> host) {
  if (!run(host, kNone)) return std::nullopt;
  return embedding();
}

std::optional<Embedding> Matcher::find_through(std::span<const Letter> host,
                                               std::size_t pos) {
  if (pos >= host.size()) throw std::out_of_range("position out of range");
  if (!run(host, pos)) return std::nullopt;
  return embedding();
}

bool Matcher::occurs(std::span<const Letter> host) { return run(host, kNone); }

bool Matcher::occurs_through(std::span<const Letter> host, std::size_t pos) {
  if (pos >= host.size()) throw std::out_of_range("position out of range");
  return run(host, pos);
}

bool Matcher::place(std::size_t i, std::size_t c, std::size_t h, std::size_t at,
                    bool through, bool fresh) {
  positions_[i] = at;
  if (fresh) {
    map_[c] = h;
    used_[h] = 1;
  }
  bool ok = dfs(i + 1, at + 1, through || at == forced_);
  if (ok) return true;
  if (fresh) {
    map_[c] = kNone;
    used_[h] = 0;
  }
  return false;
}

bool Matcher::extend(std::size_t i, std::size_t c, std::size_t h, std::size_t frontier,
                     bool through, bool fresh) {
  std::size_t j = frontier >= length_ ? length_ : next_[frontier * k_ + h];
  if (through) return j < length_ && place(i, c, h, j, true, fresh);
  // The forced index must stay reachable; the leftmost occurrence before it
  // dominates every other occurrence before it.
  if (j < forced_ && place(i, c, h, j, false, fresh)) return true;
  return compact_[forced_] == h && place(i, c, h, forced_, true, fresh);
}

bool Matcher::dfs(std::size_t i, std::size_t frontier, bool through) {
  if (i == u_.size()) return through;
  if (u_.size() - i > length_ - std::min(frontier, length_)) return false;
  if (!through && frontier > forced_) return false;
  const auto c = static_cast<std::size_t>(u_[i]);
  if (map_[c] != kNone) return extend(i, c, map_[c], frontier, through, false);
  for (std::size_t h = 0; h < k_; ++h)
    if (!used_[h] && extend(i, c, h, frontier, through, true)) return true;
  return false;
}

std::optional<Embedding> contains(std::span<const Letter> s, const Pattern& u) {
  return Matcher(u).find(s);
}

std::optional<Embedding> embedding_through(std::span<const Letter> s,
                                           const Pattern& u, std::size_t pos) {
  return Matcher(u).find_through(s, pos);
}

bool contains_through(std::span<const Letter> s, const Pattern& u,
                      std::size_t pos) {
  return Matcher(u).occurs_through(s, pos);
}

std::optional<Embedding> contains_naive(std::span<const Letter> s,
                                        const Pattern& u) {
  std::vector<Letter> hosts(s.begin(), s.end());
  std::sort(hosts.begin(), hosts.end());
  hosts.erase(std::unique(hosts.begin(), hosts.end()), hosts.end());
  const std::size_t r = u.distinct();
  if (hosts.size() < r || u.length() > s.size()) return std::nullopt;

  // Enumerate injective maps as r-permutations of the host letters.
  std::vector<std::size_t> pick(r);
  std::vector<bool> taken(hosts.size(), false);
  std::optional<Embedding> found;
  auto greedy = [&]() -> bool {
    Embedding e;
    for (std::size_t c = 0; c < r; ++c) e.letter_map.push_back(hosts[pick[c]]);
    std::size_t j = 0;
    for (Letter c : u.letters()) {
      while (j < s.size() && s[j] != e.letter_map[c]) ++j;
      if (j == s.size()) return false;
      e.positions.push_back(j++);
    }
    found = std::move(e);
    return true;
  };
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == r) return greedy();
    for (std::size_t h = 0; h < hosts.size(); ++h) {
      if (taken[h]) continue;
      taken[h] = true;
      pick[depth] = h;
      bool ok = self(self, depth + 1);
      taken[h] = false;
      if (ok) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

std::size_t longest_alternation(std::span<const Letter> s, Letter a, Letter b) {
  // The longest alternating subsequence is the number of maximal runs once
  // every other letter is deleted.
  std::size_t runs = 0;
  std::optional<Letter> last;
  for (Letter x : s) {
    if (x != a && x != b) continue;
    if (x != last) {
      ++runs;
      last = x;
    }
  }
  return runs;
}

bool is_valid_embedding(std::span<const Letter> s, const Pattern& u,
                        const Embedding& e) {
  if (e.positions.size() != u.length() || e.letter_map.size() != u.distinct())
    return false;
  for (std::size_t i = 0; i < e.positions.size(); ++i) {
    if (e.positions[i] >= s.size()) return false;
    if (i && e.positions[i] <= e.positions[i - 1]) return false;
    if (s[e.positions[i]] != e.letter_map[u.letters()[i]]) return false;
  }
  std::vector<Letter> image = e.letter_map;
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

}  // namespace dssat

#include "diamonds/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "diamonds/error.hpp"

namespace diamonds {

namespace {

bool is_bijection(const std::vector<int>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > static_cast<int>(values.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Extends a partial occurrence chosen[0..k) with the next index, scanning
// positions in increasing order so the first hit is lexicographically least.
bool match_from(std::span<const int> perm, std::span<const int> pattern,
                std::vector<std::size_t>& chosen, std::size_t start,
                std::size_t limit) {
  const std::size_t k = chosen.size();
  const std::size_t m = pattern.size();
  if (k == m) return true;
  for (std::size_t i = start; i + (m - k) <= limit; ++i) {
    bool ok = true;
    for (std::size_t l = 0; l < k && ok; ++l) {
      ok = (perm[chosen[l]] < perm[i]) == (pattern[l] < pattern[k]);
    }
    if (!ok) continue;
    chosen.push_back(i);
    if (match_from(perm, pattern, chosen, i + 1, limit)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_bijection(values_)) {
    std::string shown;
    for (int v : values_) shown += std::to_string(v) + " ";
    throw InvalidPermutation("not a permutation of 1..n: " + shown);
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::compact() const {
  std::string out;
  const bool digits = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i && !digits) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Pattern parse_pattern(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ParseError("bad pattern '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view tok = text.substr(pos, next - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("bad pattern '" + std::string(text) + "'");
      }
      values.push_back(value);
      pos = next + 1;
    }
  }
  if (values.empty()) throw ParseError("empty pattern");
  try {
    return Pattern(std::move(values));
  } catch (const InvalidPermutation&) {
    throw ParseError("pattern '" + std::string(text) + "' is not a permutation");
  }
}

PatternSet::PatternSet(std::initializer_list<Pattern> patterns)
    : PatternSet(std::vector<Pattern>(patterns)) {}

PatternSet::PatternSet(std::vector<Pattern> patterns)
    : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
  for (const auto& p : patterns_) {
    if (p.empty()) throw ParseError("empty pattern in set");
  }
}

PatternSet PatternSet::parse(std::string_view text) {
  if (text.empty() || text == "none" || text == "-") return {};
  std::vector<Pattern> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(':', pos);
    if (next == std::string_view::npos) next = text.size();
    out.push_back(parse_pattern(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return PatternSet(std::move(out));
}

std::vector<PatternSet> PatternSet::all_subsets_of_s3() {
  std::vector<Pattern> s3;
  std::vector<int> p{1, 2, 3};
  do {
    s3.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<PatternSet> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Pattern> chosen;
    for (unsigned b = 0; b < 6; ++b) {
      if (mask & (1u << b)) chosen.push_back(s3[b]);
    }
    out.emplace_back(std::move(chosen));
  }
  return out;
}

bool PatternSet::contains(const Pattern& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

bool PatternSet::all_length_three() const {
  return std::all_of(patterns_.begin(), patterns_.end(),
                     [](const Pattern& p) { return p.size() == 3; });
}

std::string PatternSet::to_string() const {
  if (patterns_.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += ':';
    out += patterns_[i].compact();
  }
  return out;
}

Pattern reduce(std::span<const int> sequence) {
  std::vector<int> sorted(sequence.begin(), sequence.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateEntries("reduce: sequence has repeated entries");
  }
  std::vector<int> out;
  out.reserve(sequence.size());
  for (int v : sequence) {
    out.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin() + 1));
  }
  return Pattern(std::move(out));
}

bool contains(std::span<const int> perm, const Pattern& pattern) {
  const std::size_t n = perm.size();
  const std::size_t m = pattern.size();
  if (m > n) return false;
  if (m == 3) {
    const bool lt01 = pattern[0] < pattern[1];
    const bool lt02 = pattern[0] < pattern[2];
    const bool lt12 = pattern[1] < pattern[2];
    for (std::size_t j = 1; j + 1 < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if ((perm[i] < perm[j]) != lt01) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if ((perm[i] < perm[k]) == lt02 && (perm[j] < perm[k]) == lt12) {
            return true;
          }
        }
      }
    }
    return false;
  }
  std::vector<std::size_t> chosen;
  return match_from(perm, pattern.values(), chosen, 0, n);
}

std::optional<std::vector<std::size_t>> find_occurrence(
    std::span<const int> perm, const Pattern& pattern) {
  std::vector<std::size_t> chosen;
  if (pattern.size() <= static_cast<int>(perm.size()) &&
      match_from(perm, pattern.values(), chosen, 0, perm.size())) {
    return chosen;
  }
  return std::nullopt;
}

bool occurs_ending_at_last(std::span<const int> seq, const Pattern& pattern) {
  const std::size_t n = seq.size();
  const std::size_t m = pattern.size();
  if (m > n || m == 0) return false;
  const int last = seq[n - 1];
  if (m == 1) return true;
  if (m == 3) {
    const bool lt01 = pattern[0] < pattern[1];
    const bool lt02 = pattern[0] < pattern[2];
    const bool lt12 = pattern[1] < pattern[2];
    for (std::size_t j = 1; j + 1 < n; ++j) {
      if ((seq[j] < last) != lt12) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if ((seq[i] < seq[j]) == lt01 && (seq[i] < last) == lt02) return true;
      }
    }
    return false;
  }
  // Match the first m-1 entries of the pattern among seq[0..n-1), each
  // also compared against the fixed final entry.
  std::vector<std::size_t> chosen;
  const int tail = pattern[m - 1];
  auto search = [&](auto&& self, std::size_t start) -> bool {
    const std::size_t k = chosen.size();
    if (k == m - 1) return true;
    for (std::size_t i = start; i + (m - 1 - k) <= n - 1; ++i) {
      if ((seq[i] < last) != (pattern[k] < tail)) continue;
      bool ok = true;
      for (std::size_t l = 0; l < k && ok; ++l) {
        ok = (seq[chosen[l]] < seq[i]) == (pattern[l] < pattern[k]);
      }
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

bool avoids_all(std::span<const int> perm, const PatternSet& set) {
  return std::none_of(set.patterns().begin(), set.patterns().end(),
                      [&](const Pattern& p) { return contains(perm, p); });
}

Permutation apply_symmetry(const Permutation& perm, Symmetry which) {
  const int n = perm.size();
  std::vector<int> out(perm.begin(), perm.end());
  if (which != Symmetry::complement) std::reverse(out.begin(), out.end());
  if (which != Symmetry::reverse) {
    for (int& v : out) v = n - v + 1;
  }
  return Permutation(std::move(out));
}

PatternSet apply_symmetry(const PatternSet& set, Symmetry which) {
  std::vector<Pattern> out;
  for (const auto& p : set.patterns()) out.push_back(apply_symmetry(p, which));
  return PatternSet(std::move(out));
}

int descents(std::span<const int> perm) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    if (perm[i] > perm[i + 1]) ++count;
  }
  return count;
}

int lis(std::span<const int> perm) {
  // Patience sorting: tails[k] is the least tail of an increasing run of
  // length k+1.
  std::vector<int> tails;
  for (int v : perm) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

int lds(std::span<const int> perm) {
  std::vector<int> negated;
  negated.reserve(perm.size());
  for (int v : perm) negated.push_back(-v);
  return lis(negated);
}

int rlmax(std::span<const int> perm) {
  int count = 0;
  int best = 0;
  for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
    if (*it > best) {
      best = *it;
      ++count;
    }
  }
  return count;
}

}  // namespace diamonds

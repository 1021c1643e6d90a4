#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diamonds {

// A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> values);
  // Throws InvalidPermutation unless `values` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  std::span<const int> values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  // Space separated: "1 5 6 2 7".
  std::string to_string() const;
  // Concatenated digits for n <= 9 ("231"), comma separated otherwise.
  std::string compact() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// Classical patterns are plain permutations.
using Pattern = Permutation;

// Parses "231" or "2,3,1".
Pattern parse_pattern(std::string_view text);

// A canonically sorted, duplicate-free set of patterns. Empty means no
// restriction.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Pattern> patterns);
  explicit PatternSet(std::vector<Pattern> patterns);

  // "231:321"; the empty string, "none" and "-" parse to the empty set.
  static PatternSet parse(std::string_view text);
  // Every combination of the six patterns of length 3, 64 sets in total.
  static std::vector<PatternSet> all_subsets_of_s3();

  const std::vector<Pattern>& patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  bool contains(const Pattern& p) const;
  // True when every pattern has length 3.
  bool all_length_three() const;

  // "231:321", or "none" for the empty set.
  std::string to_string() const;

  auto operator<=>(const PatternSet&) const = default;

 private:
  std::vector<Pattern> patterns_;
};

// The pattern order-isomorphic to a sequence of distinct integers.
// Throws DuplicateEntries.
Pattern reduce(std::span<const int> sequence);

bool contains(std::span<const int> perm, const Pattern& pattern);
inline bool contains(const Permutation& perm, const Pattern& pattern) {
  return contains(perm.values(), pattern);
}

// Lexicographically first index tuple (0-based) of an occurrence.
std::optional<std::vector<std::size_t>> find_occurrence(
    std::span<const int> perm, const Pattern& pattern);

// True iff some occurrence of `pattern` uses the final entry of `seq` as
// its final entry. Extending a sequence only ever adds occurrences of this
// kind, which is what prefix pruning relies on.
bool occurs_ending_at_last(std::span<const int> seq, const Pattern& pattern);

bool avoids_all(std::span<const int> perm, const PatternSet& set);
inline bool avoids_all(const Permutation& perm, const PatternSet& set) {
  return avoids_all(perm.values(), set);
}

enum class Symmetry { reverse, complement, reverse_complement };

Permutation apply_symmetry(const Permutation& perm, Symmetry which);
PatternSet apply_symmetry(const PatternSet& set, Symmetry which);

int descents(std::span<const int> perm);
// Longest increasing subsequence length.
int lis(std::span<const int> perm);
// Longest decreasing subsequence length.
int lds(std::span<const int> perm);
// Number of right-to-left maxima.
int rlmax(std::span<const int> perm);

inline int descents(const Permutation& p) { return descents(p.values()); }
inline int lis(const Permutation& p) { return lis(p.values()); }
inline int lds(const Permutation& p) { return lds(p.values()); }
inline int rlmax(const Permutation& p) { return rlmax(p.values()); }

}  // namespace diamonds

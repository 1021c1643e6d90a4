#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "diamonds/enumerator.hpp"
#include "diamonds/patterns.hpp"
#include "diamonds/polynomial.hpp"

namespace diamonds {

enum class Method { closed_form, recursion, brute_force, zero_rule, singleton_rule };

const char* to_string(Method m);

struct FamilyResult {
  BigInt count;
  std::optional<DescentPoly> poly;
  Method method = Method::closed_form;
};

// (vd)! / (v^d (v-1)^d)
BigInt total_count(int v, int d);

// C(d(v+1), d) / (vd + 1)
BigInt fuss_catalan_count(int v, int d);

// Memoized descent polynomials over partial-diamond shapes. Index (v, j, d)
// means d-1 full diamonds followed by a partial diamond of j vertices;
// j == v stands for d full diamonds.
//
// alpha: 231-avoiders, split by the position of the largest label.
// beta: {231, 321}-avoiders; same split, and everything after the largest
// label is forced to be consecutive and increasing, so each after-part
// contributes a factor of 1.
//
// Base cases at d = 1 come from brute force over a single (partial)
// diamond. Concurrent readers are fine; insertions take a unique lock.
class GfdTable {
 public:
  explicit GfdTable(SearchLimits limits = {}) : limits_(limits) {}

  DescentPoly alpha(int v, int j, int d);
  DescentPoly beta(int v, int j, int d);

  std::size_t cached_cells() const;

 private:
  enum class Kind { alpha, beta };
  using Key = std::tuple<Kind, int, int, int>;

  DescentPoly cell(Kind kind, int v, int j, int d);
  DescentPoly compute(Kind kind, int v, int j, int d);
  DescentPoly base_case(Kind kind, int v, int j);

  SearchLimits limits_;
  mutable std::shared_mutex mutex_;
  std::map<Key, DescentPoly> memo_;
};

// Shared process-wide table.
GfdTable& default_gfd_table();

DescentPoly alpha_gfd(int v, int j, int d);
DescentPoly beta_gfd(int v, int j, int d);

enum class ClosedFamily {
  f132_213,
  f132_312,
  f132_321,
  f231_312,
  f132_213_321,
  f231_312_321,
};

const char* to_string(ClosedFamily f);
PatternSet patterns_of(ClosedFamily f);

FamilyResult closed_family_gfd(ClosedFamily family, int v, int d);

// For four or more patterns of length 3: 0 if 123 is among them, else 1.
int four_plus_count(const PatternSet& set);

// Descent polynomial of D_{v,d}(132) from the corner statistic of the
// matching lattice paths.
DescentPoly fuss_catalan_gfd(int v, int d);

// Picks the strongest available method for |D_{v,d}(P)| and its descent
// polynomial, falling back to pruned brute force.
FamilyResult dispatch(int v, int d, const PatternSet& avoid,
                      const SearchLimits& limits = {});

}  // namespace diamonds

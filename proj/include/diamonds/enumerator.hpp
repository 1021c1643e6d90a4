#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "diamonds/patterns.hpp"
#include "diamonds/polynomial.hpp"
#include "diamonds/poset.hpp"

namespace diamonds {

struct SearchLimits {
  // Unpruned generation refuses shapes with more labels than this.
  int max_labels = 16;
  // Pruned generation and counting stop with BoundExceeded once more
  // avoiders than this have been found.
  std::uint64_t max_avoiders = 10'000'000;
  // Worker threads for counting; 0 picks the hardware concurrency.
  unsigned workers = 1;
};

using SystemVisitor = std::function<void(const LabelledSystem&)>;
using PermutationVisitor = std::function<void(std::span<const int>)>;

// Every labelled system of the shape, in lexicographic order of the
// associated permutation.
void generate_systems(const SystemShape& shape, const SystemVisitor& visit,
                      const SearchLimits& limits = {});

// The systems whose permutation avoids every pattern in `avoid`, in
// lexicographic order. Prefixes that already contain a pattern are cut.
void generate_avoiders(const SystemShape& shape, const PatternSet& avoid,
                       const SystemVisitor& visit, const SearchLimits& limits = {});

// Same walk as generate_avoiders, handing out raw associated permutations.
void for_each_avoider(const SystemShape& shape, const PatternSet& avoid,
                      const PermutationVisitor& visit, const SearchLimits& limits = {});

std::vector<LabelledSystem> collect_avoiders(const SystemShape& shape,
                                             const PatternSet& avoid,
                                             const SearchLimits& limits = {});

BigInt count_avoiders_brute(const SystemShape& shape, const PatternSet& avoid,
                            const SearchLimits& limits = {});

// x^k counts the avoiders with exactly k descents.
DescentPoly descent_poly_brute(const SystemShape& shape, const PatternSet& avoid,
                               const SearchLimits& limits = {});

}  // namespace diamonds

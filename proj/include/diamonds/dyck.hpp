#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diamonds/polynomial.hpp"
#include "diamonds/poset.hpp"

namespace diamonds {

// A lattice path over {E, N}, stored as its step string.
class LatticePath {
 public:
  LatticePath() = default;
  // Throws ParseError on any character other than 'E' or 'N'.
  static LatticePath parse(std::string_view steps);
  // The path whose k-th East step sits at height heights[k], closed off by
  // North steps up to v * heights.size(). Heights must be nondecreasing.
  static LatticePath from_east_heights(std::span<const int> heights, int v);

  const std::string& steps() const { return steps_; }
  int east_steps() const;
  int north_steps() const;
  std::vector<int> east_heights() const;

  // d East steps, v*d North steps, and never strictly above y = v x.
  bool is_valid(int v, int d) const;

  auto operator<=>(const LatticePath&) const = default;

 private:
  explicit LatticePath(std::string steps) : steps_(std::move(steps)) {}
  std::string steps_;
};

struct PathStats {
  int touchpoints = 0;
  int corners = 0;
  int height = 0;

  bool operator==(const PathStats&) const = default;
};

// All of Dyck_{v,d} in lexicographic order of step strings (E before N).
// Throws BoundExceeded when there are more than `max_paths` paths.
void enumerate_paths(int v, int d, const std::function<void(const LatticePath&)>& visit,
                     std::uint64_t max_paths = 10'000'000);
std::vector<LatticePath> all_paths(int v, int d, std::uint64_t max_paths = 10'000'000);

// touchpoints: path vertices on y = v x, origin included, terminus not.
// corners: maximal North runs followed by an East step.
// height: the largest v x - y over path vertices.
PathStats path_statistics(const LatticePath& path, int v, int d);

// The 132-avoiding system matched with `path`. East-step heights are
// reversed and shifted up by one; each run of equal values opens a block
// spanning that many diamonds, whose first label is the value and whose
// remaining slots take the smallest unused labels above it, in increasing
// order.
LabelledSystem phi_map(const LatticePath& path, int v, int d);

// Inverse of phi_map. Throws Not132Avoider.
LatticePath phi_inverse(const LabelledSystem& system);

// Sum over Dyck_{v,d} of x^corners(p).
DescentPoly corners_polynomial(int v, int d);

}  // namespace diamonds

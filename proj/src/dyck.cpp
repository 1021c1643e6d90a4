#include "diamonds/dyck.hpp"

#include <algorithm>
#include <array>

#include "diamonds/error.hpp"
#include "diamonds/gfd.hpp"

namespace diamonds {

LatticePath LatticePath::parse(std::string_view steps) {
  for (char c : steps) {
    if (c != 'E' && c != 'N') {
      throw ParseError("lattice paths use only E and N, got '" + std::string(steps) + "'");
    }
  }
  return LatticePath(std::string(steps));
}

LatticePath LatticePath::from_east_heights(std::span<const int> heights, int v) {
  std::string steps;
  int y = 0;
  for (int h : heights) {
    if (h < y) throw DomainError("east-step heights must be nondecreasing");
    steps.append(static_cast<std::size_t>(h - y), 'N');
    steps.push_back('E');
    y = h;
  }
  const int top = v * static_cast<int>(heights.size());
  if (top < y) throw DomainError("east-step height above the end point");
  steps.append(static_cast<std::size_t>(top - y), 'N');
  return LatticePath(std::move(steps));
}

int LatticePath::east_steps() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'E'));
}

int LatticePath::north_steps() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'N'));
}

std::vector<int> LatticePath::east_heights() const {
  std::vector<int> out;
  int y = 0;
  for (char c : steps_) {
    if (c == 'N') {
      ++y;
    } else {
      out.push_back(y);
    }
  }
  return out;
}

bool LatticePath::is_valid(int v, int d) const {
  int x = 0;
  int y = 0;
  for (char c : steps_) {
    if (c == 'E') {
      ++x;
    } else {
      ++y;
    }
    if (y > v * x) return false;
  }
  return x == d && y == v * d;
}

void enumerate_paths(int v, int d, const std::function<void(const LatticePath&)>& visit,
                     std::uint64_t max_paths) {
  if (v < 1 || d < 1) throw DomainError("Dyck paths need v >= 1 and d >= 1");
  if (fuss_catalan_count(v, d) > max_paths) {
    throw BoundExceeded("Dyck_{" + std::to_string(v) + "," + std::to_string(d) +
                        "} has more than " + std::to_string(max_paths) + " paths");
  }
  const int total_north = v * d;
  std::string steps;
  steps.reserve(static_cast<std::size_t>(d + total_north));
  auto rec = [&](auto&& self, int x, int y) -> void {
    if (x == d && y == total_north) {
      visit(LatticePath::parse(steps));
      return;
    }
    if (x < d) {
      steps.push_back('E');
      self(self, x + 1, y);
      steps.pop_back();
    }
    if (y < total_north && y + 1 <= v * x) {
      steps.push_back('N');
      self(self, x, y + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::vector<LatticePath> all_paths(int v, int d, std::uint64_t max_paths) {
  std::vector<LatticePath> out;
  enumerate_paths(v, d, [&](const LatticePath& p) { out.push_back(p); }, max_paths);
  return out;
}

PathStats path_statistics(const LatticePath& path, int v, int d) {
  PathStats stats;
  int x = 0;
  int y = 0;
  char prev = 0;
  stats.touchpoints = 1;  // the origin
  for (char c : path.steps()) {
    if (c == 'E') {
      ++x;
      if (prev == 'N') ++stats.corners;
    } else {
      ++y;
    }
    prev = c;
    stats.height = std::max(stats.height, v * x - y);
    const bool terminus = x == d && y == v * d;
    if (!terminus && y == v * x) ++stats.touchpoints;
  }
  return stats;
}

LabelledSystem phi_map(const LatticePath& path, int v, int d) {
  if (!path.is_valid(v, d)) {
    throw DomainError("'" + path.steps() + "' is not in Dyck_{" + std::to_string(v) + "," +
                      std::to_string(d) + "}");
  }
  std::vector<int> firsts = path.east_heights();
  std::reverse(firsts.begin(), firsts.end());
  for (int& f : firsts) ++f;

  const int n = v * d;
  std::vector<bool> used(n + 1, false);
  std::vector<int> perm;
  perm.reserve(n);
  for (std::size_t k = 0; k < firsts.size();) {
    std::size_t run = 1;
    while (k + run < firsts.size() && firsts[k + run] == firsts[k]) ++run;
    const int first = firsts[k];
    used[first] = true;
    perm.push_back(first);
    int need = v * static_cast<int>(run) - 1;
    for (int label = first + 1; label <= n && need > 0; ++label) {
      if (used[label]) continue;
      used[label] = true;
      perm.push_back(label);
      --need;
    }
    if (need > 0) throw DomainError("path leaves too few labels for its block");
    k += run;
  }
  return system_from_permutation(SystemShape::make(v, d), Permutation(std::move(perm)));
}

LatticePath phi_inverse(const LabelledSystem& system) {
  if (system.partial) throw ShapeUnsupported("phi_inverse needs full diamonds only");
  const Permutation perm = associated_permutation(system);
  if (contains(perm, Pattern{1, 3, 2})) throw Not132Avoider("system contains 132");

  std::vector<int> firsts;
  for (std::size_t k = 0; k < system.diamonds.size(); ++k) {
    const bool continues = k > 0 && system.diamonds[k].bottom > system.diamonds[k - 1].top;
    firsts.push_back(continues ? firsts.back() : system.diamonds[k].bottom);
  }
  std::reverse(firsts.begin(), firsts.end());
  for (int& f : firsts) --f;
  return LatticePath::from_east_heights(firsts, system.shape.v);
}

DescentPoly corners_polynomial(int v, int d) {
  if (v < 1 || d < 1) throw DomainError("Dyck paths need v >= 1 and d >= 1");
  const int top = v * d;
  // ways[x][y][last] where last is 1 after a North step.
  std::vector<std::vector<std::array<DescentPoly, 2>>> ways(
      d + 1, std::vector<std::array<DescentPoly, 2>>(top + 1));
  ways[0][0][0] = DescentPoly::one();
  const DescentPoly x = DescentPoly::monomial(1);
  for (int e = 0; e <= d; ++e) {
    for (int y = 0; y <= std::min(top, v * e); ++y) {
      if (e > 0) {
        ways[e][y][0] += ways[e - 1][y][0];
        ways[e][y][0] += ways[e - 1][y][1] * x;
      }
      if (y > 0) {
        ways[e][y][1] += ways[e][y - 1][0];
        ways[e][y][1] += ways[e][y - 1][1];
      }
    }
  }
  return ways[d][top][0] + ways[d][top][1];
}

}  // namespace diamonds

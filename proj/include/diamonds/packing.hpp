#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "diamonds/error.hpp"
#include "diamonds/poset.hpp"

namespace diamonds {

class ScheduleError : public Error {
 public:
  using Error::Error;
};

// One robot order: objects heaviest first, each with the global step
// indices of its tasks (start task first, pick task last).
struct PackedObject {
  double weight = 0;
  std::vector<int> task_times;
};

struct PackingSchedule {
  std::vector<PackedObject> objects;

  // {"objects":[{"weight":3.5,"task_times":[2,10,5,11]},...]}. Throws
  // ScheduleError on malformed input or broken invariants.
  static PackingSchedule from_json(const std::string& text);
};

// Objects become diamonds in the listed order. Every object needs the same
// number of tasks (at least 3), except that the last may be shorter, in
// which case it is a partial diamond without a pick task.
LabelledSystem schedule_system(const PackingSchedule& schedule);

struct PackingWitness {
  Pattern pattern;                   // 231 or 321
  std::array<std::size_t, 3> positions;  // 1-based reading positions
  std::array<int, 3> labels;
};

struct PackingVerdict {
  // Avoiding 231 and 321 is sufficient for never stacking two heavier
  // objects onto a lighter one; it is not necessary.
  bool safe = false;
  Permutation permutation;
  std::optional<PackingWitness> witness;
};

// The witness is the first offending triple in lexicographic index order.
PackingVerdict check_packing(const PackingSchedule& schedule);

}  // namespace diamonds

#include "diamonds/packing.hpp"

#include <json.hpp>

namespace diamonds {

PackingSchedule PackingSchedule::from_json(const std::string& text) {
  PackingSchedule schedule;
  try {
    const auto in = nlohmann::json::parse(text);
    for (const auto& item : in.at("objects")) {
      PackedObject obj;
      obj.weight = item.at("weight").get<double>();
      obj.task_times = item.at("task_times").get<std::vector<int>>();
      schedule.objects.push_back(std::move(obj));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ScheduleError(std::string("schedule JSON: ") + e.what());
  }
  if (schedule.objects.empty()) throw ScheduleError("schedule has no objects");
  for (std::size_t i = 0; i < schedule.objects.size(); ++i) {
    if (!(schedule.objects[i].weight > 0)) {
      throw ScheduleError("object " + std::to_string(i + 1) + " has a nonpositive weight");
    }
    if (i > 0 && !(schedule.objects[i].weight < schedule.objects[i - 1].weight)) {
      throw ScheduleError("objects must be listed in strictly decreasing weight");
    }
  }
  return schedule;
}

LabelledSystem schedule_system(const PackingSchedule& schedule) {
  const auto& objs = schedule.objects;
  if (objs.empty()) throw ScheduleError("schedule has no objects");
  const int v = static_cast<int>(objs.front().task_times.size());
  if (v < 3) throw ScheduleError("objects need at least 3 tasks");

  LabelledSystem system;
  system.shape.v = v;
  system.shape.full_diamonds = 0;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto& t = objs[i].task_times;
    const int size = static_cast<int>(t.size());
    const bool last = i + 1 == objs.size();
    if (size == v) {
      system.diamonds.push_back(Diamond{t.front(), {t.begin() + 1, t.end() - 1}, t.back()});
      ++system.shape.full_diamonds;
    } else if (last && size >= 1 && size < v) {
      system.partial = PartialDiamond{t.front(), {t.begin() + 1, t.end()}};
      system.shape.partial = size;
    } else {
      throw ScheduleError("object " + std::to_string(i + 1) + " has " + std::to_string(size) +
                          " tasks, expected " + std::to_string(v));
    }
  }
  if (auto bad = validate_system(system)) {
    throw ScheduleError(std::string("task times: ") + bad->message);
  }
  return system;
}

PackingVerdict check_packing(const PackingSchedule& schedule) {
  PackingVerdict verdict;
  verdict.permutation = associated_permutation(schedule_system(schedule));
  const auto p = verdict.permutation.values();
  const Pattern p231{2, 3, 1};
  const Pattern p321{3, 2, 1};
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n && !verdict.witness; ++i) {
    for (std::size_t j = i + 1; j < n && !verdict.witness; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // Both patterns end on the smallest of the three.
        if (!(p[k] < p[i] && p[k] < p[j])) continue;
        const Pattern& hit = p[i] < p[j] ? p231 : p321;
        verdict.witness = PackingWitness{hit, {i + 1, j + 1, k + 1}, {p[i], p[j], p[k]}};
        break;
      }
    }
  }
  verdict.safe = !verdict.witness.has_value();
  return verdict;
}

}  // namespace diamonds

#include "diamonds/poset.hpp"

#include <algorithm>

#include "diamonds/error.hpp"

namespace diamonds {

SystemShape SystemShape::make(int v, int full_diamonds,
                              std::optional<int> partial) {
  SystemShape s;
  s.v = v;
  s.full_diamonds = full_diamonds;
  s.partial = partial;
  s.validate();
  return s;
}

void SystemShape::validate() const {
  if (v < 3) throw InvalidShape("v must be at least 3");
  if (full_diamonds < 0) throw InvalidShape("d must be nonnegative");
  if (partial && (*partial < 1 || *partial > v - 1)) {
    throw InvalidShape("partial diamond size must lie in 1..v-1");
  }
  if (label_count() < 1) throw InvalidShape("shape has no vertices");
}

std::string SystemShape::to_string() const {
  std::string out = "v=" + std::to_string(v) + " d=" + std::to_string(full_diamonds);
  if (partial) out += " j=" + std::to_string(*partial);
  return out;
}

namespace {

std::vector<int> reading(const LabelledSystem& system) {
  std::vector<int> out;
  out.reserve(system.shape.label_count());
  for (const auto& d : system.diamonds) {
    out.push_back(d.bottom);
    out.insert(out.end(), d.middles.begin(), d.middles.end());
    out.push_back(d.top);
  }
  if (system.partial) {
    out.push_back(system.partial->bottom);
    out.insert(out.end(), system.partial->middles.begin(),
               system.partial->middles.end());
  }
  return out;
}

}  // namespace

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::shape_mismatch: return "shape-mismatch";
    case Violation::Kind::label_out_of_range: return "label-out-of-range";
    case Violation::Kind::duplicate_label: return "duplicate-label";
    case Violation::Kind::bottom_not_min: return "bottom-not-min";
    case Violation::Kind::top_not_max: return "top-not-max";
  }
  return "unknown";
}

std::optional<Violation> validate_system(const LabelledSystem& system) {
  const SystemShape& shape = system.shape;
  auto fail = [](Violation::Kind k, std::string msg) {
    return std::optional<Violation>(Violation{k, std::move(msg)});
  };
  try {
    shape.validate();
  } catch (const InvalidShape& e) {
    return fail(Violation::Kind::shape_mismatch, e.what());
  }
  if (static_cast<int>(system.diamonds.size()) != shape.full_diamonds) {
    return fail(Violation::Kind::shape_mismatch, "wrong number of diamonds");
  }
  for (const auto& d : system.diamonds) {
    if (static_cast<int>(d.middles.size()) != shape.v - 2) {
      return fail(Violation::Kind::shape_mismatch, "diamond has wrong number of middles");
    }
  }
  if (system.partial.has_value() != shape.partial.has_value()) {
    return fail(Violation::Kind::shape_mismatch, "partial diamond presence disagrees with shape");
  }
  if (system.partial &&
      static_cast<int>(system.partial->middles.size()) != *shape.partial - 1) {
    return fail(Violation::Kind::shape_mismatch, "partial diamond has wrong size");
  }

  const int n = shape.label_count();
  std::vector<bool> seen(n + 1, false);
  for (int label : reading(system)) {
    if (label < 1 || label > n) {
      return fail(Violation::Kind::label_out_of_range,
                  "label " + std::to_string(label) + " outside 1.." + std::to_string(n));
    }
    if (seen[label]) {
      return fail(Violation::Kind::duplicate_label,
                  "label " + std::to_string(label) + " used twice");
    }
    seen[label] = true;
  }

  for (std::size_t i = 0; i < system.diamonds.size(); ++i) {
    const Diamond& d = system.diamonds[i];
    const std::string where = "diamond " + std::to_string(i + 1);
    for (int m : d.middles) {
      if (m < d.bottom) {
        return fail(Violation::Kind::bottom_not_min, where + ": bottom is not the minimum");
      }
    }
    if (d.top < d.bottom) {
      return fail(Violation::Kind::bottom_not_min, where + ": bottom is not the minimum");
    }
    for (int m : d.middles) {
      if (m > d.top) {
        return fail(Violation::Kind::top_not_max, where + ": top is not the maximum");
      }
    }
  }
  if (system.partial) {
    for (int m : system.partial->middles) {
      if (m < system.partial->bottom) {
        return fail(Violation::Kind::bottom_not_min,
                    "partial diamond: bottom is not the minimum");
      }
    }
  }
  return std::nullopt;
}

Permutation associated_permutation(const LabelledSystem& system) {
  return Permutation(reading(system));
}

LabelledSystem system_from_permutation(const SystemShape& shape,
                                       const Permutation& perm) {
  shape.validate();
  if (perm.size() != shape.label_count()) {
    throw LengthMismatch("permutation has length " + std::to_string(perm.size()) +
                         ", shape needs " + std::to_string(shape.label_count()));
  }
  LabelledSystem system;
  system.shape = shape;
  auto it = perm.begin();
  for (int i = 0; i < shape.full_diamonds; ++i) {
    Diamond d;
    d.bottom = *it++;
    d.middles.assign(it, it + (shape.v - 2));
    it += shape.v - 2;
    d.top = *it++;
    system.diamonds.push_back(std::move(d));
  }
  if (shape.partial) {
    PartialDiamond p;
    p.bottom = *it++;
    p.middles.assign(it, it + (*shape.partial - 1));
    system.partial = std::move(p);
  }
  if (auto bad = validate_system(system)) throw PosetViolation(bad->message);
  return system;
}

LabelledSystem reverse_complement_system(const LabelledSystem& system) {
  if (system.shape.partial) {
    throw ShapeUnsupported("reverse-complement needs a shape without a partial diamond");
  }
  const int n = system.shape.label_count();
  auto flip = [n](int label) { return n - label + 1; };
  LabelledSystem out;
  out.shape = system.shape;
  for (auto it = system.diamonds.rbegin(); it != system.diamonds.rend(); ++it) {
    Diamond d;
    d.bottom = flip(it->top);
    for (auto m = it->middles.rbegin(); m != it->middles.rend(); ++m) {
      d.middles.push_back(flip(*m));
    }
    d.top = flip(it->bottom);
    out.diamonds.push_back(std::move(d));
  }
  return out;
}

}  // namespace diamonds

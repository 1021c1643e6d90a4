#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diamonds/patterns.hpp"

namespace diamonds {

// A run of `full_diamonds` diamonds with `v` vertices each, optionally
// followed by a partial diamond of `partial` vertices (a bottom plus
// partial-1 middles, no top).
struct SystemShape {
  int v = 4;
  int full_diamonds = 1;
  std::optional<int> partial;

  // Validated constructor; throws InvalidShape.
  static SystemShape make(int v, int full_diamonds,
                          std::optional<int> partial = std::nullopt);

  int label_count() const {
    return v * full_diamonds + partial.value_or(0);
  }
  int diamond_count() const { return full_diamonds + (partial ? 1 : 0); }
  void validate() const;
  std::string to_string() const;

  bool operator==(const SystemShape&) const = default;
};

struct Diamond {
  int bottom = 0;
  std::vector<int> middles;
  int top = 0;

  bool operator==(const Diamond&) const = default;
};

struct PartialDiamond {
  int bottom = 0;
  std::vector<int> middles;

  bool operator==(const PartialDiamond&) const = default;
};

// A labelling of a diamond sequence. Middles keep their left-to-right
// reading order, which is part of the object's identity.
struct LabelledSystem {
  SystemShape shape;
  std::vector<Diamond> diamonds;
  std::optional<PartialDiamond> partial;

  bool operator==(const LabelledSystem&) const = default;
};

struct Violation {
  enum class Kind {
    shape_mismatch,
    label_out_of_range,
    duplicate_label,
    bottom_not_min,
    top_not_max,
  };
  Kind kind;
  std::string message;
};

const char* to_string(Violation::Kind kind);

// The first violated invariant in reading order, or nullopt when valid.
std::optional<Violation> validate_system(const LabelledSystem& system);

// Reads every diamond bottom, middles left to right, top; the partial
// diamond last.
Permutation associated_permutation(const LabelledSystem& system);

// Inverse of associated_permutation. Throws LengthMismatch or
// PosetViolation.
LabelledSystem system_from_permutation(const SystemShape& shape,
                                       const Permutation& perm);

// Reverses diamond order and flips each diamond. Throws ShapeUnsupported
// for shapes with a partial diamond.
LabelledSystem reverse_complement_system(const LabelledSystem& system);

}  // namespace diamonds

#pragma once

#include <string>

#include "diamonds/poset.hpp"

namespace diamonds {

// {"v":5,"diamonds":[{"bottom":1,"middles":[5,6,2],"top":7},...],
//  "partial":{"bottom":..,"middles":[..]}} with keys in exactly this order;
// "partial" is omitted when absent. One line, no whitespace.
std::string system_to_json(const LabelledSystem& system);

// Parses the same schema and validates the result. Throws ParseError on
// malformed JSON and PosetViolation when the labels break the poset.
LabelledSystem system_from_json(const std::string& text);

}  // namespace diamonds

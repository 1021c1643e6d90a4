#include "diamonds/system_json.hpp"

#include <json.hpp>

#include "diamonds/error.hpp"

namespace diamonds {

using ordered_json = nlohmann::ordered_json;

std::string system_to_json(const LabelledSystem& system) {
  ordered_json out;
  out["v"] = system.shape.v;
  out["diamonds"] = ordered_json::array();
  for (const auto& d : system.diamonds) {
    ordered_json item;
    item["bottom"] = d.bottom;
    item["middles"] = d.middles;
    item["top"] = d.top;
    out["diamonds"].push_back(std::move(item));
  }
  if (system.partial) {
    ordered_json p;
    p["bottom"] = system.partial->bottom;
    p["middles"] = system.partial->middles;
    out["partial"] = std::move(p);
  }
  return out.dump();
}

LabelledSystem system_from_json(const std::string& text) {
  LabelledSystem system;
  try {
    const auto in = nlohmann::json::parse(text);
    const int v = in.at("v").get<int>();
    for (const auto& item : in.at("diamonds")) {
      system.diamonds.push_back(Diamond{item.at("bottom").get<int>(),
                                        item.at("middles").get<std::vector<int>>(),
                                        item.at("top").get<int>()});
    }
    std::optional<int> partial_size;
    if (in.contains("partial") && !in["partial"].is_null()) {
      const auto& p = in["partial"];
      system.partial = PartialDiamond{p.at("bottom").get<int>(),
                                      p.at("middles").get<std::vector<int>>()};
      partial_size = static_cast<int>(system.partial->middles.size()) + 1;
    }
    system.shape.v = v;
    system.shape.full_diamonds = static_cast<int>(system.diamonds.size());
    system.shape.partial = partial_size;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("system JSON: ") + e.what());
  }
  if (auto bad = validate_system(system)) throw PosetViolation(bad->message);
  return system;
}

}  // namespace diamonds

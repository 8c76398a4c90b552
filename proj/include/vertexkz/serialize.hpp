#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vertexkz/model.hpp"
#include "vertexkz/multipoly.hpp"
#include "vertexkz/rat.hpp"

namespace vertexkz {

using Json = nlohmann::json;

// Rationals are always strings ("p/q" or "p"), never JSON numbers.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const SpectralPoint& point);

/// {"variables": [...], "degree_bounds": [...],
///  "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}
/// Terms appear in lexicographic exponent order.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

/// Comma-separated rationals, e.g. "0,1/2,-3".
std::vector<Rat> parse_rat_list(const std::string& text);

/// Values read from a config file {"L": int, "eta": "p/q", "mu": [...],
/// "seed": int}; every field optional.
struct ConfigFile {
  std::optional<int> L;
  std::optional<Rat> eta;
  std::optional<std::vector<Rat>> mu;
  std::optional<std::uint64_t> seed;
};
ConfigFile config_from_json(const Json& j);
ConfigFile load_config(const std::string& path);

}  // namespace vertexkz

#include "vertexkz/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vertexkz {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json to_json(const SpectralPoint& point) {
  Json out = Json::object();
  Json lambda = Json::array();
  for (const Rat& x : point.lambda) lambda.push_back(to_json(x));
  out["lambda"] = std::move(lambda);
  if (point.lambda0) out["lambda0"] = to_json(*point.lambda0);
  return out;
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    terms.push_back({{"exponents", exps}, {"coeff", to_json(coeff)}});
  }
  return {{"variables", p.variables()}, {"degree_bounds", p.degree_bounds()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const Json& j) {
  MultiPoly p(j.at("variables").get<std::vector<std::string>>(),
              j.at("degree_bounds").get<std::vector<int>>());
  for (const auto& term : j.at("terms")) {
    p.add_term(term.at("exponents").get<std::vector<int>>(), rat_from_json(term.at("coeff")));
  }
  return p;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty entry in list: " + text);
    out.push_back(Rat::parse(item.substr(first, last - first + 1)));
  }
  return out;
}

ConfigFile config_from_json(const Json& j) {
  ConfigFile cfg;
  if (j.contains("L")) cfg.L = j.at("L").get<int>();
  if (j.contains("eta")) cfg.eta = rat_from_json(j.at("eta"));
  if (j.contains("mu")) {
    std::vector<Rat> mu;
    for (const auto& x : j.at("mu")) mu.push_back(rat_from_json(x));
    cfg.mu = std::move(mu);
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return config_from_json(Json::parse(in));
}

}  // namespace vertexkz

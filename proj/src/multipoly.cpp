#include "vertexkz/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace vertexkz {

MultiPoly::MultiPoly(std::vector<std::string> variables, std::vector<int> degree_bounds)
    : variables_(std::move(variables)), degree_bounds_(std::move(degree_bounds)) {
  if (variables_.size() != degree_bounds_.size()) {
    throw std::invalid_argument("MultiPoly: one degree bound per variable required");
  }
  for (int bound : degree_bounds_) {
    if (bound < 0) throw std::invalid_argument("MultiPoly: negative degree bound");
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, std::vector<int> degree_bounds,
                              const Rat& value) {
  MultiPoly p(std::move(variables), std::move(degree_bounds));
  p.add_term(Exponents(p.num_variables(), 0), value);
  return p;
}

void MultiPoly::add_term(const Exponents& exponents, const Rat& coeff) {
  if (exponents.size() != variables_.size()) {
    throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  }
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] < 0 || exponents[v] > degree_bounds_[v]) {
      throw std::invalid_argument("MultiPoly: exponent exceeds declared bound for " + variables_[v]);
    }
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t MultiPoly::variable_index(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) {
    throw std::invalid_argument("unknown variable: " + std::string(name));
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

Rat MultiPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree_in(std::size_t var) const {
  int degree = -1;
  for (const auto& [exps, coeff] : terms_) degree = std::max(degree, exps.at(var));
  return degree;
}

Rat MultiPoly::evaluate(std::span<const Rat> values) const {
  if (values.size() != variables_.size()) {
    throw std::invalid_argument("MultiPoly::evaluate: expected " +
                                std::to_string(variables_.size()) + " values");
  }
  // powers[v][e] = values[v]^e
  std::vector<std::vector<Rat>> powers(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    powers[v].resize(static_cast<std::size_t>(degree_bounds_[v]) + 1, Rat(1));
    for (std::size_t e = 1; e < powers[v].size(); ++e) powers[v][e] = powers[v][e - 1] * values[v];
  }
  Rat sum;
  for (const auto& [exps, coeff] : terms_) {
    Rat term = coeff;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] != 0) term *= powers[v][static_cast<std::size_t>(exps[v])];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::differentiate(std::size_t var) const {
  if (var >= variables_.size()) throw std::invalid_argument("differentiate: unknown variable");
  auto bounds = degree_bounds_;
  bounds[var] = std::max(0, bounds[var] - 1);
  MultiPoly out(variables_, bounds);
  for (const auto& [exps, coeff] : terms_) {
    if (exps[var] == 0) continue;
    Exponents lowered = exps;
    lowered[var] -= 1;
    out.add_term(lowered, coeff * Rat(exps[var]));
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rat& factor) const {
  MultiPoly out(variables_, degree_bounds_);
  if (factor.is_zero()) return out;
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, coeff * factor);
  return out;
}

namespace {

MultiPoly combine(const MultiPoly& a, const MultiPoly& b, const Rat& sign) {
  if (a.variables() != b.variables()) {
    throw std::invalid_argument("MultiPoly: variable lists differ");
  }
  std::vector<int> bounds(a.degree_bounds().size());
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    bounds[v] = std::max(a.degree_bounds()[v], b.degree_bounds()[v]);
  }
  MultiPoly out(a.variables(), bounds);
  for (const auto& [exps, coeff] : a.terms()) out.add_term(exps, coeff);
  for (const auto& [exps, coeff] : b.terms()) out.add_term(exps, sign * coeff);
  return out;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, Rat(1)); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, Rat(-1)); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

MultiPoly differentiate(const MultiPoly& p, std::string_view variable) {
  return p.differentiate(p.variable_index(variable));
}

std::vector<std::string> lambda_variables(int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) names.push_back("lambda" + std::to_string(k));
  return names;
}

}  // namespace vertexkz

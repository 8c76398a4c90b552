#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vertexkz/rat.hpp"

namespace vertexkz {

/// Sparse multivariate polynomial over Rat with per-variable degree bounds.
///
/// Terms are keyed by exponent multi-indices in declared variable order.
/// Zero coefficients are never stored and every exponent stays within its
/// declared bound; add_term rejects exponents that exceed it.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  MultiPoly(std::vector<std::string> variables, std::vector<int> degree_bounds);

  static MultiPoly constant(std::vector<std::string> variables, std::vector<int> degree_bounds,
                            const Rat& value);

  /// Adds `coeff` to the coefficient of the given monomial.
  void add_term(const Exponents& exponents, const Rat& coeff);

  [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
  [[nodiscard]] const std::vector<int>& degree_bounds() const { return degree_bounds_; }
  [[nodiscard]] const std::map<Exponents, Rat>& terms() const { return terms_; }
  [[nodiscard]] std::size_t num_variables() const { return variables_.size(); }

  /// Throws std::invalid_argument for names not in variables().
  [[nodiscard]] std::size_t variable_index(std::string_view name) const;

  [[nodiscard]] Rat coefficient(const Exponents& exponents) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Largest exponent of `var` among stored terms; -1 for the zero polynomial.
  [[nodiscard]] int degree_in(std::size_t var) const;

  [[nodiscard]] Rat evaluate(std::span<const Rat> values) const;

  /// Exact formal partial derivative; the bound of `var` drops by one.
  [[nodiscard]] MultiPoly differentiate(std::size_t var) const;

  [[nodiscard]] MultiPoly scaled(const Rat& factor) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);

  /// Same variables, same terms. Degree bounds are a ceiling, not part of
  /// the polynomial's value, and are not compared.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<std::string> variables_;
  std::vector<int> degree_bounds_;
  std::map<Exponents, Rat> terms_;
};

/// MultiPoly::differentiate by variable name.
MultiPoly differentiate(const MultiPoly& p, std::string_view variable);

/// Names lambda1..lambdaL used for every partition-function polynomial.
std::vector<std::string> lambda_variables(int count);

}  // namespace vertexkz

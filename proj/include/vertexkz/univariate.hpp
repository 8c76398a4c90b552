#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vertexkz/rat.hpp"

namespace vertexkz {

/// Dense univariate polynomial over Rat, coefficients from constant term up.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coefficients);

  [[nodiscard]] const std::vector<Rat>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Rat coefficient(int power) const;
  [[nodiscard]] Rat leading() const;
  [[nodiscard]] Rat evaluate(const Rat& x) const;
  [[nodiscard]] UniPoly derivative() const;
  [[nodiscard]] UniPoly monic() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Unique polynomial of degree < nodes.size() through the samples, computed
/// with Newton divided differences and expanded to the monomial basis.
/// Throws DegenerateGrid on repeated nodes.
UniPoly interpolate_dense(std::span<const Rat> nodes, std::span<const Rat> values);

/// Quotient and remainder of exact polynomial division; throws on b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd by the Euclidean algorithm (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace vertexkz

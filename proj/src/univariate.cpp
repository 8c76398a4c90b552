#include "vertexkz/univariate.hpp"

#include <stdexcept>

#include "vertexkz/errors.hpp"

namespace vertexkz {

UniPoly::UniPoly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat UniPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rat UniPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat UniPoly::evaluate(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rat> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * Rat(static_cast<long>(k)));
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Rat inv = leading().inverse();
  std::vector<Rat> out = coeffs_;
  for (auto& c : out) c *= inv;
  return UniPoly(std::move(out));
}

UniPoly interpolate_dense(std::span<const Rat> nodes, std::span<const Rat> values) {
  if (nodes.size() != values.size()) {
    throw std::invalid_argument("interpolate: node/value count mismatch");
  }
  const std::size_t n = nodes.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (nodes[a] == nodes[b]) throw DegenerateGrid();
    }
  }
  // Divided differences in place: dd[k] ends as f[x_0..x_k].
  std::vector<Rat> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (nodes[k] - nodes[k - level]);
    }
  }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<Rat> poly;
  for (std::size_t k = n; k-- > 0;) {
    // poly <- poly * (x - nodes[k]) + dd[k]
    std::vector<Rat> next(poly.size() + 1);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] += poly[e];
      next[e] -= poly[e] * nodes[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return UniPoly(std::move(poly));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rat> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat lead_inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Rat factor = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor.is_zero()) continue;
    for (int e = 0; e <= db; ++e) {
      rem[static_cast<std::size_t>(k - db + e)] -= factor * b.coefficient(e);
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace vertexkz

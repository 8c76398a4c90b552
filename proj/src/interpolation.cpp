#include "vertexkz/interpolation.hpp"

#include "vertexkz/parallel.hpp"
#include "vertexkz/univariate.hpp"

namespace vertexkz {

namespace {

std::string describe(const std::vector<Rat>& point) {
  std::string out = "(";
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (k) out += ", ";
    out += point[k].str();
  }
  return out + ")";
}

}  // namespace

GridEvaluationError::GridEvaluationError(std::vector<Rat> point, const std::string& cause)
    : Error("evaluation failed at grid point " + describe(point) + ": " + cause),
      point_(std::move(point)) {}

MultiPoly interpolate_univariate(std::span<const Sample> samples, int degree_bound,
                                 const std::string& variable) {
  if (degree_bound < 0 || samples.size() != static_cast<std::size_t>(degree_bound) + 1) {
    throw std::invalid_argument("interpolate_univariate: need degree_bound + 1 samples");
  }
  std::vector<Rat> nodes, values;
  for (const auto& [x, y] : samples) {
    nodes.push_back(x);
    values.push_back(y);
  }
  const UniPoly dense = interpolate_dense(nodes, values);
  MultiPoly out({variable}, {degree_bound});
  for (int e = 0; e <= dense.degree(); ++e) out.add_term({e}, dense.coefficient(e));
  return out;
}

MultiPoly interpolate_multivariate(const GridEvaluator& evaluator,
                                   const std::vector<std::string>& variables,
                                   const std::vector<int>& degree_bounds,
                                   const std::vector<std::vector<Rat>>& grid) {
  const std::size_t dims = variables.size();
  if (degree_bounds.size() != dims || grid.size() != dims) {
    throw std::invalid_argument("interpolate_multivariate: arity mismatch");
  }
  std::vector<std::size_t> extent(dims);
  std::size_t total = 1;
  for (std::size_t v = 0; v < dims; ++v) {
    if (degree_bounds[v] < 0 || grid[v].size() != static_cast<std::size_t>(degree_bounds[v]) + 1) {
      throw std::invalid_argument("interpolate_multivariate: need bound + 1 nodes for " +
                                  variables[v]);
    }
    for (std::size_t a = 0; a < grid[v].size(); ++a) {
      for (std::size_t b = a + 1; b < grid[v].size(); ++b) {
        if (grid[v][a] == grid[v][b]) throw DegenerateGrid();
      }
    }
    extent[v] = grid[v].size();
    total *= extent[v];
  }

  // Row-major tensor, last variable fastest.
  std::vector<std::size_t> stride(dims, 1);
  for (std::size_t v = dims; v-- > 1;) stride[v - 1] = stride[v] * extent[v];
  auto point_at = [&](std::size_t flat) {
    std::vector<Rat> point(dims);
    for (std::size_t v = 0; v < dims; ++v) point[v] = grid[v][(flat / stride[v]) % extent[v]];
    return point;
  };

  std::vector<Rat> tensor(total);
  parallel_for(total, [&](std::size_t flat) {
    auto point = point_at(flat);
    try {
      tensor[flat] = evaluator(point);
    } catch (const std::exception& e) {
      throw GridEvaluationError(std::move(point), e.what());
    }
  });

  // Convert values to monomial coefficients one axis at a time.
  for (std::size_t v = 0; v < dims; ++v) {
    std::vector<Rat> fiber(extent[v]);
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride[v]) % extent[v] != 0) continue;
      for (std::size_t k = 0; k < extent[v]; ++k) fiber[k] = tensor[base + k * stride[v]];
      const UniPoly coeffs = interpolate_dense(grid[v], fiber);
      for (std::size_t k = 0; k < extent[v]; ++k) {
        tensor[base + k * stride[v]] = coeffs.coefficient(static_cast<int>(k));
      }
    }
  }

  MultiPoly out(variables, degree_bounds);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (tensor[flat].is_zero()) continue;
    MultiPoly::Exponents exps(dims);
    for (std::size_t v = 0; v < dims; ++v) {
      exps[v] = static_cast<int>((flat / stride[v]) % extent[v]);
    }
    out.add_term(exps, tensor[flat]);
  }
  return out;
}

}  // namespace vertexkz

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vertexkz/errors.hpp"
#include "vertexkz/multipoly.hpp"
#include "vertexkz/rat.hpp"

namespace vertexkz {

using Sample = std::pair<Rat, Rat>;  // (node, value)

/// Point evaluator over the polynomial's variables, in declared order.
using GridEvaluator = std::function<Rat(std::span<const Rat>)>;

/// The evaluator threw at a grid point; carries that point.
class GridEvaluationError : public Error {
 public:
  GridEvaluationError(std::vector<Rat> point, const std::string& cause);
  [[nodiscard]] const std::vector<Rat>& point() const { return point_; }

 private:
  std::vector<Rat> point_;
};

/// Unique polynomial of degree <= degree_bound through the samples.
/// Requires exactly degree_bound + 1 samples with distinct nodes.
MultiPoly interpolate_univariate(std::span<const Sample> samples, int degree_bound,
                                 const std::string& variable = "x");

/// Reconstructs the polynomial within `degree_bounds` that agrees with the
/// evaluator on the tensor grid. grid[v] must hold degree_bounds[v] + 1
/// distinct nodes. Grid points are evaluated in parallel; the result does not
/// depend on the schedule.
MultiPoly interpolate_multivariate(const GridEvaluator& evaluator,
                                   const std::vector<std::string>& variables,
                                   const std::vector<int>& degree_bounds,
                                   const std::vector<std::vector<Rat>>& grid);

}  // namespace vertexkz

#include "vertexkz/oracle.hpp"

#include <array>
#include <stdexcept>

#include "vertexkz/errors.hpp"
#include "vertexkz/functional.hpp"
#include "vertexkz/interpolation.hpp"

namespace vertexkz {

std::string_view to_string(BoundaryOrientation orientation) {
  return orientation == BoundaryOrientation::DwStandard ? "dw-standard" : "dw-reversed";
}

BoundaryOrientation parse_orientation(std::string_view text) {
  if (text == "dw-standard") return BoundaryOrientation::DwStandard;
  if (text == "dw-reversed") return BoundaryOrientation::DwReversed;
  throw std::invalid_argument("unknown orientation: " + std::string(text));
}

VertexClass VertexState::classify() const {
  if (west != east) return VertexClass::C;
  return west == south ? VertexClass::A : VertexClass::B;
}

namespace {

struct Boundary {
  bool top_up;     // arrows on the top external edges
  bool bottom_up;  // arrows on the bottom external edges
  bool left_right;
  bool right_right;
};

Boundary boundary_of(BoundaryOrientation orientation) {
  if (orientation == BoundaryOrientation::DwStandard) return {false, true, false, true};
  return {true, false, true, false};
}

/// Sweeps the lattice vertex by vertex. The state is the row of vertical
/// edges (bit j set = arrow up; columns left of the cursor already hold the
/// edges below the current row) plus the horizontal edge entering the cursor.
/// weight(i, j, cls) supplies the weight of vertex (i, j).
template <typename Weight>
Rat sweep(int L, BoundaryOrientation orientation, const Weight& weight) {
  const Boundary bc = boundary_of(orientation);
  const std::size_t masks = std::size_t{1} << L;
  const std::size_t all_up = masks - 1;

  std::vector<Rat> rows(masks);
  rows[bc.top_up ? all_up : 0] = Rat(1);

  // cur[mask * 2 + h]
  std::vector<Rat> cur(masks * 2), next(masks * 2);
  for (int i = 0; i < L; ++i) {
    std::fill(cur.begin(), cur.end(), Rat(0));
    for (std::size_t m = 0; m < masks; ++m) {
      if (!rows[m].is_zero()) cur[m * 2 + (bc.left_right ? 1 : 0)] = rows[m];
    }
    for (int j = 0; j < L; ++j) {
      std::fill(next.begin(), next.end(), Rat(0));
      const std::size_t bit = std::size_t{1} << j;
      for (std::size_t m = 0; m < masks; ++m) {
        for (int h = 0; h < 2; ++h) {
          const Rat& w = cur[m * 2 + static_cast<std::size_t>(h)];
          if (w.is_zero()) continue;
          VertexState v;
          v.west = h == 1;
          v.north = (m & bit) != 0;
          for (int east = 0; east < 2; ++east) {
            v.east = east == 1;
            const int south = static_cast<int>(v.east) + static_cast<int>(v.north) - h;
            if (south < 0 || south > 1) continue;
            v.south = south == 1;
            const std::size_t m2 = v.south ? (m | bit) : (m & ~bit);
            next[m2 * 2 + static_cast<std::size_t>(east)] += w * weight(i, j, v.classify());
          }
        }
      }
      std::swap(cur, next);
    }
    for (std::size_t m = 0; m < masks; ++m) rows[m] = cur[m * 2 + (bc.right_right ? 1 : 0)];
  }
  return rows[bc.bottom_up ? all_up : 0];
}

}  // namespace

Rat enumerate_Z(const ModelParams& params, const SpectralPoint& point,
                BoundaryOrientation orientation) {
  const int L = params.L();
  if (point.size() != L) throw std::invalid_argument("enumerate_Z: point has wrong length");
  // Only 3 L^2 distinct weights per evaluation.
  std::vector<std::array<Rat, 3>> table(static_cast<std::size_t>(L * L));
  const Rat c = weight_c(params);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      Rat x = point.lambda[static_cast<std::size_t>(i)] - params.mu()[static_cast<std::size_t>(j)];
      if (orientation == BoundaryOrientation::DwReversed) x = -x;
      table[static_cast<std::size_t>(i * L + j)] = {weight_a(x, params), weight_b(x, params), c};
    }
  }
  return sweep(L, orientation, [&](int i, int j, VertexClass cls) -> const Rat& {
    return table[static_cast<std::size_t>(i * L + j)][static_cast<std::size_t>(cls)];
  });
}

std::uint64_t count_configurations(int L, BoundaryOrientation orientation) {
  if (L < 1) throw std::invalid_argument("count_configurations: L must be >= 1");
  const Rat one(1);
  const Rat count = sweep(L, orientation, [&](int, int, VertexClass) -> const Rat& { return one; });
  return count.numerator().get_ui();
}

MultiPoly oracle_polynomial(const ModelParams& params, BoundaryOrientation orientation) {
  const int L = params.L();
  if (L > kMaxInterpolationL) {
    throw BudgetExceeded("interpolation budget exceeded: L = " + std::to_string(L) +
                         ", suggested max L = " + std::to_string(kMaxInterpolationL));
  }
  const auto grid = generic_grid(params, L);
  return interpolate_multivariate(
      [&](std::span<const Rat> values) {
        SpectralPoint p{{values.begin(), values.end()}, std::nullopt};
        return enumerate_Z(params, p, orientation);
      },
      lambda_variables(L), std::vector<int>(static_cast<std::size_t>(L), L - 1), grid);
}

OrientationSelection select_orientation(const ModelParams& params, std::uint64_t seed, int points) {
  if (params.L() < 2) throw std::invalid_argument("select_orientation: requires L >= 2");
  OrientationSelection selection;
  std::vector<BoundaryOrientation> passing;
  for (auto orientation : {BoundaryOrientation::DwStandard, BoundaryOrientation::DwReversed}) {
    const ZFunction z = [&](const SpectralPoint& p) { return enumerate_Z(params, p, orientation); };
    bool ok = true;
    for (int s = 0; s < points; ++s) {
      const SpectralPoint point = sample_generic_point(params, seed + static_cast<std::uint64_t>(s), true);
      for (int n = 0; n <= params.L(); ++n) {
        Rat r = functional_residual(n, *point.lambda0, point, params, z);
        ok = ok && r.is_zero();
        selection.trials.push_back({orientation, n, point, std::move(r)});
      }
    }
    if (ok) passing.push_back(orientation);
  }
  if (passing.size() != 1) {
    throw OrientationSelectionError(passing.empty()
                                        ? "no orientation satisfies the functional equation"
                                        : "both orientations satisfy the functional equation",
                                    std::move(selection));
  }
  selection.chosen = passing.front();
  return selection;
}

}  // namespace vertexkz

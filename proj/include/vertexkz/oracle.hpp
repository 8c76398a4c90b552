#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vertexkz/errors.hpp"
#include "vertexkz/model.hpp"
#include "vertexkz/multipoly.hpp"
#include "vertexkz/rat.hpp"

namespace vertexkz {

/// Domain-wall boundary variants.
///
/// DwStandard: vertical external edges point into the lattice, horizontal
/// ones point out; the vertex in row i, column j carries weights evaluated at
/// lambda_i - mu_j.
///
/// DwReversed: every boundary arrow flipped and the lattice read transposed,
/// so the weights are evaluated at mu_j - lambda_i. (Flipping arrows alone is
/// a symmetry of the symmetric weights and gives the same Z.)
enum class BoundaryOrientation { DwStandard, DwReversed };

std::string_view to_string(BoundaryOrientation orientation);
/// Accepts "dw-standard" / "dw-reversed".
BoundaryOrientation parse_orientation(std::string_view text);

enum class VertexClass { A, B, C };

/// Arrows around one vertex. `west`/`east`: the horizontal edge points right;
/// `south`/`north`: the vertical edge points up.
struct VertexState {
  bool west = false;
  bool east = false;
  bool south = false;
  bool north = false;

  /// Two arrows in, two out.
  [[nodiscard]] bool satisfies_ice_rule() const {
    return static_cast<int>(west) + static_cast<int>(south) ==
           static_cast<int>(east) + static_cast<int>(north);
  }
  /// a: arrows pass straight through and agree (right+up or left+down);
  /// b: straight through and disagree; c: arrows turn.
  [[nodiscard]] VertexClass classify() const;
};

/// Partition function by row-to-row transfer over vertical-edge bitmasks.
/// Genericity is not required: Z is a polynomial in the rapidities.
Rat enumerate_Z(const ModelParams& params, const SpectralPoint& point,
                BoundaryOrientation orientation = BoundaryOrientation::DwStandard);

/// Number of admissible configurations (all weights set to 1).
std::uint64_t count_configurations(int L,
                                   BoundaryOrientation orientation = BoundaryOrientation::DwStandard);

/// Largest L for which tensor-grid reconstruction is attempted.
inline constexpr int kMaxInterpolationL = 6;

/// Z(lambda_1..lambda_L) reconstructed on a generic tensor grid with
/// per-variable bound L - 1. Throws BudgetExceeded above kMaxInterpolationL.
MultiPoly oracle_polynomial(const ModelParams& params,
                            BoundaryOrientation orientation = BoundaryOrientation::DwStandard);

struct OrientationTrial {
  BoundaryOrientation orientation;
  int n = 0;
  SpectralPoint point;
  Rat residual;
};

struct OrientationSelection {
  BoundaryOrientation chosen = BoundaryOrientation::DwStandard;
  std::vector<OrientationTrial> trials;
};

/// Selection failure; keeps the residuals of both variants for the report.
class OrientationSelectionError : public NoOrientation {
 public:
  OrientationSelectionError(const std::string& what, OrientationSelection partial)
      : NoOrientation(what), partial_(std::move(partial)) {}
  [[nodiscard]] const OrientationSelection& partial() const { return partial_; }

 private:
  OrientationSelection partial_;
};

/// Runs every functional equation (n = 0..L) on the oracle of each variant at
/// `points` seeded generic points and keeps the variant whose residuals all
/// vanish. Throws OrientationSelectionError when both or neither variant
/// passes. Requires L >= 2.
OrientationSelection select_orientation(const ModelParams& params, std::uint64_t seed = 7,
                                        int points = 3);

}  // namespace vertexkz

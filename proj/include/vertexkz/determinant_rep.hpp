#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "vertexkz/matrix.hpp"
#include "vertexkz/model.hpp"
#include "vertexkz/multipoly.hpp"
#include "vertexkz/oracle.hpp"
#include "vertexkz/rat.hpp"

namespace vertexkz {

/// The L-1 systems n != i solved for the unknowns E_ij(Z), j != i.
///
/// Row r of W corresponds to rows_n[r], column s to cols_j[s]; entry
/// (r, s) is omega_{i, cols_j[s]}^{(rows_n[r])}. H[j] and Hbar[j] replace the
/// column of j by the constant c and by h_i^(n), respectively.
struct CramerSystem {
  int i = 0;
  std::vector<int> rows_n;
  std::vector<int> cols_j;
  RatMatrix W;
  std::map<int, RatMatrix> H;
  std::map<int, RatMatrix> Hbar;
  Rat det_W;

  [[nodiscard]] bool degenerate() const { return det_W.is_zero(); }
  /// Position of j among cols_j.
  [[nodiscard]] std::size_t column_of(int j) const;
};

/// Requires L >= 2. Never throws on det(W) = 0; check degenerate().
CramerSystem build_cramer(int i, const SpectralPoint& point, const ModelParams& params);

/// det(W) E_ij(Z) - det(H_ij) d_i Z + det(Hbar_ij) Z at the point.
/// Throws DegenerateCramer when det(W) = 0.
Rat cramer_identity_residual(int i, int j, const SpectralPoint& point, const ModelParams& params,
                             const MultiPoly& zpoly);

/// Order-L matrices for the first-order system in lambda_i. Column i holds c
/// (K, Y) or h_i^(n) (Kbar, Ybar); the other columns hold omega (K, Kbar) or
/// omega-bar (Y, Ybar); row r is n = r + 1.
struct FamilyMatrices {
  int i = 0;
  RatMatrix K, Kbar, Y, Ybar;
  Rat prefactor;  // kz_prefactor(i)
};

/// With `verify`, also checks det(K) = P^(L-1) det(Y) and the same for the
/// barred pair, throwing RepresentationMismatch if either fails.
FamilyMatrices build_family(int i, const SpectralPoint& point, const ModelParams& params,
                            bool verify = true);

/// True iff both prefactor identities hold exactly.
bool prefactor_identity_holds(const FamilyMatrices& family, int L);

/// Numerator and denominator of B_i in d_i Z = B_i Z, assembled from the
/// Cramer determinants:
///   num = h_i^(i) det W - sum_j omega_ij^(i) det Hbar_ij
///   den = c det W       - sum_j omega_ij^(i) det H_ij
struct BRatio {
  Rat numerator;
  Rat denominator;
};
BRatio b_ratio(int i, const SpectralPoint& point, const ModelParams& params);

/// det(Y_i) d_i Z - det(Ybar_i) Z at the point. Throws DegenerateCramer when
/// det(Y_i) = 0.
Rat fuchs_residual(int i, const SpectralPoint& point, const ModelParams& params,
                   const MultiPoly& zpoly);

/// c^(L-1) det(Y_i).
Rat z_det(int i, const SpectralPoint& point, const ModelParams& params);

/// c^(L-1) det(Y_i) reconstructed on the generic tensor grid.
MultiPoly det_polynomial(int i, const ModelParams& params);

struct CalibrationSample {
  int i = 0;
  SpectralPoint point;
  Rat oracle;
  Rat z_det;
  Rat ratio;  // oracle / z_det
};

struct Calibration {
  Rat r;  // oracle / z_det, constant across samples
  bool is_one = false;
  std::vector<CalibrationSample> samples;
};

/// Measures r = oracle Z / z_det at `points` seeded generic points and every
/// i. Throws RepresentationMismatch if r varies.
Calibration calibrate(const ModelParams& params, std::uint64_t seed, int points = 6,
                      BoundaryOrientation orientation = BoundaryOrientation::DwStandard);

struct SliceDegrees {
  int var = 0;           // 1-based rapidity the slice runs along
  int det_Y = 0;         // -1 for an identically zero slice
  int det_Ybar = 0;
  int gcd_degree = 0;    // degree of gcd(det Y slice, det Ybar slice)
};

struct DegreeReport {
  int i = 0;
  SpectralPoint frozen;
  std::vector<SliceDegrees> slices;
  /// det(Y_i) has degree L-1 in every variable, det(Ybar_i) degree L-2 in
  /// lambda_i and L-1 in the others, and every slice gcd is constant.
  [[nodiscard]] bool passes(int L) const;
};

/// Interpolates det(Y_i) and det(Ybar_i) along each lambda_j through L+1
/// nodes, the other rapidities frozen at a seeded generic point.
DegreeReport degree_report(int i, const ModelParams& params, std::uint64_t seed);

struct LeadingCoefficient {
  int L = 0;
  Rat oracle;                 // coefficient of prod_j lambda_j^(L-1) in the oracle
  std::vector<Rat> via_det;   // same from c^(L-1) det(Y_i), i = 1..L
  Rat asymptotic;             // 2^(-L(L-1)) c^L L!
  Rat ratio;                  // oracle / asymptotic
  [[nodiscard]] bool matches_asymptotic() const { return oracle == asymptotic; }
  [[nodiscard]] bool routes_agree() const;
};

LeadingCoefficient leading_coefficient(const ModelParams& params,
                                       BoundaryOrientation orientation = BoundaryOrientation::DwStandard);

}  // namespace vertexkz

#include "vertexkz/determinant_rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "vertexkz/errors.hpp"
#include "vertexkz/interpolation.hpp"
#include "vertexkz/kz.hpp"
#include "vertexkz/univariate.hpp"

namespace vertexkz {

std::size_t CramerSystem::column_of(int j) const {
  auto it = std::find(cols_j.begin(), cols_j.end(), j);
  if (it == cols_j.end()) throw std::invalid_argument("CramerSystem: j is not an unknown");
  return static_cast<std::size_t>(it - cols_j.begin());
}

CramerSystem build_cramer(int i, const SpectralPoint& point, const ModelParams& params) {
  const int L = params.L();
  if (L < 2) throw std::invalid_argument("build_cramer: requires L >= 2");
  if (i < 1 || i > L) throw std::out_of_range("build_cramer: i out of range");
  CramerSystem sys;
  sys.i = i;
  for (int k = 1; k <= L; ++k) {
    if (k != i) {
      sys.rows_n.push_back(k);
      sys.cols_j.push_back(k);
    }
  }
  const std::size_t order = sys.rows_n.size();
  sys.W = RatMatrix(order);
  std::vector<Rat> c_column(order, weight_c(params));
  std::vector<Rat> h_column(order);
  for (std::size_t r = 0; r < order; ++r) {
    const int n = sys.rows_n[r];
    for (std::size_t s = 0; s < order; ++s) sys.W.at(r, s) = omega_coeff(i, sys.cols_j[s], n, point, params);
    h_column[r] = h_coeff(i, n, point, params);
  }
  for (std::size_t s = 0; s < order; ++s) {
    sys.H.emplace(sys.cols_j[s], sys.W.with_column(s, c_column));
    sys.Hbar.emplace(sys.cols_j[s], sys.W.with_column(s, h_column));
  }
  sys.det_W = determinant(sys.W);
  return sys;
}

Rat cramer_identity_residual(int i, int j, const SpectralPoint& point, const ModelParams& params,
                             const MultiPoly& zpoly) {
  const CramerSystem sys = build_cramer(i, point, params);
  if (sys.degenerate()) throw DegenerateCramer();
  const Rat z = zpoly.evaluate(point.lambda);
  const Rat dz = zpoly.differentiate(static_cast<std::size_t>(i - 1)).evaluate(point.lambda);
  const Rat ez = zpoly.evaluate(collapse(point, i, j).lambda);
  return sys.det_W * ez - determinant(sys.H.at(j)) * dz + determinant(sys.Hbar.at(j)) * z;
}

FamilyMatrices build_family(int i, const SpectralPoint& point, const ModelParams& params,
                            bool verify) {
  const int L = params.L();
  if (i < 1 || i > L) throw std::out_of_range("build_family: i out of range");
  const auto order = static_cast<std::size_t>(L);
  FamilyMatrices fam{i, RatMatrix(order), RatMatrix(order), RatMatrix(order), RatMatrix(order),
                     kz_prefactor(i, point, params)};
  const Rat c = weight_c(params);
  for (int n = 1; n <= L; ++n) {
    const auto r = static_cast<std::size_t>(n - 1);
    const Rat h = h_coeff(i, n, point, params);
    for (int j = 1; j <= L; ++j) {
      const auto s = static_cast<std::size_t>(j - 1);
      if (j == i) {
        fam.K.at(r, s) = c;
        fam.Y.at(r, s) = c;
        fam.Kbar.at(r, s) = h;
        fam.Ybar.at(r, s) = h;
        continue;
      }
      const Rat omega = omega_coeff(i, j, n, point, params);
      const Rat omega_bar = omega_bar_coeff(i, j, n, point, params);
      fam.K.at(r, s) = omega;
      fam.Kbar.at(r, s) = omega;
      fam.Y.at(r, s) = omega_bar;
      fam.Ybar.at(r, s) = omega_bar;
    }
  }
  if (verify && !prefactor_identity_holds(fam, L)) {
    throw RepresentationMismatch("det(K) != P^(L-1) det(Y) at this point");
  }
  return fam;
}

bool prefactor_identity_holds(const FamilyMatrices& family, int L) {
  const Rat scale = family.prefactor.pow(L - 1);
  return determinant(family.K) == scale * determinant(family.Y) &&
         determinant(family.Kbar) == scale * determinant(family.Ybar);
}

BRatio b_ratio(int i, const SpectralPoint& point, const ModelParams& params) {
  const CramerSystem sys = build_cramer(i, point, params);
  BRatio out{h_coeff(i, i, point, params) * sys.det_W, weight_c(params) * sys.det_W};
  for (int j : sys.cols_j) {
    const Rat omega = omega_coeff(i, j, i, point, params);
    out.numerator -= omega * determinant(sys.Hbar.at(j));
    out.denominator -= omega * determinant(sys.H.at(j));
  }
  return out;
}

Rat fuchs_residual(int i, const SpectralPoint& point, const ModelParams& params,
                   const MultiPoly& zpoly) {
  const FamilyMatrices fam = build_family(i, point, params, false);
  const Rat det_Y = determinant(fam.Y);
  if (det_Y.is_zero()) throw DegenerateCramer("det(Y_i) vanishes at this point");
  const Rat z = zpoly.evaluate(point.lambda);
  const Rat dz = zpoly.differentiate(static_cast<std::size_t>(i - 1)).evaluate(point.lambda);
  return det_Y * dz - determinant(fam.Ybar) * z;
}

Rat z_det(int i, const SpectralPoint& point, const ModelParams& params) {
  const FamilyMatrices fam = build_family(i, point, params, false);
  return weight_c(params).pow(params.L() - 1) * determinant(fam.Y);
}

MultiPoly det_polynomial(int i, const ModelParams& params) {
  const int L = params.L();
  if (L > kMaxInterpolationL) {
    throw BudgetExceeded("interpolation budget exceeded: L = " + std::to_string(L) +
                         ", suggested max L = " + std::to_string(kMaxInterpolationL));
  }
  return interpolate_multivariate(
      [&](std::span<const Rat> values) {
        return z_det(i, SpectralPoint{{values.begin(), values.end()}, std::nullopt}, params);
      },
      lambda_variables(L), std::vector<int>(static_cast<std::size_t>(L), L - 1),
      generic_grid(params, L));
}

Calibration calibrate(const ModelParams& params, std::uint64_t seed, int points,
                      BoundaryOrientation orientation) {
  Calibration out;
  for (int s = 0; s < points; ++s) {
    const SpectralPoint point = sample_generic_point(params, seed + static_cast<std::uint64_t>(s));
    const Rat oracle = enumerate_Z(params, point, orientation);
    for (int i = 1; i <= params.L(); ++i) {
      const Rat zd = z_det(i, point, params);
      if (zd.is_zero()) {
        throw RepresentationMismatch("z_det vanishes at a seeded point (i = " + std::to_string(i) + ")");
      }
      out.samples.push_back({i, point, oracle, zd, oracle / zd});
    }
  }
  if (out.samples.empty()) throw std::invalid_argument("calibrate: need at least one point");
  out.r = out.samples.front().ratio;
  for (const auto& sample : out.samples) {
    if (sample.ratio != out.r) {
      throw RepresentationMismatch("oracle / z_det = " + sample.ratio.str() + " at i = " +
                                   std::to_string(sample.i) + ", expected " + out.r.str());
    }
  }
  out.is_one = out.r == Rat(1);
  return out;
}

bool DegreeReport::passes(int L) const {
  for (const auto& s : slices) {
    if (s.det_Y != L - 1) return false;
    if (s.det_Ybar != (s.var == i ? L - 2 : L - 1)) return false;
    if (s.gcd_degree != 0) return false;
  }
  return !slices.empty();
}

DegreeReport degree_report(int i, const ModelParams& params, std::uint64_t seed) {
  const int L = params.L();
  DegreeReport report{i, sample_generic_point(params, seed), {}};
  for (int var = 1; var <= L; ++var) {
    const std::vector<Rat> nodes = generic_slice_nodes(report.frozen, params, var, L + 1);
    std::vector<Rat> y_values, ybar_values;
    for (const Rat& x : nodes) {
      const FamilyMatrices fam = build_family(i, report.frozen.with(var, x), params, false);
      y_values.push_back(determinant(fam.Y));
      ybar_values.push_back(determinant(fam.Ybar));
    }
    const UniPoly y = interpolate_dense(nodes, y_values);
    const UniPoly ybar = interpolate_dense(nodes, ybar_values);
    report.slices.push_back({var, y.degree(), ybar.degree(), gcd(y, ybar).degree()});
  }
  return report;
}

bool LeadingCoefficient::routes_agree() const {
  return std::all_of(via_det.begin(), via_det.end(), [&](const Rat& v) { return v == oracle; });
}

LeadingCoefficient leading_coefficient(const ModelParams& params, BoundaryOrientation orientation) {
  const int L = params.L();
  const MultiPoly::Exponents top(static_cast<std::size_t>(L), L - 1);
  LeadingCoefficient out;
  out.L = L;
  out.oracle = oracle_polynomial(params, orientation).coefficient(top);
  for (int i = 1; i <= L; ++i) out.via_det.push_back(det_polynomial(i, params).coefficient(top));
  Rat factorial(1);
  for (int k = 2; k <= L; ++k) factorial *= Rat(k);
  out.asymptotic = Rat(2).pow(-L * (L - 1)) * weight_c(params).pow(L) * factorial;
  out.ratio = out.oracle / out.asymptotic;
  return out;
}

}  // namespace vertexkz

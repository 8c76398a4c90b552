#pragma once

#include <map>
#include <vector>

#include "vertexkz/functional.hpp"
#include "vertexkz/model.hpp"
#include "vertexkz/multipoly.hpp"
#include "vertexkz/rat.hpp"

namespace vertexkz {

// All rapidity indices below are 1-based (i, j, n in 1..L).

/// E_ij: evaluates zfun with lambda_j overwritten by lambda_i.
ZFunction eval_map(ZFunction zfun, int i, int j);
/// The point E_ij evaluates at.
SpectralPoint collapse(const SpectralPoint& point, int i, int j);

/// omega_ij^(n): the scalar multiplying E_ij in the n-th PDE system, i != j.
/// For n = i it coincides with omega_base. Throws NonGenericPoint at poles.
Rat omega_coeff(int i, int j, int n, const SpectralPoint& point, const ModelParams& params);

/// Scalar of Omega_ij in the base (n = i) system, from its own closed form.
Rat omega_base(int i, int j, const SpectralPoint& point, const ModelParams& params);

/// h_i^(n); n = i falls back to h_base (the general form has a pole there).
Rat h_coeff(int i, int n, const SpectralPoint& point, const ModelParams& params);

/// h_i of the base system.
Rat h_base(int i, const SpectralPoint& point, const ModelParams& params);

/// omega-bar_ij^(n): omega_ij^(n) with the row-independent factor
/// kz_prefactor(i) divided out.
Rat omega_bar_coeff(int i, int j, int n, const SpectralPoint& point, const ModelParams& params);

/// prod_k a^{-1}(l_i - mu_k) prod_{k != i} b(l_k - l_i) / a(l_k - l_i).
Rat kz_prefactor(int i, const SpectralPoint& point, const ModelParams& params);

struct KZCoeffs {
  int i = 0;
  int n = 0;
  std::map<int, Rat> omega;  // j -> omega_ij^(n), j != i
  Rat h;
};

KZCoeffs kz_coeffs(int i, int n, const SpectralPoint& point, const ModelParams& params);

/// c d_i Z - sum_{j != i} omega_ij^(n) E_ij Z - h_i^(n) Z at the point, with
/// d_i taken formally on zpoly. Zero when zpoly is the partition function
/// (or any constant multiple of it).
Rat kz_residual(int i, int n, const SpectralPoint& point, const ModelParams& params,
                const MultiPoly& zpoly);

/// The same residual built from the base-system formulas.
Rat kz_residual_base(int i, const SpectralPoint& point, const ModelParams& params,
                         const MultiPoly& zpoly);

/// Factor kappa with lim_{alpha->0} FZ-residual(lambda_0 = lambda_i + alpha)
/// = kappa * kz_residual_base, for any symmetric candidate:
///   kappa = -prod_k a(l_i - mu_k) prod_{k != i} a(l_k - l_i) / b(l_k - l_i).
Rat fz_limit_factor(int i, const SpectralPoint& point, const ModelParams& params);

/// Approach of the base functional residual to its lambda_0 -> lambda_i limit.
struct AlphaLimitCheck {
  int i = 0;
  std::vector<Rat> alphas;
  std::vector<Rat> residuals;  // FZ residual at lambda_0 = lambda_i + alpha
  Rat extrapolated;            // linear extrapolation of the last two to alpha = 0
  Rat expected;                // fz_limit_factor * kz_residual_base
  /// Exact zero everywhere, or: strictly shrinking distance to `expected`
  /// along the sequence, the extrapolant closer still, and non-increasing
  /// steps between consecutive slopes (residual - expected) / alpha. The last
  /// condition holds only when the error is O(alpha); a wrong limit makes the
  /// steps grow like 1/alpha, down to the resolution of the alpha sequence.
  [[nodiscard]] bool passes() const;
  /// (residual_k - expected) / alpha_k.
  [[nodiscard]] std::vector<Rat> slopes() const;
};

/// alphas: at least three, decreasing; defaults to {1/10, 1/100, 1/1000}.
/// zpoly must be symmetric.
AlphaLimitCheck alpha_limit_check(int i, const SpectralPoint& point, const ModelParams& params,
                                  const MultiPoly& zpoly, std::vector<Rat> alphas = {});

}  // namespace vertexkz

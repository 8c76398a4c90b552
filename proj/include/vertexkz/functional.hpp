#pragma once

#include <functional>
#include <vector>

#include "vertexkz/model.hpp"
#include "vertexkz/rat.hpp"

namespace vertexkz {

/// Candidate partition function, evaluated at lambda_1..lambda_L of a point.
using ZFunction = std::function<Rat(const SpectralPoint&)>;

/// M_0..M_L (n = 0) or M_0^(n)..M_L^(n) at one point.
struct FunctionalCoeffs {
  int n = 0;
  Rat lambda0;
  SpectralPoint point;
  std::vector<Rat> m;
};

/// Coefficient M_i (i in 0..L) of the base functional equation:
///   M_0 = prod_j b(l0 - mu_j) - prod_j a(l0 - mu_j) prod_j a(l_j - l0) / b(l_j - l0)
///   M_i = c / b(l_i - l0) prod_j a(l_i - mu_j) prod_{j != i} a(l_j - l_i) / b(l_j - l_i)
/// `point.lambda0` is ignored in favour of the explicit argument.
/// Throws NonGenericPoint at a pole.
Rat coeff_M(int i, const Rat& lambda0, const SpectralPoint& point, const ModelParams& params);

/// M_i^(n), n in 1..L: the base coefficient with index n (i = 0), 0 (i = n)
/// or i (otherwise), evaluated after exchanging lambda_0 and lambda_n.
Rat coeff_M_n(int n, int i, const Rat& lambda0, const SpectralPoint& point,
              const ModelParams& params);

FunctionalCoeffs functional_coeffs(int n, const Rat& lambda0, const SpectralPoint& point,
                                   const ModelParams& params);

/// The L-rapidity point obtained from (lambda_0, ..., lambda_L) by dropping
/// entry k (0..L).
SpectralPoint drop_rapidity(const Rat& lambda0, const SpectralPoint& point, int k);

/// sum_i M_i^(n) zfun(X_i), X_i the tuple with entry i removed. n = 0 is the
/// base equation. Exactly zero when zfun is the partition function.
Rat functional_residual(int n, const Rat& lambda0, const SpectralPoint& point,
                        const ModelParams& params, const ZFunction& zfun);

}  // namespace vertexkz

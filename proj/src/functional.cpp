#include "vertexkz/functional.hpp"

#include <stdexcept>
#include <string>

#include "vertexkz/errors.hpp"

namespace vertexkz {

namespace {

Rat checked_div(const Rat& num, const Rat& den, const char* where) {
  if (den.is_zero()) throw NonGenericPoint(where);
  return num / den;
}

void check_index(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi) throw std::out_of_range(std::string(what) + " index out of range");
}

}  // namespace

Rat coeff_M(int i, const Rat& lambda0, const SpectralPoint& point, const ModelParams& params) {
  const int L = params.L();
  check_index(i, 0, L, "coeff_M");
  if (point.size() != L) throw std::invalid_argument("coeff_M: point has wrong length");
  auto lam = [&](int k) -> const Rat& { return point.lambda[static_cast<std::size_t>(k - 1)]; };

  if (i == 0) {
    Rat prod_b(1), prod_a(1), ratio(1);
    for (int j = 1; j <= L; ++j) {
      prod_b *= weight_b(lambda0 - params.mu(j), params);
      prod_a *= weight_a(lambda0 - params.mu(j), params);
      ratio *= checked_div(weight_a(lam(j) - lambda0, params), weight_b(lam(j) - lambda0, params),
                           "lambda_j = lambda_0");
    }
    return prod_b - prod_a * ratio;
  }

  const Rat& li = lam(i);
  Rat out = checked_div(weight_c(params), weight_b(li - lambda0, params), "lambda_i = lambda_0");
  for (int j = 1; j <= L; ++j) out *= weight_a(li - params.mu(j), params);
  for (int j = 1; j <= L; ++j) {
    if (j == i) continue;
    out *= checked_div(weight_a(lam(j) - li, params), weight_b(lam(j) - li, params),
                       "lambda_j = lambda_i");
  }
  return out;
}

Rat coeff_M_n(int n, int i, const Rat& lambda0, const SpectralPoint& point,
              const ModelParams& params) {
  check_index(n, 1, params.L(), "coeff_M_n");
  check_index(i, 0, params.L(), "coeff_M_n");
  SpectralPoint swapped = point;
  swapped.lambda0 = lambda0;
  swapped = swapped.swapped_with_lambda0(n);
  const int base = i == 0 ? n : (i == n ? 0 : i);
  return coeff_M(base, *swapped.lambda0, swapped, params);
}

FunctionalCoeffs functional_coeffs(int n, const Rat& lambda0, const SpectralPoint& point,
                                   const ModelParams& params) {
  FunctionalCoeffs out{n, lambda0, point, {}};
  for (int i = 0; i <= params.L(); ++i) {
    out.m.push_back(n == 0 ? coeff_M(i, lambda0, point, params)
                           : coeff_M_n(n, i, lambda0, point, params));
  }
  return out;
}

SpectralPoint drop_rapidity(const Rat& lambda0, const SpectralPoint& point, int k) {
  SpectralPoint out;
  if (k != 0) out.lambda.push_back(lambda0);
  for (int j = 1; j <= point.size(); ++j) {
    if (j != k) out.lambda.push_back(point.lambda[static_cast<std::size_t>(j - 1)]);
  }
  return out;
}

Rat functional_residual(int n, const Rat& lambda0, const SpectralPoint& point,
                        const ModelParams& params, const ZFunction& zfun) {
  const FunctionalCoeffs coeffs = functional_coeffs(n, lambda0, point, params);
  Rat sum;
  for (int i = 0; i <= params.L(); ++i) {
    const Rat& m = coeffs.m[static_cast<std::size_t>(i)];
    if (m.is_zero()) continue;
    sum += m * zfun(drop_rapidity(lambda0, point, i));
  }
  return sum;
}

}  // namespace vertexkz

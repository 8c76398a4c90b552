#include "vertexkz/kz.hpp"

#include <stdexcept>

#include "vertexkz/errors.hpp"

namespace vertexkz {

namespace {

Rat checked_div(const Rat& num, const Rat& den) {
  if (den.is_zero()) throw NonGenericPoint();
  return num / den;
}

struct Weights {
  const ModelParams& params;
  const SpectralPoint& point;
  [[nodiscard]] Rat a(const Rat& x) const { return weight_a(x, params); }
  [[nodiscard]] Rat b(const Rat& x) const { return weight_b(x, params); }
  [[nodiscard]] Rat c() const { return weight_c(params); }
  [[nodiscard]] const Rat& l(int k) const { return point.lambda[static_cast<std::size_t>(k - 1)]; }
  [[nodiscard]] const Rat& mu(int k) const { return params.mu(k); }
  [[nodiscard]] int L() const { return params.L(); }
};

void check_pair(int i, int j, const ModelParams& params) {
  if (i < 1 || i > params.L() || j < 1 || j > params.L()) {
    throw std::out_of_range("rapidity index out of range");
  }
  if (i == j) throw std::invalid_argument("E_ij requires i != j");
}

Rat evaluate_at(const MultiPoly& p, const SpectralPoint& point) { return p.evaluate(point.lambda); }

}  // namespace

SpectralPoint collapse(const SpectralPoint& point, int i, int j) {
  return point.with(j, point.lambda.at(static_cast<std::size_t>(i - 1)));
}

ZFunction eval_map(ZFunction zfun, int i, int j) {
  if (i == j) throw std::invalid_argument("E_ij requires i != j");
  return [zfun = std::move(zfun), i, j](const SpectralPoint& p) { return zfun(collapse(p, i, j)); };
}

Rat omega_coeff(int i, int j, int n, const SpectralPoint& point, const ModelParams& params) {
  check_pair(i, j, params);
  if (n < 1 || n > params.L()) throw std::out_of_range("omega_coeff: n out of range");
  const Weights w{params, point};
  const Rat &li = w.l(i), &lj = w.l(j), &ln = w.l(n);

  if (j != n) {
    Rat out = checked_div(w.a(li - lj), w.b(lj - li)) * checked_div(w.a(ln - li), w.a(ln - lj));
    for (int k = 1; k <= w.L(); ++k) out *= checked_div(w.a(lj - w.mu(k)), w.a(li - w.mu(k)));
    for (int k = 1; k <= w.L(); ++k) {
      if (k != i) out *= checked_div(w.b(w.l(k) - li), w.a(w.l(k) - li));
    }
    for (int k = 1; k <= w.L(); ++k) {
      if (k != j) out *= checked_div(w.a(w.l(k) - lj), w.b(w.l(k) - lj));
    }
    return out;
  }

  Rat pre = w.c().inverse();
  for (int k = 1; k <= w.L(); ++k) pre = checked_div(pre, w.a(li - w.mu(k)));
  for (int k = 1; k <= w.L(); ++k) {
    if (k != i && k != n) pre *= checked_div(w.b(w.l(k) - li), w.a(w.l(k) - li));
  }
  Rat first = w.b(ln - li);
  for (int k = 1; k <= w.L(); ++k) first *= w.b(ln - w.mu(k));
  Rat second = checked_div(w.a(li - ln).pow(2), w.b(li - ln));
  for (int k = 1; k <= w.L(); ++k) second *= w.a(ln - w.mu(k));
  for (int k = 1; k <= w.L(); ++k) {
    if (k != i && k != n) second *= checked_div(w.a(w.l(k) - ln), w.b(w.l(k) - ln));
  }
  return pre * (first + second);
}

Rat omega_base(int i, int j, const SpectralPoint& point, const ModelParams& params) {
  check_pair(i, j, params);
  const Weights w{params, point};
  const Rat &li = w.l(i), &lj = w.l(j);
  Rat out = checked_div(w.c(), w.a(lj - li)) * checked_div(w.a(li - lj), w.b(li - lj));
  for (int k = 1; k <= w.L(); ++k) out *= checked_div(w.a(lj - w.mu(k)), w.a(li - w.mu(k)));
  for (int k = 1; k <= w.L(); ++k) {
    if (k == i || k == j) continue;
    out *= checked_div(w.b(w.l(k) - li), w.a(w.l(k) - li)) *
           checked_div(w.a(w.l(k) - lj), w.b(w.l(k) - lj));
  }
  return out;
}

Rat h_base(int i, const SpectralPoint& point, const ModelParams& params) {
  const Weights w{params, point};
  const Rat& li = w.l(i);
  Rat prod(1);
  for (int k = 1; k <= w.L(); ++k) prod *= checked_div(w.b(li - w.mu(k)), w.a(li - w.mu(k)));
  for (int k = 1; k <= w.L(); ++k) {
    if (k != i) prod *= checked_div(w.b(w.l(k) - li), w.a(w.l(k) - li));
  }
  Rat sum = prod;
  for (int k = 1; k <= w.L(); ++k) sum += checked_div(w.c(), w.a(li - w.mu(k)));
  for (int k = 1; k <= w.L(); ++k) {
    if (k == i) continue;
    sum += checked_div(w.c(), w.b(w.l(k) - li)) * checked_div(w.c(), w.a(w.l(k) - li));
  }
  return sum - Rat(1);
}

Rat h_coeff(int i, int n, const SpectralPoint& point, const ModelParams& params) {
  if (n < 1 || n > params.L() || i < 1 || i > params.L()) {
    throw std::out_of_range("h_coeff: index out of range");
  }
  if (n == i) return h_base(i, point, params);
  const Weights w{params, point};
  const Rat& li = w.l(i);
  Rat sum;
  for (int j = 1; j <= w.L(); ++j) {
    if (j == i || j == n) continue;
    sum += checked_div(w.c(), w.b(w.l(j) - li)) * checked_div(w.c(), w.a(w.l(j) - li));
  }
  for (int j = 1; j <= w.L(); ++j) sum += checked_div(w.c(), w.a(li - w.mu(j)));
  return sum - checked_div(w.a(li - w.l(n)), w.b(li - w.l(n))) - Rat(1);
}

Rat omega_bar_coeff(int i, int j, int n, const SpectralPoint& point, const ModelParams& params) {
  check_pair(i, j, params);
  if (n < 1 || n > params.L()) throw std::out_of_range("omega_bar_coeff: n out of range");
  const Weights w{params, point};
  const Rat &li = w.l(i), &lj = w.l(j), &ln = w.l(n);

  if (j != n) {
    Rat out = checked_div(w.a(li - lj), w.b(lj - li)) * checked_div(w.a(ln - li), w.a(ln - lj));
    for (int k = 1; k <= w.L(); ++k) out *= w.a(lj - w.mu(k));
    for (int k = 1; k <= w.L(); ++k) {
      if (k != j) out *= checked_div(w.a(w.l(k) - lj), w.b(w.l(k) - lj));
    }
    return out;
  }

  Rat first(1);
  for (int k = 1; k <= w.L(); ++k) first *= w.b(ln - w.mu(k));
  Rat second = checked_div(w.a(li - ln), w.b(li - ln)).pow(2);
  for (int k = 1; k <= w.L(); ++k) second *= w.a(ln - w.mu(k));
  for (int k = 1; k <= w.L(); ++k) {
    if (k != i && k != n) second *= checked_div(w.a(w.l(k) - ln), w.b(w.l(k) - ln));
  }
  return checked_div(w.a(ln - li), w.c()) * (first - second);
}

Rat kz_prefactor(int i, const SpectralPoint& point, const ModelParams& params) {
  const Weights w{params, point};
  const Rat& li = w.l(i);
  Rat out(1);
  for (int k = 1; k <= w.L(); ++k) out = checked_div(out, w.a(li - w.mu(k)));
  for (int k = 1; k <= w.L(); ++k) {
    if (k != i) out *= checked_div(w.b(w.l(k) - li), w.a(w.l(k) - li));
  }
  return out;
}

KZCoeffs kz_coeffs(int i, int n, const SpectralPoint& point, const ModelParams& params) {
  KZCoeffs out{i, n, {}, h_coeff(i, n, point, params)};
  for (int j = 1; j <= params.L(); ++j) {
    if (j != i) out.omega.emplace(j, omega_coeff(i, j, n, point, params));
  }
  return out;
}

namespace {

Rat residual_from(int i, const KZCoeffs& coeffs, const SpectralPoint& point,
                  const ModelParams& params, const MultiPoly& zpoly) {
  const Rat derivative = evaluate_at(zpoly.differentiate(static_cast<std::size_t>(i - 1)), point);
  Rat out = weight_c(params) * derivative;
  for (const auto& [j, omega] : coeffs.omega) out -= omega * evaluate_at(zpoly, collapse(point, i, j));
  out -= coeffs.h * evaluate_at(zpoly, point);
  return out;
}

}  // namespace

Rat kz_residual(int i, int n, const SpectralPoint& point, const ModelParams& params,
                const MultiPoly& zpoly) {
  return residual_from(i, kz_coeffs(i, n, point, params), point, params, zpoly);
}

Rat kz_residual_base(int i, const SpectralPoint& point, const ModelParams& params,
                         const MultiPoly& zpoly) {
  KZCoeffs coeffs{i, i, {}, h_base(i, point, params)};
  for (int j = 1; j <= params.L(); ++j) {
    if (j != i) coeffs.omega.emplace(j, omega_base(i, j, point, params));
  }
  return residual_from(i, coeffs, point, params, zpoly);
}

Rat fz_limit_factor(int i, const SpectralPoint& point, const ModelParams& params) {
  const Weights w{params, point};
  const Rat& li = w.l(i);
  Rat out(-1);
  for (int k = 1; k <= w.L(); ++k) out *= w.a(li - w.mu(k));
  for (int k = 1; k <= w.L(); ++k) {
    if (k != i) out *= checked_div(w.a(w.l(k) - li), w.b(w.l(k) - li));
  }
  return out;
}

std::vector<Rat> AlphaLimitCheck::slopes() const {
  std::vector<Rat> out;
  for (std::size_t k = 0; k < alphas.size(); ++k) out.push_back((residuals[k] - expected) / alphas[k]);
  return out;
}

bool AlphaLimitCheck::passes() const {
  if (residuals.size() < 3 || residuals.size() != alphas.size()) return false;
  bool all_zero = expected.is_zero() && extrapolated.is_zero();
  for (const Rat& r : residuals) all_zero = all_zero && r.is_zero();
  if (all_zero) return true;
  Rat previous = (residuals.front() - expected).abs();
  for (std::size_t k = 1; k < residuals.size(); ++k) {
    const Rat gap = (residuals[k] - expected).abs();
    if (!(gap < previous)) return false;
    previous = gap;
  }
  if (!((extrapolated - expected).abs() < previous)) return false;
  const std::vector<Rat> s = slopes();
  Rat step = (s[1] - s[0]).abs();
  for (std::size_t k = 2; k < s.size(); ++k) {
    const Rat next = (s[k] - s[k - 1]).abs();
    if (next > step) return false;
    step = next;
  }
  return true;
}

AlphaLimitCheck alpha_limit_check(int i, const SpectralPoint& point, const ModelParams& params,
                                  const MultiPoly& zpoly, std::vector<Rat> alphas) {
  if (alphas.empty()) alphas = {Rat(1, 10), Rat(1, 100), Rat(1, 1000)};
  if (alphas.size() < 3) throw std::invalid_argument("alpha_limit_check: need three alphas");
  const ZFunction z = [&](const SpectralPoint& p) { return evaluate_at(zpoly, p); };
  AlphaLimitCheck out;
  out.i = i;
  out.alphas = alphas;
  const Rat& li = point.lambda.at(static_cast<std::size_t>(i - 1));
  for (const Rat& alpha : alphas) {
    out.residuals.push_back(functional_residual(0, li + alpha, point, params, z));
  }
  const std::size_t last = alphas.size() - 1;
  const Rat slope = (out.residuals[last - 1] - out.residuals[last]) / (alphas[last - 1] - alphas[last]);
  out.extrapolated = out.residuals[last] - slope * alphas[last];
  out.expected = fz_limit_factor(i, point, params) * kz_residual_base(i, point, params, zpoly);
  return out;
}

}  // namespace vertexkz

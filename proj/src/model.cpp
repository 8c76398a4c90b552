#include "vertexkz/model.hpp"

#include <random>
#include <stdexcept>

namespace vertexkz {

ModelParams::ModelParams(int L, Rat eta, std::vector<Rat> mu)
    : L_(L), eta_(std::move(eta)), mu_(std::move(mu)) {
  if (L_ < 1) throw std::invalid_argument("ModelParams: L must be >= 1");
  if (eta_.is_zero()) throw std::invalid_argument("ModelParams: eta must be nonzero");
  if (mu_.size() != static_cast<std::size_t>(L_)) {
    throw std::invalid_argument("ModelParams: expected " + std::to_string(L_) + " inhomogeneities");
  }
}

ModelParams ModelParams::defaults(int L) {
  std::vector<Rat> mu;
  for (int j = 1; j <= L; ++j) mu.push_back(Rat(j) + Rat(1, 5));
  return ModelParams(L, Rat(1, 3), std::move(mu));
}

ModelParams ModelParams::unchecked(int L, Rat eta, std::vector<Rat> mu) {
  ModelParams p;
  p.L_ = L;
  p.eta_ = std::move(eta);
  p.mu_ = std::move(mu);
  return p;
}

ModelParams ModelParams::restricted(int L) const {
  if (L < 1 || L > L_) throw std::invalid_argument("ModelParams::restricted: L out of range");
  ModelParams p = *this;
  p.L_ = L;
  p.mu_.resize(static_cast<std::size_t>(L));
  return p;
}

ModelParams ModelParams::with_corrupted_weight_a(const Rat& shift) const {
  ModelParams p = *this;
  p.a_shift_ = shift;
  return p;
}

const Rat& SpectralPoint::at(int k) const {
  if (k == 0) {
    if (!lambda0) throw std::logic_error("SpectralPoint: lambda0 not set");
    return *lambda0;
  }
  return lambda.at(static_cast<std::size_t>(k - 1));
}

SpectralPoint SpectralPoint::with(int k, const Rat& value) const {
  SpectralPoint out = *this;
  out.lambda.at(static_cast<std::size_t>(k - 1)) = value;
  return out;
}

SpectralPoint SpectralPoint::swapped_with_lambda0(int k) const {
  if (!lambda0) throw std::logic_error("SpectralPoint: lambda0 not set");
  SpectralPoint out = *this;
  std::swap(*out.lambda0, out.lambda.at(static_cast<std::size_t>(k - 1)));
  return out;
}

Rat weight_a(const Rat& x, const ModelParams& params) {
  return x + params.eta() + params.weight_a_shift();
}

Rat weight_b(const Rat& x, const ModelParams&) { return x; }

Rat weight_c(const ModelParams& params) { return params.eta(); }

namespace {

bool pair_ok(const Rat& x, const Rat& y, const Rat& eta) {
  const Rat d = x - y;
  return !d.is_zero() && d != eta && d != -eta;
}

bool column_ok(const Rat& x, const Rat& mu, const Rat& eta) {
  const Rat d = x - mu;
  return !d.is_zero() && d != -eta;
}

}  // namespace

bool is_generic(const SpectralPoint& point, const ModelParams& params, bool include_lambda0) {
  std::vector<Rat> values = point.lambda;
  if (include_lambda0) {
    if (!point.lambda0) return false;
    values.push_back(*point.lambda0);
  }
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (!pair_ok(values[a], values[b], params.eta())) return false;
    }
    for (const Rat& mu : params.mu()) {
      if (!column_ok(values[a], mu, params.eta())) return false;
    }
  }
  return true;
}

SpectralPoint sample_generic_point(const ModelParams& params, std::uint64_t seed,
                                   bool with_lambda0) {
  // Raw engine output only: std distributions are not portable across
  // standard libraries, and reports must be reproducible.
  std::mt19937_64 engine(seed);
  auto draw = [&] {
    const long num = static_cast<long>(engine() % 81) - 40;
    const long den = static_cast<long>(engine() % 12) + 1;
    return Rat(num, den);
  };
  for (;;) {
    SpectralPoint point;
    for (int k = 0; k < params.L(); ++k) point.lambda.push_back(draw());
    if (with_lambda0) point.lambda0 = draw();
    if (is_generic(point, params, with_lambda0)) return point;
  }
}

namespace {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Rat>> generic_grid(const ModelParams& params, int nodes_per_variable) {
  const int L = params.L();
  for (long q = 17;; ++q) {
    if (!is_prime(q) || q <= L) continue;
    std::vector<std::vector<Rat>> grid(static_cast<std::size_t>(L));
    for (int v = 0; v < L; ++v) {
      for (int k = 0; k < nodes_per_variable; ++k) grid[v].push_back(Rat(k) + Rat(v + 1, q));
    }
    bool ok = true;
    for (int v = 0; v < L && ok; ++v) {
      for (const Rat& x : grid[v]) {
        for (const Rat& mu : params.mu()) ok = ok && column_ok(x, mu, params.eta());
        for (int w = v + 1; w < L && ok; ++w) {
          for (const Rat& y : grid[w]) ok = ok && pair_ok(x, y, params.eta());
        }
      }
    }
    if (ok) return grid;
  }
}

std::vector<Rat> generic_slice_nodes(const SpectralPoint& point, const ModelParams& params,
                                     int var, int count) {
  std::vector<Rat> nodes;
  for (long k = 0; static_cast<int>(nodes.size()) < count; ++k) {
    for (long r = 1; r < 17 && static_cast<int>(nodes.size()) < count; ++r) {
      const Rat x = Rat(k) + Rat(r, 17);
      bool ok = true;
      for (int other = 1; other <= point.size(); ++other) {
        if (other != var) ok = ok && pair_ok(x, point.at(other), params.eta());
      }
      for (const Rat& mu : params.mu()) ok = ok && column_ok(x, mu, params.eta());
      if (point.lambda0) ok = ok && pair_ok(x, *point.lambda0, params.eta());
      if (ok) {
        nodes.push_back(x);
        break;  // one node per integer part keeps the nodes spread out
      }
    }
  }
  return nodes;
}

}  // namespace vertexkz

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vertexkz/rat.hpp"

namespace vertexkz {

/// Anisotropy of the rational weights: a^2 + b^2 - c^2 = 2ab.
inline constexpr int kAnisotropy = 2;

/// Lattice size L, semi-classical parameter eta and inhomogeneities mu_1..mu_L.
/// eta and mu are fixed inputs; nothing in the library varies them.
class ModelParams {
 public:
  /// Throws std::invalid_argument unless L >= 1, eta != 0 and mu has L entries.
  ModelParams(int L, Rat eta, std::vector<Rat> mu);

  /// eta = 1/3, mu_j = j + 1/5.
  static ModelParams defaults(int L);

  /// Skips validation. Only for tests that probe formulas outside the model
  /// domain (e.g. eta = 0).
  static ModelParams unchecked(int L, Rat eta, std::vector<Rat> mu);

  [[nodiscard]] int L() const { return L_; }
  [[nodiscard]] const Rat& eta() const { return eta_; }
  [[nodiscard]] const std::vector<Rat>& mu() const { return mu_; }
  /// 1-based, matching the lattice column index.
  [[nodiscard]] const Rat& mu(int j) const { return mu_.at(static_cast<std::size_t>(j - 1)); }

  /// First `L` inhomogeneities with the same eta.
  [[nodiscard]] ModelParams restricted(int L) const;

  /// Negative-control hook: a(x) becomes x + eta + shift everywhere.
  [[nodiscard]] ModelParams with_corrupted_weight_a(const Rat& shift) const;
  [[nodiscard]] const Rat& weight_a_shift() const { return a_shift_; }

 private:
  ModelParams() = default;
  int L_ = 0;
  Rat eta_;
  std::vector<Rat> mu_;
  Rat a_shift_;
};

/// Values of lambda_1..lambda_L and optionally the auxiliary lambda_0.
struct SpectralPoint {
  std::vector<Rat> lambda;
  std::optional<Rat> lambda0;

  [[nodiscard]] int size() const { return static_cast<int>(lambda.size()); }

  /// Index 0 is lambda0 (must be set), 1..L are the rapidities.
  [[nodiscard]] const Rat& at(int k) const;
  /// Copy with rapidity k (1-based) replaced.
  [[nodiscard]] SpectralPoint with(int k, const Rat& value) const;
  /// Copy with lambda_0 and lambda_k exchanged (k >= 1; lambda0 must be set).
  [[nodiscard]] SpectralPoint swapped_with_lambda0(int k) const;
};

Rat weight_a(const Rat& x, const ModelParams& params);
Rat weight_b(const Rat& x, const ModelParams& params);
Rat weight_c(const ModelParams& params);

/// True iff lambda_i - lambda_j is not in {0, eta, -eta} for i != j, and
/// lambda_i - mu_k is not in {0, -eta}. With include_lambda0 the same
/// conditions cover lambda_0 (which must then be set).
bool is_generic(const SpectralPoint& point, const ModelParams& params, bool include_lambda0);

/// Deterministic pseudo-random generic point; identical seed, identical point.
SpectralPoint sample_generic_point(const ModelParams& params, std::uint64_t seed,
                                   bool with_lambda0 = false);

/// Per-variable interpolation nodes k + (v+1)/q, q the first prime >= 17 that
/// makes every point of the tensor grid generic.
std::vector<std::vector<Rat>> generic_grid(const ModelParams& params, int nodes_per_variable);

/// `count` distinct values for rapidity `var` (1-based) that keep `point`
/// generic when substituted, drawn from k + 1/17, k + 2/17, ... in order.
std::vector<Rat> generic_slice_nodes(const SpectralPoint& point, const ModelParams& params,
                                     int var, int count);

}  // namespace vertexkz

#pragma once

// Test-side reference implementations, independent of the library's
// algorithms. Only Rat and ModelParams are shared.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "vertexkz/matrix.hpp"
#include "vertexkz/model.hpp"
#include "vertexkz/rat.hpp"

namespace testing_oracles {

using vertexkz::ModelParams;
using vertexkz::Rat;

inline Rat random_rat(std::mt19937_64& rng, int num_range = 50, int den_max = 20) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng) {
  Rat r;
  while (r.is_zero()) r = random_rat(rng);
  return r;
}

/// Cofactor expansion along the first row.
inline Rat laplace_det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  if (n == 1) return m[0][0];
  Rat total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Rat term = m[0][col] * laplace_det(minor);
    total = (col % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline std::vector<std::vector<Rat>> rows_of(const vertexkz::RatMatrix& m) {
  std::vector<std::vector<Rat>> rows(m.order(), std::vector<Rat>(m.order()));
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

/// Brute force over every arrow assignment of the internal edges, checking
/// the ice rule vertex by vertex. Rows run top to bottom; top boundary arrows
/// point down, bottom ones up, left ones left, right ones right.
/// With unit_weights the result is the number of configurations.
inline Rat brute_force_Z(const ModelParams& params, const std::vector<Rat>& lambda,
                         bool unit_weights = false) {
  const int L = params.L();
  const int h_internal = L * (L - 1);
  const int bits = 2 * h_internal;
  Rat total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    // h[i][j]: edge west of column j in row i, true = points right.
    // v[r][j]: edge above row r in column j, true = points up.
    std::vector<std::vector<bool>> h(L, std::vector<bool>(L + 1));
    std::vector<std::vector<bool>> v(L + 1, std::vector<bool>(L));
    int bit = 0;
    for (int i = 0; i < L; ++i) {
      h[i][0] = false;
      h[i][L] = true;
      for (int j = 1; j < L; ++j) h[i][j] = (mask >> bit++) & 1U;
    }
    for (int j = 0; j < L; ++j) {
      v[0][j] = false;
      v[L][j] = true;
      for (int r = 1; r < L; ++r) v[r][j] = (mask >> bit++) & 1U;
    }
    Rat weight(1);
    bool ok = true;
    for (int i = 0; i < L && ok; ++i) {
      for (int j = 0; j < L && ok; ++j) {
        const bool west = h[i][j], east = h[i][j + 1];
        const bool north = v[i][j], south = v[i + 1][j];
        const int in = int(west) + int(south);
        const int out = int(east) + int(north);
        if (in != out) {
          ok = false;
          break;
        }
        if (unit_weights) continue;
        const Rat x = lambda[i] - params.mu(j + 1);
        if (west != east) {
          weight *= params.eta();
        } else if (west == south) {
          weight *= x + params.eta();
        } else {
          weight *= x;
        }
      }
    }
    if (ok) total += weight;
  }
  return total;
}

/// Izergin-Korepin determinant for the rational weights:
///   Z = prod_{i,j} a_ij b_ij / (prod_{i<j} (l_i - l_j)(mu_j - mu_i)) * det[c / (a_ij b_ij)]
/// with a_ij = l_i - mu_j + eta, b_ij = l_i - mu_j.
inline Rat izergin_korepin_Z(const ModelParams& params, const std::vector<Rat>& lambda) {
  const int L = params.L();
  Rat prefactor(1);
  std::vector<std::vector<Rat>> m(L, std::vector<Rat>(L));
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const Rat x = lambda[i] - params.mu(j + 1);
      const Rat ab = (x + params.eta()) * x;
      prefactor *= ab;
      m[i][j] = params.eta() / ab;
    }
  }
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      prefactor /= (lambda[i] - lambda[j]) * (params.mu(j + 1) - params.mu(i + 1));
    }
  }
  return prefactor * laplace_det(m);
}

/// Alternating sign matrices of order n, counted row by row over column
/// partial sums (each partial sum is 0 or 1).
inline std::uint64_t count_asm(int n) {
  std::uint64_t count = 0;
  std::vector<int> partial(n, 0);
  std::function<void(int)> next_row;
  std::function<void(int, int, int)> fill;
  next_row = [&](int r) {
    if (r == n) {
      for (int p : partial) {
        if (p != 1) return;
      }
      ++count;
      return;
    }
    fill(r, 0, 0);
  };
  // running: sum of row entries so far (0 or 1).
  fill = [&](int r, int col, int running) {
    if (col == n) {
      if (running == 1) next_row(r + 1);
      return;
    }
    for (int value : {-1, 0, 1}) {
      const int s = running + value;
      const int p = partial[col] + value;
      if (s < 0 || s > 1 || p < 0 || p > 1) continue;
      partial[col] = p;
      fill(r, col + 1, s);
      partial[col] -= value;
    }
  };
  next_row(0);
  return count;
}

}  // namespace testing_oracles

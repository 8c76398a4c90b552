#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vertexkz/rat.hpp"

namespace vertexkz {

/// Dense square matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t order) : order_(order), entries_(order * order) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t order);

  [[nodiscard]] std::size_t order() const { return order_; }
  Rat& at(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
  [[nodiscard]] const Rat& at(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

  [[nodiscard]] std::vector<Rat> column(std::size_t col) const;
  /// Copy with column `col` overwritten by `values`.
  [[nodiscard]] RatMatrix with_column(std::size_t col, std::span<const Rat> values) const;
  [[nodiscard]] RatMatrix with_rows_swapped(std::size_t a, std::size_t b) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Rat> entries_;
};

/// Exact determinant by Gaussian elimination over Q, pivoting on the first
/// nonzero entry of each column. Singular matrices give exactly 0; the empty
/// (order 0) matrix gives 1.
Rat determinant(const RatMatrix& m);

}  // namespace vertexkz

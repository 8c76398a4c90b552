#include "vertexkz/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace vertexkz {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : RatMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) throw std::invalid_argument("RatMatrix: rows must be square");
    std::size_t c = 0;
    for (const auto& value : row) at(r, c++) = value;
    ++r;
  }
}

RatMatrix RatMatrix::identity(std::size_t order) {
  RatMatrix m(order);
  for (std::size_t k = 0; k < order; ++k) m.at(k, k) = Rat(1);
  return m;
}

std::vector<Rat> RatMatrix::column(std::size_t col) const {
  std::vector<Rat> out(order_);
  for (std::size_t r = 0; r < order_; ++r) out[r] = at(r, col);
  return out;
}

RatMatrix RatMatrix::with_column(std::size_t col, std::span<const Rat> values) const {
  if (values.size() != order_ || col >= order_) {
    throw std::invalid_argument("RatMatrix::with_column: shape mismatch");
  }
  RatMatrix out = *this;
  for (std::size_t r = 0; r < order_; ++r) out.at(r, col) = values[r];
  return out;
}

RatMatrix RatMatrix::with_rows_swapped(std::size_t a, std::size_t b) const {
  RatMatrix out = *this;
  for (std::size_t c = 0; c < order_; ++c) std::swap(out.at(a, c), out.at(b, c));
  return out;
}

Rat determinant(const RatMatrix& m) {
  const std::size_t n = m.order();
  RatMatrix work = m;
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      det = -det;
    }
    const Rat& p = work.at(col, col);
    det *= p;
    const Rat inv = p.inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col).is_zero()) continue;
      const Rat factor = work.at(r, col) * inv;
      for (std::size_t c = col + 1; c < n; ++c) work.at(r, c) -= factor * work.at(col, c);
    }
  }
  return det;
}

}  // namespace vertexkz

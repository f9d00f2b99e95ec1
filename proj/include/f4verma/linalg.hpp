#pragma once

#include "f4verma/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace f4verma {

/// Solves mat * x = rhs exactly by Gaussian elimination with rational
/// pivots. T must support T += T, T -= T, T * Rational (weights use this
/// with both Rational and LinForm right-hand sides). Throws on singular
/// matrices.
template <class T>
std::vector<T> solve_linear(std::vector<std::vector<Rational>> mat, std::vector<T> rhs) {
  const size_t n = mat.size();
  if (rhs.size() != n)
    throw std::invalid_argument("solve_linear: size mismatch");
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && mat[pivot][col].is_zero())
      ++pivot;
    if (pivot == n)
      throw std::invalid_argument("solve_linear: singular matrix");
    std::swap(mat[pivot], mat[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = Rational(1) / mat[col][col];
    for (size_t k = col; k < n; ++k)
      mat[col][k] *= inv;
    rhs[col] = rhs[col] * inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || mat[row][col].is_zero())
        continue;
      const Rational f = mat[row][col];
      for (size_t k = col; k < n; ++k)
        mat[row][k] -= f * mat[col][k];
      rhs[row] -= rhs[col] * f;
    }
  }
  return rhs;
}

} // namespace f4verma

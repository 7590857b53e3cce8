#include "degplus/matrix.hpp"

#include <utility>

namespace degplus {

namespace {

// Reduces m in place to row echelon form; returns the rank and the sign of
// the row permutation applied.
std::pair<std::size_t, int> eliminate(Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t r = 0;
  int perm_sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      perm_sign = -perm_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return {r, perm_sign};
}

}  // namespace

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  const auto [r, perm_sign] = eliminate(m);
  if (r < n) return 0;
  Rational det = perm_sign;
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

std::size_t rank(Matrix m) { return eliminate(m).first; }

}  // namespace degplus

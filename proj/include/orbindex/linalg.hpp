#pragma once

#include <vector>

namespace orbindex {

// Rank of a dense matrix over an exact field by Gaussian elimination.
// F needs is_zero(f), operator-, *, /, and copy semantics.
template <class F>
unsigned matrix_rank(std::vector<std::vector<F>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  unsigned rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rank;
    while (sel < rows && is_zero(m[sel][col])) ++sel;
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    F pivot = m[rank][col];
    for (size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] / pivot;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(m[r][col])) continue;
      F f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace orbindex

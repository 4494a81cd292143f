#include "qaoadla/linalg.hpp"

#include <stdexcept>

namespace qaoadla {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// surviving row (ascending).
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  for (const auto& row : m)
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    std::size_t sel = m.size();
    for (std::size_t i = r; i < m.size(); ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Rat inv = m[r][col];
    for (std::size_t c = col; c < ncols; ++c) m[r][c] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t c = col; c < ncols; ++c) m[i][c] -= f * m[r][c];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> rat_nullspace(RatMatrix m, std::size_t ncols) {
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rat_rank(RatMatrix m, std::size_t ncols) {
  return rref(m, ncols).size();
}

}  // namespace qaoadla

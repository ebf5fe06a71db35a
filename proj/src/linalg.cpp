#include "slc/linalg.hpp"

namespace slc {

namespace {

// Reduces `m` to row echelon form in place and returns the pivot columns.
std::vector<std::size_t> echelon(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Scalar inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return echelon(m, m.front().size()).size();
}

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
  if (a.size() != b.size()) return std::nullopt;
  std::size_t ncols = a.empty() ? 0 : a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = echelon(a, ncols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (!a[r][ncols].is_zero()) return std::nullopt;
  std::vector<Scalar> x(ncols, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
  return x;
}

}  // namespace slc

#include "domfan/linalg.hpp"

#include <utility>

#include "domfan/error.hpp"

namespace domfan::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Matrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m = vectors;
  return rref(m, m.front().size()).size();
}

std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns,
                                            const RationalVector& target) {
  const size_t n = target.size();
  const size_t k = columns.size();
  // Augmented system: n equations, k unknowns.
  Matrix m(n, RationalVector(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (columns[j].size() != n) throw InvalidArgument("dimension mismatch in solve_in_span");
      m[i][j] = columns[j][i];
    }
    m[i][k] = target[i];
  }
  auto pivots = rref(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw InvalidArgument("solve_in_span: columns are linearly dependent");
  RationalVector coeffs(k);
  for (size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = m[r][k];
  return coeffs;
}

std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, size_t dim) {
  Matrix m = rows;
  auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(dim);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer determinant(const std::vector<std::vector<Integer>>& input) {
  auto m = input;
  const size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int flips = 0;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[sel], m[k]);
      ++flips;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return flips % 2 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace domfan::linalg

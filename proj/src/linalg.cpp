#include "linf/linalg.hpp"

#include <stdexcept>

namespace linf {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, int cols) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Q inv = Q(1) / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Q>> solve_linear(const Matrix& a, const std::vector<Q>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  Matrix m = a;
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto piv = rref(m, cols);
  for (size_t i = piv.size(); i < m.size(); ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<Q> x(cols, Q(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][cols];
  return x;
}

Matrix nullspace(const Matrix& a, int cols) {
  Matrix m = a;
  auto piv = rref(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  Matrix out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Q> v(cols, Q(0));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

int rank(Matrix a) {
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  return static_cast<int>(rref(a, cols).size());
}

std::optional<Matrix> inverse(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix m = a;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw std::invalid_argument("inverse: matrix not square");
    for (int j = 0; j < n; ++j) m[i].push_back(i == j ? Q(1) : Q(0));
  }
  auto piv = rref(m, n);
  if (static_cast<int>(piv.size()) < n) return std::nullopt;
  Matrix out(n);
  for (int i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  size_t inner = b.size();
  size_t cols = inner ? b[0].size() : 0;
  Matrix out(a.size(), std::vector<Q>(cols, Q(0)));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: shape mismatch");
    for (size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace linf

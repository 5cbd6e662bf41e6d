#include "h8mp/linalg.hpp"

namespace h8mp {

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<FieldElement>(n));
  for (int i = 0; i < n; ++i) m[i][i] = FieldElement::one();
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  Matrix r(n, std::vector<FieldElement>(m));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

std::vector<FieldElement> mat_vec(const Matrix& a, const std::vector<FieldElement>& x) {
  int n = static_cast<int>(a.size());
  std::vector<FieldElement> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < static_cast<int>(x.size()); ++j) {
      if (a[i][j].is_zero() || x[j].is_zero()) continue;
      r[i] += a[i][j] * x[j];
    }
  return r;
}

std::optional<Matrix> mat_inverse(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix m = a;
  Matrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    FieldElement p = m[col][col].inv();
    for (int j = 0; j < n; ++j) {
      m[col][j] *= p;
      inv[col][j] *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      FieldElement f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int mat_rank(Matrix m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    FieldElement p = m[rank][col].inv();
    for (int j = col; j < cols; ++j) m[rank][j] *= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      FieldElement f = m[r][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace h8mp

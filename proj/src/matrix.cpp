#include "hypersig/matrix.hpp"

#include <utility>

namespace hypersig {

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> pivot_columns(const RatMatrix& m) {
  RatMatrix work = m;
  return rref(work);
}

std::size_t rank_rational(const RatMatrix& m) {
  RatMatrix work = m;
  return rref(work).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix work = m;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> common_kernel(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw InputError("common_kernel: matrices must be square of equal size");
  RatMatrix stacked(2 * a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      stacked(i, j) = a(i, j);
      stacked(a.rows() + i, j) = b(i, j);
    }
  return kernel_basis(stacked);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("determinant: non-square matrix");
  RatMatrix w = m;
  const std::size_t n = w.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(col, j));
      det = -det;
    }
    det *= w(col, col);
    Rational inv = 1 / w(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (w(i, col) == 0) continue;
      Rational f = w(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("inverse: non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw SingularMatrixError("matrix is singular");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<Rational> characteristic_coefficients(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial: non-square matrix");
  const std::size_t n = m.rows();
  // Similarity reduction to upper Hessenberg form, then the standard
  // three-term recurrence on leading principal minors.
  RatMatrix h = m;
  for (std::size_t col = 0; col + 2 <= n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
    }
    Rational inv = 1 / h(col + 1, col);
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h(i, col) == 0) continue;
      Rational f = h(i, col) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(col + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) += f * h(r, i);
    }
  }
  // p[k] = char poly of leading k x k block, coefficients lowest first.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t i = k - 1;
    std::vector<Rational> next(k + 1);
    // (t - h_ii) p[k-1]
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(i, i) * p[k - 1][d];
    }
    Rational prod = 1;
    for (std::size_t j = i; j-- > 0;) {
      prod *= h(j + 1, j);
      if (prod == 0) break;
      Rational c = prod * h(j, i);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[j].size(); ++d) next[d] -= c * p[j][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

}  // namespace hypersig

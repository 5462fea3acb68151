#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hypersig/errors.hpp"
#include "hypersig/rational.hpp"

namespace hypersig {

/// Row-major dense matrix over an exact ring. Empty (0x0) matrices are valid.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  DenseMatrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const T& s) { return a *= s; }
  friend DenseMatrix operator*(const T& s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= T(-1); }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  void check_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = DenseMatrix<Rational>;
using RatVector = std::vector<Rational>;

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// Exact rank over Q.
std::size_t rank_rational(const RatMatrix& m);

/// Pivot columns of the reduced row echelon form.
std::vector<std::size_t> pivot_columns(const RatMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column of the
/// reduced row echelon form.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Basis of ker a ∩ ker b for square a, b of equal size.
std::vector<RatVector> common_kernel(const RatMatrix& a, const RatMatrix& b);

Rational determinant(const RatMatrix& m);

/// Throws SingularMatrixError when m is not invertible.
RatMatrix inverse(const RatMatrix& m);

/// Characteristic polynomial coefficients det(t·I − m), lowest degree first.
std::vector<Rational> characteristic_coefficients(const RatMatrix& m);

}  // namespace hypersig

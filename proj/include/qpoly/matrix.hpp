#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpoly/errors.hpp"
#include "qpoly/quaternion.hpp"

namespace qpoly {

/// Dense row-major matrix. T is Quaternion or Complex.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_{rows}, cols_{cols}, data_{std::move(entries)} {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("matrix entry count does not match its shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      m(r, r) = T{1.0};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> entries() const { return data_; }
  std::span<T> entries() { return data_; }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QuaternionMatrix = Matrix<Quaternion>;
using ComplexMatrix = Matrix<Complex>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& lhs = a(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c)
        out(r, c) += lhs * b(k, c);
    }
  return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference shape mismatch");
  Matrix<T> out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] -= src[i];
  return out;
}

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

/// y = m x
std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> x);

double norm2(std::span<const Complex> v);

}  // namespace qpoly

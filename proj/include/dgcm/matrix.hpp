#pragma once

#include <cstddef>
#include <vector>

#include "dgcm/errors.hpp"
#include "dgcm/gamma_ring.hpp"

namespace dgcm {

// Dense row-major matrix over a ring-like value type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<Poly>;

inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b,
                           std::optional<int> trunc = std::nullopt) {
  if (a.cols() != b.rows()) throw InternalError("matrix shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += poly_mul(a(i, k), b(k, j), trunc);
      }
    }
  }
  return out;
}

inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return multiply(a, b); }

}  // namespace dgcm

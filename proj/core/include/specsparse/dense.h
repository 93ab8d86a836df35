#pragma once

// Small dense symmetric linear algebra used by the verification oracles.
// Householder tridiagonalisation followed by implicit QL; no external
// LAPACK dependency.

#include <cstddef>
#include <span>
#include <vector>

namespace specsparse {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k is the eigenvector of values[k]
};

// Full eigendecomposition of a symmetric matrix (only the lower triangle is
// read). Throws std::runtime_error if QL fails to converge.
SymmetricEigen symmetric_eigen(const DenseMatrix& a, bool want_vectors = true);

// Lower-triangular L with A = L L^T. Throws std::domain_error when A is not
// numerically positive definite.
DenseMatrix cholesky(const DenseMatrix& a);

// Eigenvalues (ascending) of the pencil A x = mu B x for symmetric A and
// symmetric positive definite B.
std::vector<double> generalized_eigenvalues(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace specsparse

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace entlab {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Small orders only (<= a few hundred);
// everything here is O(n^3) with no blocking.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(cplx s) const;

  Mat dagger() const;
  Mat transpose() const;
  Mat conjugate() const;
  cplx trace() const;
  double max_abs() const;           // entrywise max modulus
  double frobenius_norm() const;
  bool is_hermitian(double tol = 1e-8) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

// Kronecker product, left factor most significant in the row-major indexing.
Mat kron(const Mat& a, const Mat& b);

bool is_unitary(const Mat& m, double tol = 1e-9);

// Eigenvalues of a Hermitian matrix, descending. Throws std::invalid_argument
// if the input fails the Hermiticity tolerance.
std::vector<double> hermitian_eigenvalues(const Mat& m, double herm_tol = 1e-8);

struct EigenSystem {
  std::vector<double> values;  // descending
  Mat vectors;                 // column k is the eigenvector of values[k]
};

EigenSystem hermitian_eigensystem(const Mat& m, double herm_tol = 1e-8);

// Completes a set of orthonormal rows to a full dim x dim unitary by
// Gram-Schmidt against the standard basis, in index order (deterministic).
// The given rows are re-orthonormalized first; throws if they are dependent.
Mat complete_to_unitary(const std::vector<std::vector<cplx>>& rows,
                        std::size_t dim);

}  // namespace entlab

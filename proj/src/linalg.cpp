#include "entlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entlab {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat+: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat-: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

Mat Mat::operator*(cplx s) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::dagger() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::conjugate() const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
  return r;
}

cplx Mat::trace() const {
  cplx t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Mat::max_abs() const {
  double m = 0;
  for (const cplx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Mat::frobenius_norm() const {
  double s = 0;
  for (const cplx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

bool Mat::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
        return false;
  return true;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Mat d = m.dagger() * m - Mat::identity(m.rows());
  return d.max_abs() < tol;
}

namespace {

double off_diagonal_norm(const Mat& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair via the
// phase-absorbed real symmetric Schur rotation.
EigenSystem jacobi(Mat a, bool want_vectors) {
  const std::size_t n = a.rows();
  Mat q = Mat::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) < 1e-12) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        const cplx beta = a(p, r);
        const double ab = std::abs(beta);
        if (ab < 1e-300) continue;
        const cplx phase = beta / ab;  // e^{i phi}
        const double alpha = a(p, p).real(), gamma = a(r, r).real();
        const double tau = (gamma - alpha) / (2 * ab);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t), s = t * c;
        // V = [[c, s],[-s e^{-i phi}, c e^{-i phi}]] on columns (p,r)
        const cplx vpp = c, vpr = s;
        const cplx vrp = -s * std::conj(phase), vrr = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {  // A <- A V, Q <- Q V
          const cplx akp = a(k, p), akr = a(k, r);
          a(k, p) = akp * vpp + akr * vrp;
          a(k, r) = akp * vpr + akr * vrr;
          if (want_vectors) {
            const cplx qkp = q(k, p), qkr = q(k, r);
            q(k, p) = qkp * vpp + qkr * vrp;
            q(k, r) = qkp * vpr + qkr * vrr;
          }
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- V^dag A
          const cplx apk = a(p, k), ark = a(r, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vrp) * ark;
          a(r, k) = std::conj(vpr) * apk + std::conj(vrr) * ark;
        }
      }
  }
  EigenSystem es;
  es.values.resize(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });
  es.vectors = Mat(n, want_vectors ? n : 0);
  if (want_vectors) es.vectors = Mat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = diag[order[k]];
    if (want_vectors)
      for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = q(i, order[k]);
  }
  return es;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Mat& m, double herm_tol) {
  if (!m.is_hermitian(herm_tol))
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  return jacobi(m, false).values;
}

EigenSystem hermitian_eigensystem(const Mat& m, double herm_tol) {
  if (!m.is_hermitian(herm_tol))
    throw std::invalid_argument("hermitian_eigensystem: input not Hermitian");
  return jacobi(m, true);
}

Mat complete_to_unitary(const std::vector<std::vector<cplx>>& rows,
                        std::size_t dim) {
  std::vector<std::vector<cplx>> basis;
  auto project_out = [&](std::vector<cplx>& v) {
    for (const auto& b : basis) {
      cplx ip = 0;
      for (std::size_t i = 0; i < dim; ++i) ip += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= ip * b[i];
    }
  };
  auto norm_of = [&](const std::vector<cplx>& v) {
    double s = 0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
  };
  for (auto v : rows) {
    if (v.size() != dim)
      throw std::invalid_argument("complete_to_unitary: row length mismatch");
    project_out(v);
    project_out(v);  // re-orthogonalization for numerical safety
    const double nv = norm_of(v);
    if (nv < 1e-8)
      throw std::invalid_argument("complete_to_unitary: dependent rows");
    for (cplx& x : v) x /= nv;
    basis.push_back(std::move(v));
  }
  for (std::size_t e = 0; e < dim && basis.size() < dim; ++e) {
    std::vector<cplx> v(dim);
    v[e] = 1.0;
    project_out(v);
    project_out(v);
    const double nv = norm_of(v);
    if (nv < 1e-8) continue;
    for (cplx& x : v) x /= nv;
    basis.push_back(std::move(v));
  }
  if (basis.size() != dim)
    throw std::runtime_error("complete_to_unitary: completion failed");
  Mat u(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) u(i, j) = basis[i][j];
  return u;
}

}  // namespace entlab

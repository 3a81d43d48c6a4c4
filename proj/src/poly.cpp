#include "entlab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entlab {

cplx Poly::eval(cplx z) const {
  cplx r = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * z + coeffs[k];
  return r;
}

int Poly::degree(double tol) const {
  for (std::size_t k = coeffs.size(); k-- > 0;)
    if (std::abs(coeffs[k]) > tol) return static_cast<int>(k);
  return -1;
}

std::vector<cplx> poly_roots(const Poly& p) {
  double scale = 0;
  for (const cplx& c : p.coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0) throw std::invalid_argument("poly_roots: zero polynomial");
  const int deg = p.degree(scale * 1e-12);
  if (deg < 0) throw std::invalid_argument("poly_roots: zero polynomial");
  if (deg == 0) return {};
  std::vector<cplx> c(p.coeffs.begin(), p.coeffs.begin() + deg + 1);
  for (cplx& x : c) x /= c[deg];  // monic

  // Cauchy bound keeps the start iterates inside a disk containing all roots.
  double bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(c[k]));
  bound += 1.0;
  std::vector<cplx> z(deg);
  const cplx seed(0.4, 0.9);  // standard non-real seed ratio
  cplx w = 1.0;
  for (int k = 0; k < deg; ++k) {
    w *= seed;
    z[k] = w * bound;
  }
  Poly monic{c};
  for (int iter = 0; iter < 1000; ++iter) {
    double shift = 0;
    for (int i = 0; i < deg; ++i) {
      cplx denom = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == cplx{}) denom = 1e-30;
      const cplx d = monic.eval(z[i]) / denom;
      z[i] -= d;
      shift = std::max(shift, std::abs(d));
    }
    if (shift < 1e-14 * std::max(1.0, bound)) break;
  }
  return z;
}

ProjectiveRoots poly_roots_projective(const Poly& p, int declared_degree) {
  ProjectiveRoots out;
  double scale = 0;
  for (const cplx& c : p.coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0) {
    out.identically_zero = true;
    return out;
  }
  const int deg = p.degree(scale * 1e-10);
  if (deg > declared_degree)
    throw std::invalid_argument("poly_roots_projective: degree overflow");
  Poly trimmed{std::vector<cplx>(p.coeffs.begin(), p.coeffs.begin() + deg + 1)};
  out.finite = deg > 0 ? poly_roots(trimmed) : std::vector<cplx>{};
  out.at_infinity = declared_degree - deg;
  return out;
}

Poly interpolate(const std::vector<cplx>& xs, const std::vector<cplx>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n || n == 0)
    throw std::invalid_argument("interpolate: sample mismatch");
  // Vandermonde system V a = y with V[i][k] = xs[i]^k.
  std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    cplx pw = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      m[i][k] = pw;
      pw *= xs[i];
    }
    m[i][n] = ys[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-14)
      throw std::invalid_argument("interpolate: repeated sample points");
    std::swap(m[col], m[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = m[r][col] / m[col][col];
      if (f == cplx{}) continue;
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  Poly p;
  p.coeffs.resize(n);
  for (std::size_t k = 0; k < n; ++k) p.coeffs[k] = m[k][n] / m[k][k];
  return p;
}

}  // namespace entlab

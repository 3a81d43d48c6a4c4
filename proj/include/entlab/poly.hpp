#pragma once

#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

// Univariate polynomial with complex coefficients, coeffs[k] multiplying z^k.
struct Poly {
  std::vector<cplx> coeffs;

  cplx eval(cplx z) const;
  int degree(double tol = 0.0) const;  // index of last coeff with |c| > tol
};

// All complex roots of a polynomial by Durand-Kerner iteration. The
// coefficient vector is trimmed of (relatively) vanishing leading terms first.
// Degenerate (identically zero) input throws std::invalid_argument.
std::vector<cplx> poly_roots(const Poly& p);

// Roots of a polynomial regarded as degree `declared_degree` on the Riemann
// sphere: leading-coefficient collapse turns into roots at infinity.
struct ProjectiveRoots {
  std::vector<cplx> finite;
  int at_infinity = 0;
  bool identically_zero = false;  // every z is a root
};
ProjectiveRoots poly_roots_projective(const Poly& p, int declared_degree);

// Interpolating polynomial of degree <= n-1 through n (x, y) samples,
// via Vandermonde solve with partial pivoting. Sample xs must be distinct.
Poly interpolate(const std::vector<cplx>& xs, const std::vector<cplx>& ys);

}  // namespace entlab

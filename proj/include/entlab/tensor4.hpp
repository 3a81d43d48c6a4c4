#pragma once

#include <string>
#include <vector>

#include "entlab/linalg.hpp"
#include "entlab/state.hpp"

namespace entlab {

// Complex tensor with four legs of equal local dimension, stored densely.
// Accessors are 1-based to match the usual T_{ijkl} index conventions.
struct FourIndexTensor {
  int d = 0;
  std::vector<cplx> data;  // layout (((i-1)d + (j-1))d + (k-1))d + (l-1)

  explicit FourIndexTensor(int dim);
  cplx& at(int i, int j, int k, int l);
  const cplx& at(int i, int j, int k, int l) const;
};

// Which pair of legs labels the rows of a flattening. Rows always combine
// index i with one other leg; columns take the remaining two in index order.
enum class Pairing { ij_kl, ik_jl, il_jk };

// d^2 x d^2 matrix of the tensor. Row/column composition is big-endian:
// for ij_kl, row p = d(i-1)+(j-1) and column s = d(k-1)+(l-1).
Mat flatten(const FourIndexTensor& t, Pairing p);

// Inverse of flatten for the same pairing; m must be d^2 x d^2.
FourIndexTensor tensor_from_flat(const Mat& m, Pairing p);

// u viewed as a four-leg tensor stays unitary under all three pairings.
bool is_2unitary(const Mat& u, double tol = 1e-9);

// All three flattenings of t are unitary.
bool is_perfect(const FourIndexTensor& t, double tol = 1e-9);

// The four-party pure state with amplitudes T_{ijkl} / d.
PureState state_from_tensor(const FourIndexTensor& t);

// Tensor with entries d * amplitude; psi must have four sites of equal d.
FourIndexTensor tensor_from_state(const PureState& psi);

// Amplitudes of psi equal T/d entrywise within tol. Throws on shape mismatch.
bool verify_tensor_state_consistency(const FourIndexTensor& t,
                                     const PureState& psi, double tol = 1e-9);

// The algebraic constants of the six-level perfect tensor: a = (5+sqrt 5)^-1/2,
// b = ((5+sqrt 5)/20)^1/2, c = 2^-1/2, omega = exp(i pi/10). They satisfy
// a^2 + b^2 = c^2 = 1/2 and b/a equals the golden ratio.
struct GoldenConstants {
  double a;
  double b;
  double c;
  cplx omega;
};
GoldenConstants golden_constants();

// One row-orthogonality identity in the constants above; value should vanish.
struct RelationCheck {
  std::string label;
  cplx value;
};

// The nine row-orthogonality identities behind the 2-unitarity of the
// six-level tensor, evaluated numerically.
std::vector<RelationCheck> verify_orthogonality_relations();

// Loads "i,j,k,l,coeff,omega_power" lines (1-based indices; coeff is one of
// the symbols a, b, c or a literal real; entry = coeff * omega^power with
// omega = exp(i pi/10)). Comment lines start with '#'; a column-header line
// is skipped. The dimension is the largest index seen unless d > 0 forces it.
FourIndexTensor tensor_from_csv(const std::string& path, int d = 0);

// Every entry has modulus d^-1/2 and, rescaled by sqrt(d), is a q-th root of
// unity; the matrix itself is unitary.
bool is_butson(const Mat& m, int q, double tol = 1e-9);

}  // namespace entlab

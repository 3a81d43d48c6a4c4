#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entlab/linalg.hpp"
#include "entlab/states.hpp"

namespace entlab {

// Point on the extended complex plane, stored as a projective pair
// (alpha : beta) with value alpha/beta and infinity when beta = 0.
// Normalized so that max(|alpha|, |beta|) = 1.
struct ExtendedComplex {
  cplx alpha{0.0, 0.0};
  cplx beta{1.0, 0.0};

  ExtendedComplex() = default;
  ExtendedComplex(cplx value);  // finite point; implicit on purpose
  static ExtendedComplex infinity();
  // Normalizes (a : b); throws std::invalid_argument when both are ~0.
  static ExtendedComplex projective(cplx a, cplx b);

  bool is_infinity() const { return std::abs(beta) < 1e-13; }
  cplx value() const;  // throws std::domain_error at infinity
};

// Distance on the Riemann sphere: 2|a1 b2 - a2 b1| / (|z1| |z2|) with
// |z| = sqrt(|alpha|^2 + |beta|^2); range [0, 2], infinity handled natively.
double chordal_distance(const ExtendedComplex& x, const ExtendedComplex& y);

// z -> (a z + b)/(c z + d) with the matrix scaled to det = 1. The two
// determinant-1 lifts +-M describe the same map; `sign` records which lift
// was chosen relative to the canonical (first nonzero entry in the right
// half-plane) representative.
struct MobiusTransform {
  cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};
  int sign = 1;
};

// Scales the coefficients to det = 1; throws when the det is ~0.
MobiusTransform mobius_normalize(cplx a, cplx b, cplx c, cplx d);
MobiusTransform mobius_identity();
MobiusTransform mobius_compose(const MobiusTransform& f,
                               const MobiusTransform& g);  // f after g
MobiusTransform mobius_inverse(const MobiusTransform& m);
ExtendedComplex apply_mobius(const MobiusTransform& m, const ExtendedComplex& z);

// The unique transform with src[i] -> dst[i]; triplets must be pairwise
// distinct (throws std::invalid_argument on repeats).
MobiusTransform mobius_from_triplets(const std::array<ExtendedComplex, 3>& src,
                                     const std::array<ExtendedComplex, 3>& dst);

// (z3-z1)(z4-z2) / ((z3-z2)(z4-z1)); finite and != 0,1 for pairwise-distinct
// points. Throws std::invalid_argument on a degenerate configuration.
cplx cross_ratio(const ExtendedComplex& z1, const ExtendedComplex& z2,
                 const ExtendedComplex& z3, const ExtendedComplex& z4);

// Orbit of the cross-ratio under reorderings of the four points:
// {l, 1/l, 1-l, 1/(1-l), (l-1)/l, l/(l-1)}, deduplicated within 1e-12.
std::vector<cplx> six_values(cplx lambda);

// Polynomial invariants whose roots drive the equivalence machinery.
enum class SlipMeasure { concurrence2, three_tangle };

// Homogeneity degree: 2 for concurrence2, 4 for three_tangle.
int slip_degree(SlipMeasure m);
std::string slip_name(SlipMeasure m);
SlipMeasure slip_from_name(const std::string& name);

// Roots of one invariant polynomial for one split site. `roots` lists h
// entries (repeats encode multiplicity); members within clustering tolerance
// are stored as identical representatives.
struct RootSystem {
  int site = 0;
  std::string measure;
  int degree = 0;
  std::vector<ExtendedComplex> roots;
};

// Distinct members of rs.roots under the chordal metric (tolerance tol).
std::vector<ExtendedComplex> distinct_roots(const RootSystem& rs,
                                            double tol = 1e-6);

// Multisets equal under the chordal metric, best assignment within tol.
bool roots_match(const std::vector<ExtendedComplex>& a,
                 const std::vector<ExtendedComplex>& b, double tol = 1e-8);

// psi = |0>_site psi0 + |1>_site psi1, the split site removed from both
// halves (remaining sites keep their order). The halves are deliberately not
// normalized. Throws std::invalid_argument on a non-qubit site.
std::pair<PureState, PureState> split_state(const PureState& psi, int site);

// Roots in z of the invariant evaluated on z psi0 + psi1. Coefficients come
// from exact interpolation at z in {0, +-1, +-i, 2}; vanishing leading
// coefficients become roots at infinity. Throws std::domain_error when the
// polynomial vanishes identically (every z is a root).
RootSystem slip_roots(const PureState& psi, int site, SlipMeasure measure);

// One determinant-one matrix per site.
struct LocalOperator {
  std::vector<Mat> factors;
};

// factors[i] applied to site i+1.
PureState apply_local(const LocalOperator& op, const PureState& psi);

// The 24 rotations generated by R_x(pi/2), R_y(pi/2), R_z(pi/2) modulo global
// phase, each returned as a determinant-one 2x2 matrix.
std::vector<Mat> g24_group();

// Forward map z -> (az+b)/(cz+d) of a 2x2 operator (how sphere points and
// spin-coherent states move).
MobiusTransform mobius_of_operator(const Mat& o);

// How invariant roots move under the operator: the forward map of o^{-1},
// zeta -> (d zeta - b)/(-c zeta + a).
MobiusTransform root_map_of_operator(const Mat& o);

// The 2x2 operator whose induced root map equals m (inverse correspondence
// of root_map_of_operator); determinant one, sign ambiguity kept in m.sign.
Mat operator_from_mobius(const MobiusTransform& m);

// Transform T sending the four pairwise-distinct points onto the normal
// system {z0, 1/z0, -z0, -1/z0}, plus the z0 solving 4 z^2/(1+z^2)^2 = lambda
// (quadratic in z^2). T is unique up to the 24 rotations of g24_group().
std::pair<MobiusTransform, cplx> normal_form_transform(
    const std::array<ExtendedComplex, 4>& pts);

// Finite SLOCC test: per site, every Mobius map matching an ordered triplet
// of distinct roots of a onto one of b lifts to a candidate site operator;
// all cross-site combinations are tested for psiB ~ O psiA (proportionality
// anchored at the largest amplitude, tolerance 1e-8). Returns a witnessing
// operator, or nullopt when no combination works. Throws std::domain_error
// when either state has fewer than 3 distinct roots at some site (the
// procedure is inapplicable, which is different from "not equivalent").
std::optional<LocalOperator> slocc_discriminate(const PureState& psiA,
                                                const PureState& psiB,
                                                SlipMeasure measure);

// Roots of A z^4 - 2(2B + A) z^2 + A with A = (b^2-c^2)(a^2-d^2) and
// B = (c^2-d^2)(a^2-b^2): a normal system {zeta, 1/zeta, -zeta, -1/zeta}.
// Throws std::invalid_argument when A, B, or A+2B vanishes (degenerate).
RootSystem gabcd_roots(const GabcdParams& p);

// All parameter tuples reachable by permutations of (a,b,c,d) combined with
// sign flips on exactly two or all four entries: 192 tuples for generic
// parameters.
std::vector<GabcdParams> gabcd_orbit(const GabcdParams& p);

// Membership in gabcd_orbit(p) up to a global phase on the tuple.
bool gabcd_orbit_contains(const GabcdParams& p, const GabcdParams& q,
                          double tol = 1e-9);

// Search for a local monomial operator (per-site permutation x diagonal,
// scaled to determinant one) with psiB ~ O psiA. Complete over all per-site
// symbol permutations matching the supports and all phase solutions of the
// induced multiplicative system. Returns nullopt when supports cannot be
// matched or no phase assignment exists. Intended for k-uniform states of
// minimal support. Throws std::invalid_argument when shapes differ.
std::optional<LocalOperator> lm_equivalence(const PureState& psiA,
                                            const PureState& psiB);

}  // namespace entlab

#pragma once

#include <optional>
#include <vector>

#include "entlab/hypergraph.hpp"
#include "entlab/oa.hpp"
#include "entlab/state.hpp"

namespace entlab {

// |GHZ(n,d)> = (1/sqrt(d)) sum_i |i...i>, n >= 2 sites, d >= 2 levels.
PureState ghz(int n, int d);

// |W(n)> = dicke(n, 1).
PureState w(int n);

// Uniform superposition of all n-qubit basis states with k ones.
PureState dicke(int n, int k);

// One point on the Bloch sphere: |eta> = cos(theta/2)|0> + e^{i phi}
// sin(theta/2)|1>.
struct MajoranaStar {
  double theta = 0.0;  // polar angle, [0, pi]
  double phi = 0.0;    // azimuth, [0, 2pi)
};

using MajoranaConstellation = std::vector<MajoranaStar>;

// Symmetric N-qubit state sum_{sigma in S_N} |eta_{sigma(1)}> ... , normalized
// numerically. Throws std::domain_error if every amplitude cancels.
PureState majorana_state(const MajoranaConstellation& stars);

// (sqrt(C(n,m)) |0...0> + |n-m ones, m zeros Dicke>) / sqrt(1 + C(n,m)).
// Same constellation family as m stars on the North pole with the remaining
// n-m spread evenly along the equator; psi_family(n,0) is the GHZ state.
PureState psi_family(int n, int m);

// (1/sqrt(|E|)) sum_{e in E} |e>, where |e> puts |1> on the vertices of e and
// |0> elsewhere. Throws std::invalid_argument on an empty edge set.
PureState excitation_state(const Hypergraph& g);

// (1/sqrt(r)) sum_rows phase_row |row>, local dimension = alphabet. An empty
// phase list means all ones; otherwise it must have one unit-modulus entry
// per run.
PureState state_from_oa(const OrthogonalArray& oa,
                        const std::vector<cplx>& phases = {});

struct GabcdParams {
  cplx a, b, c, d;
};

// Four-qubit family
//   (a+d)/2 (|0000>+|1111>) + (a-d)/2 (|0011>+|1100>)
// + (b+c)/2 (|0101>+|1010>) + (b-c)/2 (|0110>+|1001>),
// normalized numerically. Throws std::invalid_argument on all-zero parameters.
PureState gabcd_state(const GabcdParams& p);

// (|0011>+|1100> + w(|1010>+|0101>) + w^2(|1001>+|0110>))/sqrt(6) with
// w = e^{2 pi i/3}; equals gabcd_state({1,-1,i sqrt 3,-1} / sqrt 6).
PureState m4_state();

// (1/d) sum_{i,j} |i, j, i+j, 2i+j, 3i+j> mod d; requires a prime d >= 5.
// Support d^2, the smallest possible for five 2-uniform qudits.
PureState ame5_minimal(int d);

// (1/sqrt(d^3)) sum_{i,j,l} w^{(3i+j)l} |i, j, i+j, 2i+j+l, l> mod d with
// w = e^{2 pi i/d}; any d >= 2.
PureState ame5_nonminimal(int d);

}  // namespace entlab

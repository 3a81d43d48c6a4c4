#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entlab/state.hpp"

namespace entlab {

// C = 2|c00 c11 - c01 c10| for a two-qubit pure state (any norm; the input is
// normalized internally).
double concurrence_pure(const PureState& psi);

// Wootters concurrence max{l1-l2-l3-l4, 0}, where l_i are the descending
// square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy). Requires a
// physical 4x4 two-qubit density matrix.
double concurrence_mixed(const DensityMatrix& rho);

// Wootters concurrence of the (v,w) reduction of a multi-qubit pure state.
double two_site_concurrence(const PureState& psi, int v, int w);

// C_{v|rest} = 2 sqrt(det rho_v) for a single-qubit reduction.
double generalized_concurrence(const PureState& psi, int v);

// sum_{w != v} C_{vw}^2 / C_{v|rest}^2. Throws when the denominator vanishes.
double entanglement_ratio(const PureState& psi, int v);

// 4 |Det222| of the three-qubit coefficient tensor (Cayley hyperdeterminant);
// 1 on GHZ, 0 on W and any product state.
double three_tangle(const PureState& psi);

// All eigenvalues of the partial transpose over `sites` (1-based positions
// into rho.dims) are >= -1e-9.
bool is_ppt(const DensityMatrix& rho, const std::vector<int>& sites);

// NPT verdict for a two-party density matrix; decisive (iff entangled) for
// 2x2 and 2x3 systems.
bool entangled_2x2(const DensityMatrix& rho);

// Largest k <= floor(N/2) such that every k-site reduction is maximally mixed
// within 1e-9 in the entrywise max norm; 0 when single sites already fail.
int k_uniformity(const PureState& psi);

// k_uniformity == floor(N/2).
bool is_ame(const PureState& psi);

struct ReductionVerdict {
  std::vector<int> kept;  // surviving sites, ascending
  bool entangled = false; // NPT across at least one bipartition
  bool decisive = false;  // PPT answer is iff: 2x2/2x3 two-party reductions
};

// Verdict per traced-out count t: "all-entangled", "all-separable" (under the
// PPT method; see `decisive` per reduction), or "mixed-verdicts".
struct ResistanceReport {
  std::optional<int> m;
  std::map<int, std::string> per_size;
  std::vector<ReductionVerdict> reductions;
};

// Classifies every reduction of every size. NPT anywhere is a decisive
// entanglement verdict; a PPT reduction larger than 2x2/2x3 is only
// PPT-as-proxy for separability, recorded via decisive=false. m is reported
// when verdicts are monotone: all-entangled for t <= m, none entangled after.
ResistanceReport resistance(const PureState& psi);

}  // namespace entlab

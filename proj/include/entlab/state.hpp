#pragma once

#include <map>
#include <string>
#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

// One basis label per site. Site 1 is the leftmost entry and the most
// significant digit of the flattened index, matching ket notation |i1 i2 ...>.
using MultiIndex = std::vector<int>;

// Sparse pure state over a multi-site computational basis.
class PureState {
 public:
  PureState() = default;
  explicit PureState(std::vector<int> local_dims);

  int n_sites() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& local_dims() const { return dims_; }
  const std::map<MultiIndex, cplx>& terms() const { return terms_; }

  // Validates the index against local_dims; |a| < 1e-15 erases the term.
  void set_amplitude(const MultiIndex& idx, cplx a);
  void add_amplitude(const MultiIndex& idx, cplx a);
  cplx amplitude(const MultiIndex& idx) const;

  double norm() const;
  PureState normalized() const;
  PureState scaled(cplx s) const;
  cplx inner(const PureState& other) const;  // <this|other>

  // Fidelity |<this|other>|^2 over the product of norms (phase-insensitive).
  double fidelity(const PureState& other) const;

 private:
  std::vector<int> dims_;
  std::map<MultiIndex, cplx> terms_;
};

PureState tensor(const PureState& a, const PureState& b);

// Applies a k-site unitary (row-major over the ordered site tuple, first site
// most significant) to the state. Sites are 1-based and distinct.
PureState apply_gate(const PureState& psi, const std::vector<int>& sites,
                     const Mat& u);

struct DensityMatrix {
  std::vector<int> dims;  // subsystem dimensions, order of the kept sites
  Mat entries;

  std::size_t order() const;
};

// rho over the kept sites (1-based labels, returned in ascending site order),
// tracing out the complement.
DensityMatrix partial_trace(const PureState& psi, const std::vector<int>& keep);

// Transposes the listed subsystems (1-based positions into rho.dims).
Mat partial_transpose(const DensityMatrix& rho, const std::vector<int>& sites);

// JSON schema: {"sites": N, "dims": [...], "terms": [{"idx": [...],
// "re": x, "im": y}, ...], "normalized": bool}. Zero-based indices.
std::string state_to_json(const PureState& psi);
PureState state_from_json(const std::string& text);
void state_to_file(const PureState& psi, const std::string& path);
PureState state_from_file(const std::string& path);

}  // namespace entlab

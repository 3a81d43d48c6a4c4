#pragma once

#include <vector>

#include "entlab/state.hpp"

namespace entlab {

// Bijection of 1..N stored as the image list: sigma.image[i-1] = sigma(i).
struct Permutation {
  std::vector<int> image;

  explicit Permutation(std::vector<int> img);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[i - 1]; }
  Permutation inverse() const;
  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image == b.image;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image < b.image;
  }
};

class PermGroup {
 public:
  PermGroup(int n, std::vector<Permutation> elements);

  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_;
  std::vector<Permutation> elements_;  // sorted, duplicate-free
};

// Closure of the generators under composition; throws if the group would
// exceed 10! elements.
PermGroup subgroup_generate(int n, const std::vector<Permutation>& generators);

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);  // symmetries of the n-gon, order 2n

// Site contents relocated per sigma: the result amplitude at (j_1..j_N)
// equals psi's at (j_sigma(1)..j_sigma(N)); dims are permuted alongside.
PureState permute_state(const PureState& psi, const Permutation& sigma);

// Exact stabilizer {sigma : sigma psi = psi}, or equality up to a global
// phase when projective is set. Brute force, n_sites <= 8.
PermGroup symmetry_group(const PureState& psi, bool projective = false,
                         double tol = 1e-9);

// Normalized superposition of sigma(1^k 0^(n-k)) over sigma in h, with
// coefficients accumulated per distinct ket.
PureState dicke_like(int n, int k, const PermGroup& h);

// N-qudit state with local dimension N: (1/sqrt|H|) sum |sigma(0)...sigma(N-1)>.
// Its symmetry group is exactly H.
PureState canonical_h_symmetric(const PermGroup& h);

}  // namespace entlab

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "entlab/hypergraph.hpp"
#include "entlab/states.hpp"
#include "entlab/symmetry.hpp"

using namespace entlab;

namespace {

PureState ghz3() {
  PureState psi({2, 2, 2});
  psi.set_amplitude({0, 0, 0}, 1.0);
  psi.set_amplitude({1, 1, 1}, 1.0);
  return psi.normalized();
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK(p.inverse()(2) == 1);
  CHECK(p * p.inverse() == Permutation::identity(3));
  Permutation q({2, 1, 3});
  CHECK((p * q).image == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("subgroup generation and named groups") {
  auto c3 = subgroup_generate(3, {Permutation({2, 3, 1})});
  CHECK(c3.order() == 3);
  CHECK(c3 == alternating_group(3));

  auto s4 = subgroup_generate(4, {Permutation({2, 1, 3, 4}),
                                  Permutation({2, 3, 4, 1})});
  CHECK(s4.order() == 24);
  CHECK(s4 == symmetric_group(4));

  CHECK(subgroup_generate(5, {Permutation({2, 3, 4, 5, 1})}).order() == 5);
  CHECK(cyclic_group(6).order() == 6);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  auto d4 = dihedral_group(4);
  for (const auto& p : d4.elements()) CHECK(d4.contains(p.inverse()));
}

TEST_CASE("state permutation") {
  PureState psi({2, 2});
  psi.set_amplitude({0, 1}, 1.0);
  auto swapped = permute_state(psi, Permutation({2, 1}));
  CHECK(swapped.amplitude({1, 0}) == cplx(1.0, 0.0));
  CHECK(swapped.amplitude({0, 1}) == cplx(0.0, 0.0));

  auto s3 = symmetric_group(3);
  for (const auto& sigma : s3.elements()) {
    auto moved = permute_state(ghz3(), sigma);
    CHECK(std::abs(moved.inner(ghz3()) - 1.0) < 1e-12);
  }

  // round trip and norm preservation on a random-ish qudit state
  PureState q({2, 3, 2});
  q.set_amplitude({0, 2, 1}, {0.3, -0.4});
  q.set_amplitude({1, 1, 0}, {0.5, 0.2});
  Permutation rot({3, 1, 2});
  auto there = permute_state(q, rot);
  CHECK(there.local_dims() == std::vector<int>{3, 2, 2});
  CHECK(there.amplitude({2, 1, 0}) == cplx(0.3, -0.4));
  auto back = permute_state(there, rot.inverse());
  CHECK(std::abs(back.inner(q) - q.norm() * q.norm()) < 1e-12);
  CHECK(there.norm() == doctest::Approx(q.norm()));

  CHECK_THROWS_AS(permute_state(q, Permutation({2, 1})), std::invalid_argument);
}

TEST_CASE("stabilizer group of named states") {
  CHECK(symmetry_group(ghz3()).order() == 6);

  // equal-weight one-excitation state with phases 1, w, w^2 (w = e^{2pi i/3}):
  // cyclic shifts fix it only up to phase
  PureState chi({2, 2, 2});
  double c = 1 / std::sqrt(3.0);
  chi.set_amplitude({0, 0, 1}, c);
  chi.set_amplitude({0, 1, 0}, c * std::polar(1.0, 2 * M_PI / 3));
  chi.set_amplitude({1, 0, 0}, c * std::polar(1.0, 4 * M_PI / 3));
  CHECK(symmetry_group(chi, false).order() == 1);
  auto proj = symmetry_group(chi, true);
  CHECK(proj.order() == 3);
  CHECK(proj == alternating_group(3));

  auto c5 = symmetry_group(excitation_state(cycle_graph(5)));
  CHECK(c5.order() == 10);
  CHECK(c5 == dihedral_group(5));

  Hypergraph k23(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(symmetry_group(excitation_state(k23)).order() == 12);  // S_2 x S_3
}

TEST_CASE("Dicke-like states") {
  auto ring = dicke_like(4, 2, cyclic_group(4));
  CHECK(ring.terms().size() == 4);
  CHECK(ring.amplitude({1, 1, 0, 0}) == cplx(0.5, 0.0));
  CHECK(ring.amplitude({0, 1, 1, 0}) == cplx(0.5, 0.0));
  CHECK(ring.amplitude({0, 0, 1, 1}) == cplx(0.5, 0.0));
  CHECK(ring.amplitude({1, 0, 0, 1}) == cplx(0.5, 0.0));
  CHECK(ring.amplitude({1, 0, 1, 0}) == cplx(0.0, 0.0));

  // full symmetric group gives the uniform two-excitation superposition
  auto dicke = dicke_like(4, 2, symmetric_group(4));
  CHECK(dicke.terms().size() == 6);
  for (const auto& [idx, a] : dicke.terms())
    CHECK(std::abs(a - 1.0 / std::sqrt(6.0)) < 1e-12);
  CHECK(symmetry_group(dicke) == symmetric_group(4));

  auto vacuum = dicke_like(3, 0, cyclic_group(3));
  CHECK(vacuum.amplitude({0, 0, 0}) == cplx(1.0, 0.0));
  CHECK(vacuum.terms().size() == 1);
}

TEST_CASE("canonical subgroup state pins its symmetry group exactly") {
  auto a3 = canonical_h_symmetric(alternating_group(3));
  double c = 1 / std::sqrt(3.0);
  CHECK(a3.amplitude({0, 1, 2}) == cplx(c, 0.0));
  CHECK(a3.amplitude({1, 2, 0}) == cplx(c, 0.0));
  CHECK(a3.amplitude({2, 0, 1}) == cplx(c, 0.0));
  CHECK(a3.local_dims() == std::vector<int>{3, 3, 3});

  PermGroup trivial(3, {Permutation::identity(3)});
  auto single = canonical_h_symmetric(trivial);
  CHECK(single.amplitude({0, 1, 2}) == cplx(1.0, 0.0));
  CHECK(single.terms().size() == 1);

  auto bell = canonical_h_symmetric(symmetric_group(2));
  CHECK(std::abs(bell.amplitude({0, 1}) - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(bell.amplitude({1, 0}) - 1 / std::sqrt(2.0)) < 1e-12);

  for (const auto& h :
       {alternating_group(3), cyclic_group(4), dihedral_group(4),
        symmetric_group(3), cyclic_group(6), alternating_group(4)}) {
    CHECK(symmetry_group(canonical_h_symmetric(h)) == h);
  }
}

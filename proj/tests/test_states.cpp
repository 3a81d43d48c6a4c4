#include "entlab/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "entlab/state.hpp"
#include "entlab/symmetry.hpp"

using namespace entlab;

namespace {

constexpr double kPi = std::numbers::pi;

double purity(const DensityMatrix& rho) {
  double p = 0.0;
  for (std::size_t i = 0; i < rho.entries.rows(); ++i)
    for (std::size_t j = 0; j < rho.entries.cols(); ++j)
      p += std::norm(rho.entries(i, j));
  return p;
}

// Product across (V1 | complement) iff the reduction onto V1 stays pure.
bool splits_at(const PureState& psi, const std::vector<int>& part) {
  return std::abs(purity(partial_trace(psi, part)) - 1.0) < 1e-9;
}

}  // namespace

TEST_CASE("ghz, w and dicke canonical forms") {
  PureState g = ghz(3, 2);
  CHECK(g.terms().size() == 2);
  CHECK(std::abs(g.amplitude({0, 0, 0}) - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(g.amplitude({1, 1, 1}) - 1 / std::sqrt(2.0)) < 1e-12);

  PureState g23 = ghz(2, 3);
  CHECK(g23.local_dims() == std::vector<int>{3, 3});
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(g23.amplitude({i, i}) - 1 / std::sqrt(3.0)) < 1e-12);

  PureState w3 = w(3);
  CHECK(w3.terms().size() == 3);
  CHECK(std::abs(w3.amplitude({0, 0, 1}) - 1 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(w3.amplitude({1, 0, 0}) - 1 / std::sqrt(3.0)) < 1e-12);

  PureState d42 = dicke(4, 2);
  CHECK(d42.terms().size() == 6);
  for (const auto& [ket, amp] : d42.terms())
    CHECK(std::abs(amp - 1 / std::sqrt(6.0)) < 1e-12);
  CHECK(dicke(4, 0).terms().size() == 1);
  CHECK(std::abs(dicke(4, 4).amplitude({1, 1, 1, 1}) - 1.0) < 1e-12);

  CHECK_THROWS_AS(ghz(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(ghz(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(dicke(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(dicke(3, -1), std::invalid_argument);
}

TEST_CASE("majorana constellations reproduce the named states") {
  // Two stars on the North pole plus one on the South pole.
  PureState m = majorana_state({{0, 0}, {0, 0}, {kPi, 0}});
  PureState w3 = w(3);
  for (const auto& [ket, amp] : w3.terms())
    CHECK(std::abs(m.amplitude(ket) - amp) < 1e-12);

  // Fully degenerate constellation on the pole is the separable state.
  PureState zeros = majorana_state({{0, 0}, {0, 0}, {0, 0}, {0, 0}});
  CHECK(std::abs(zeros.amplitude({0, 0, 0, 0}) - 1.0) < 1e-12);

  // Equilateral triangle on the equator.
  PureState tri = majorana_state(
      {{kPi / 2, 0}, {kPi / 2, 2 * kPi / 3}, {kPi / 2, 4 * kPi / 3}});
  CHECK(tri.fidelity(ghz(3, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(tri.amplitude({0, 0, 0}) - 1 / std::sqrt(2.0)) < 1e-9);

  CHECK_THROWS_AS(majorana_state({}), std::invalid_argument);
}

TEST_CASE("pole-plus-equator family") {
  PureState p30 = psi_family(3, 0);
  CHECK(p30.fidelity(ghz(3, 2)) == doctest::Approx(1.0).epsilon(1e-12));

  PureState p31 = psi_family(3, 1);
  CHECK(std::abs(p31.amplitude({0, 0, 0}) - 3 / std::sqrt(12.0)) < 1e-12);
  CHECK(std::abs(p31.amplitude({0, 1, 1}) - 1 / std::sqrt(12.0)) < 1e-12);
  CHECK(std::abs(p31.amplitude({1, 0, 1}) - 1 / std::sqrt(12.0)) < 1e-12);
  CHECK(std::abs(p31.amplitude({1, 1, 0}) - 1 / std::sqrt(12.0)) < 1e-12);
  CHECK(p31.terms().size() == 4);

  for (int n : {4, 5, 6}) {
    PureState pn0 = psi_family(n, 0);
    CHECK(std::abs(pn0.amplitude(MultiIndex(n, 0)) - 1 / std::sqrt(2.0)) <
          1e-12);
    CHECK(std::abs(pn0.amplitude(MultiIndex(n, 1)) - 1 / std::sqrt(2.0)) <
          1e-12);
  }

  PureState p41 = psi_family(4, 1);
  CHECK(std::abs(p41.amplitude({0, 0, 0, 0}) - 2 / std::sqrt(5.0)) < 1e-12);
  CHECK(std::abs(p41.amplitude({0, 1, 1, 1}) - 0.5 / std::sqrt(5.0)) < 1e-12);
  CHECK(std::abs(p41.norm() - 1.0) < 1e-12);

  // m = n degenerates to the separable all-zero ket.
  CHECK(std::abs(psi_family(3, 3).amplitude({0, 0, 0}) - 1.0) < 1e-12);

  // m poles + an even spread along the equator gives the same state; the
  // azimuth offset pi/(n-m) fixes the sign of the Dicke part when n-m is even.
  MajoranaConstellation c51{{0, 0}};
  for (int j = 0; j < 4; ++j)
    c51.push_back({kPi / 2, kPi / 4 + j * kPi / 2});
  CHECK(majorana_state(c51).fidelity(psi_family(5, 1)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(psi_family(3, 4), std::invalid_argument);
}

TEST_CASE("excitation states of hypergraphs") {
  Hypergraph single(2, {{1, 2}});
  PureState s = excitation_state(single);
  CHECK(std::abs(s.amplitude({1, 1}) - 1.0) < 1e-12);

  PureState k3 = excitation_state(complete_hypergraph(3, 2));
  PureState d32 = dicke(3, 2);
  for (const auto& [ket, amp] : d32.terms())
    CHECK(std::abs(k3.amplitude(ket) - amp) < 1e-12);

  Hypergraph star(3, {{1, 2}, {1, 3}});
  PureState st = excitation_state(star);
  CHECK(std::abs(st.amplitude({1, 1, 0}) - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(st.amplitude({1, 0, 1}) - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(splits_at(st, {1}));

  Hypergraph edgeless(3, {});
  CHECK_THROWS_AS(excitation_state(edgeless), std::invalid_argument);
}

TEST_CASE("excitation separability matches hypergraph factorization") {
  std::vector<Hypergraph> zoo;
  zoo.push_back(Hypergraph(2, {{1, 2}}));
  zoo.push_back(Hypergraph(3, {{1, 2}, {1, 3}}));
  zoo.push_back(complete_hypergraph(3, 2));
  zoo.push_back(cycle_graph(4));
  zoo.push_back(cycle_graph(5));
  zoo.push_back(Hypergraph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
  zoo.push_back(path_graph(4));

  for (const auto& g : zoo) {
    const int n = g.n_vertices();
    PureState psi = excitation_state(g);
    for (int mask = 1; mask + 1 < (1 << n); mask += 2) {
      // Odd masks only: vertex 1 stays on the left side, so each unordered
      // bipartition appears once.
      std::vector<int> left, right;
      for (int v = 1; v <= n; ++v)
        (mask >> (v - 1) & 1 ? left : right).push_back(v);
      bool product = is_product_hypergraph(g, {std::set<int>(left.begin(), left.end()),
                                               std::set<int>(right.begin(), right.end())});
      CHECK(splits_at(psi, left) == product);
    }
  }
}

TEST_CASE("states read off orthogonal arrays") {
  OrthogonalArray oa = bush_oa(3, 2);
  PureState psi = state_from_oa(oa);
  CHECK(psi.local_dims() == std::vector<int>(4, 3));
  CHECK(psi.terms().size() == 9);
  for (const auto& [ket, amp] : psi.terms())
    CHECK(std::abs(amp - 1.0 / 3.0) < 1e-12);

  OrthogonalArray big = bush_oa(4, 2);
  PureState ququart = state_from_oa(big);
  CHECK(ququart.local_dims() == std::vector<int>(5, 4));
  CHECK(ququart.terms().size() == 16);

  std::vector<cplx> sevenths(9, std::exp(cplx(0, kPi / 7)));
  PureState rotated = state_from_oa(oa, sevenths);
  CHECK(rotated.fidelity(psi) == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<cplx> short_list(3, 1.0);
  CHECK_THROWS_AS(state_from_oa(oa, short_list), std::invalid_argument);
  std::vector<cplx> toobig(9, 2.0);
  CHECK_THROWS_AS(state_from_oa(oa, toobig), std::invalid_argument);
}

TEST_CASE("four-qubit abcd family") {
  PureState even = gabcd_state({1, 1, 1, 1});
  CHECK(even.terms().size() == 4);
  CHECK(std::abs(even.amplitude({0, 0, 0, 0}) - 0.5) < 1e-12);
  CHECK(std::abs(even.amplitude({0, 1, 0, 1}) - 0.5) < 1e-12);
  CHECK(std::abs(even.amplitude({1, 0, 1, 0}) - 0.5) < 1e-12);
  CHECK(std::abs(even.amplitude({1, 1, 1, 1}) - 0.5) < 1e-12);

  // Only the first parameter set: the (a-d)/2 branch survives alongside
  // (a+d)/2, everything with b, c drops out.
  PureState first = gabcd_state({1, 0, 0, 0});
  CHECK(first.terms().size() == 4);
  CHECK(std::abs(first.amplitude({0, 0, 0, 0}) - 0.5) < 1e-12);
  CHECK(std::abs(first.amplitude({0, 0, 1, 1}) - 0.5) < 1e-12);
  CHECK(std::abs(first.amplitude({1, 1, 0, 0}) - 0.5) < 1e-12);
  CHECK(std::abs(first.amplitude({1, 1, 1, 1}) - 0.5) < 1e-12);

  // a = c fills all eight kets with matching signs.
  PureState eight = gabcd_state({1, 0, 1, 0});
  CHECK(eight.terms().size() == 8);
  const double q = 1 / std::sqrt(8.0);
  CHECK(std::abs(eight.amplitude({0, 0, 0, 0}) - q) < 1e-12);
  CHECK(std::abs(eight.amplitude({0, 1, 0, 1}) - q) < 1e-12);
  CHECK(std::abs(eight.amplitude({0, 1, 1, 0}) + q) < 1e-12);
  CHECK(std::abs(eight.amplitude({1, 0, 0, 1}) + q) < 1e-12);

  // Generic parameters leave every single site maximally mixed.
  PureState gen = gabcd_state(
      {{0.3, 0.1}, {1.7, 0.0}, {-0.4, 2.0}, {0.9, -0.5}});
  for (int site = 1; site <= 4; ++site) {
    DensityMatrix rho = partial_trace(gen, {site});
    CHECK(std::abs(rho.entries(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(rho.entries(1, 1) - 0.5) < 1e-12);
    CHECK(std::abs(rho.entries(0, 1)) < 1e-12);
  }

  CHECK_THROWS_AS(gabcd_state({0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("six-term highly entangled four-qubit state") {
  PureState m4 = m4_state();
  CHECK(m4.terms().size() == 6);
  CHECK(std::abs(m4.norm() - 1.0) < 1e-12);
  const cplx w = std::exp(cplx(0, 2 * kPi / 3));
  CHECK(std::abs(m4.amplitude({0, 0, 1, 1}) - 1 / std::sqrt(6.0)) < 1e-12);
  CHECK(std::abs(m4.amplitude({1, 0, 1, 0}) - w / std::sqrt(6.0)) < 1e-12);
  CHECK(std::abs(m4.amplitude({0, 1, 1, 0}) - w * w / std::sqrt(6.0)) < 1e-12);

  const double s6 = std::sqrt(6.0);
  PureState via_abcd = gabcd_state(
      {1 / s6, -1 / s6, cplx(0, std::sqrt(3.0) / s6), -1 / s6});
  CHECK(m4.fidelity(via_abcd) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("five-qudit maximal families") {
  PureState minimal = ame5_minimal(5);
  CHECK(minimal.local_dims() == std::vector<int>(5, 5));
  CHECK(minimal.terms().size() == 25);
  CHECK(std::abs(minimal.amplitude({1, 2, 3, 4, 0}) - 0.2) < 1e-12);
  CHECK(std::abs(minimal.amplitude({0, 0, 0, 0, 0}) - 0.2) < 1e-12);

  CHECK_THROWS_AS(ame5_minimal(4), std::invalid_argument);
  CHECK_THROWS_AS(ame5_minimal(3), std::invalid_argument);
  CHECK_THROWS_AS(ame5_minimal(6), std::invalid_argument);

  PureState five_qubit = ame5_nonminimal(2);
  CHECK(five_qubit.local_dims() == std::vector<int>(5, 2));
  CHECK(five_qubit.terms().size() == 8);
  const double q = 1 / std::sqrt(8.0);
  CHECK(std::abs(five_qubit.amplitude({0, 0, 0, 0, 0}) - q) < 1e-12);
  CHECK(std::abs(five_qubit.amplitude({1, 0, 1, 1, 1}) + q) < 1e-12);

  PureState qutrit = ame5_nonminimal(3);
  CHECK(qutrit.terms().size() == 27);
  for (const auto& [ket, amp] : qutrit.terms())
    CHECK(std::abs(std::abs(amp) - 1 / std::sqrt(27.0)) < 1e-12);

  CHECK_THROWS_AS(ame5_nonminimal(1), std::invalid_argument);
}

TEST_CASE("symmetric constructors are permutation invariant") {
  MajoranaConstellation generic{{0.3, 0.5}, {1.2, 4.0}, {2.0, 1.1},
                                {2.8, 5.9}, {0.7, 3.3}};
  PureState psi = majorana_state(generic);
  PermGroup full = symmetric_group(5);
  PermGroup stab = symmetry_group(psi, /*projective=*/true);
  CHECK(stab == full);

  PermGroup dicke_stab = symmetry_group(dicke(4, 2));
  CHECK(dicke_stab == symmetric_group(4));
}

TEST_CASE("constructors emit unit norm") {
  std::vector<PureState> all{
      ghz(4, 3),
      w(5),
      dicke(6, 3),
      majorana_state({{0.4, 0.1}, {2.2, 3.0}, {1.0, 5.5}}),
      psi_family(5, 2),
      excitation_state(cycle_graph(6)),
      state_from_oa(bush_oa(3, 2)),
      gabcd_state({0.2, {0.0, 1.0}, -0.7, 2.0}),
      m4_state(),
      ame5_minimal(7),
      ame5_nonminimal(3)};
  for (const auto& psi : all) CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("family constructor file round trip") {
  PureState g = ghz(3, 2);
  state_to_file(g, "build/ghz3_roundtrip.json");
  PureState back = state_from_file("build/ghz3_roundtrip.json");
  CHECK(back.local_dims() == g.local_dims());
  REQUIRE(back.terms().size() == g.terms().size());
  for (const auto& [ket, amp] : g.terms())
    CHECK(std::abs(back.amplitude(ket) - amp) < 1e-12);
}

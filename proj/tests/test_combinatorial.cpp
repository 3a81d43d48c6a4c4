#include <cstdio>
#include <set>

#include "doctest.h"
#include "entlab/oa.hpp"
#include "entlab/rings.hpp"

using namespace entlab;

TEST_CASE("ring axioms hold for every shipped ring of order <= 16") {
  validate_ring(ring_cyclic(4));
  validate_ring(ring_cyclic(9));
  validate_ring(ring_galois(2, 2, default_irreducible(2, 2)));
  validate_ring(ring_galois(3, 2, default_irreducible(3, 2)));
  validate_ring(ring_direct_sum({3, 3}));
}

TEST_CASE("galois arithmetic: x*x = 2 in GF(9) with modulus x^2+1") {
  auto gf9 = ring_galois(3, 2, {1, 0, 1});
  // element x encodes as 3 (digit at p^1)
  CHECK(gf9.mul(3, 3) == 2);  // x^2 = -1 = 2 mod 3
  CHECK(gf9.order == 9);
  // reducible modulus rejected: x^2 + 2x + 1 = (x+1)^2
  CHECK_THROWS(ring_galois(3, 2, {1, 2, 1}));
}

TEST_CASE("cyclic and direct-sum arithmetic") {
  auto z9 = ring_cyclic(9);
  CHECK(z9.add(5, 7) == 3);
  auto z33 = ring_direct_sum({3, 3});
  // (1,2)+(2,2) = (0,1): encodings 5 + 8 -> 1
  CHECK(z33.add(5, 8) == 1);
  CHECK(z33.one == 4);  // (1,1)
}

TEST_CASE("ring_make parses the three ring spellings") {
  CHECK(ring_make("Z9").order == 9);
  CHECK(ring_make("GF(9)").kind == FiniteRing::Kind::galois);
  CHECK(ring_make("GF(4)").order == 4);
  CHECK(ring_make("Z3+Z3").kind == FiniteRing::Kind::direct_sum);
  CHECK_THROWS(ring_make("Q8"));
}

TEST_CASE("generator expansion reproduces the order-3 reference array") {
  auto g = generator_matrix(ring_cyclic(3), 2, 4, {1, 0, 1, 2, 0, 1, 1, 1});
  auto oa = oa_from_generator(g);
  REQUIRE(oa.runs == 9);
  REQUIRE(oa.cols == 4);
  const int expect[9][4] = {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 2, 2, 2},
                            {1, 0, 1, 2}, {1, 1, 2, 0}, {1, 2, 0, 1},
                            {2, 0, 2, 1}, {2, 1, 0, 2}, {2, 2, 1, 0}};
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 4; ++c) CHECK(oa.at(r, c) == expect[r][c]);
  CHECK(oa_strength(oa) == 2);
  CHECK(oa_index(oa, 2) == 1);
  CHECK(oa_irredundant(oa, 2));
}

TEST_CASE("same generator over Z9 gives an 81-run strength-2 array") {
  auto g = generator_matrix(ring_cyclic(9), 2, 4, {1, 0, 1, 2, 0, 1, 1, 1});
  auto oa = oa_from_generator(g);
  CHECK(oa.runs == 81);
  CHECK(oa_strength(oa) == 2);
}

TEST_CASE("Z4 versus GF(4) expansions split strengths 1 and 2") {
  // This pair is contested between the source's figure and body text, so the
  // checker's own verdict is the contract: Z4 collapses (strength 1), the
  // field version achieves strength 2.
  auto gz = generator_matrix(ring_cyclic(4), 2, 4, {1, 0, 1, 2, 0, 1, 1, 1});
  auto gf = generator_matrix(ring_galois(2, 2, {1, 1, 1}), 2, 4,
                             {1, 0, 1, 2, 0, 1, 1, 1});
  const int sz = oa_strength(oa_from_generator(gz));
  const int sf = oa_strength(oa_from_generator(gf));
  CHECK(sz == 1);
  CHECK(sf == 2);
  std::set<int> both = {sz, sf};
  CHECK(both == std::set<int>{1, 2});
}

TEST_CASE("bush construction") {
  auto oa42 = bush_oa(4, 2);
  CHECK(oa42.runs == 16);
  CHECK(oa42.cols == 5);
  CHECK(oa42.alphabet == 4);
  CHECK(oa_strength(oa42) == 2);
  CHECK(oa_index(oa42, 2) == 1);
  CHECK(oa_irredundant(oa42, 2));

  // projection of bush_oa(3,2) onto 4 columns keeps strength 2
  auto oa32 = bush_oa(3, 2);
  std::vector<int> proj;
  for (int r = 0; r < oa32.runs; ++r)
    for (int c = 0; c < 4; ++c) proj.push_back(oa32.at(r, c));
  auto oa324 = make_oa(oa32.runs, 4, 3, proj);
  CHECK(oa_strength(oa324) == 2);

  // repetition-code degenerate case
  auto oa21 = bush_oa(2, 1);
  REQUIRE(oa21.runs == 2);
  REQUIRE(oa21.cols == 3);
  std::set<std::vector<int>> rows;
  for (int r = 0; r < 2; ++r)
    rows.insert({oa21.at(r, 0), oa21.at(r, 1), oa21.at(r, 2)});
  CHECK(rows == std::set<std::vector<int>>{{0, 0, 0}, {1, 1, 1}});

  CHECK_THROWS(bush_oa(6, 2));
}

TEST_CASE("bush arrays are irredundant while N-k >= k") {
  for (int d : {2, 3, 4, 5})
    for (int k = 1; k <= 3 && k <= d; ++k) {
      auto oa = bush_oa(d, k);
      if (oa.cols - k >= k) CHECK(oa_irredundant(oa, k));
    }
}

TEST_CASE("index times d^k equals runs whenever strength holds") {
  auto oa = bush_oa(5, 2);
  const int k = oa_strength(oa);
  for (int kk = 1; kk <= k; ++kk) {
    long long cells = 1;
    for (int i = 0; i < kk; ++i) cells *= oa.alphabet;
    CHECK(static_cast<long long>(oa_index(oa, kk)) * cells == oa.runs);
  }
}

TEST_CASE("duplicate rows are rejected") {
  CHECK_THROWS(make_oa(2, 2, 2, {0, 1, 0, 1}));
}

TEST_CASE("oa file round trip") {
  auto oa = bush_oa(3, 2);
  const char* path = "build/tmp_oa_roundtrip.txt";
  oa_to_file(oa, path);
  auto back = oa_from_file(path);
  CHECK(back.runs == oa.runs);
  CHECK(back.cols == oa.cols);
  CHECK(back.alphabet == oa.alphabet);
  CHECK(back.entries == oa.entries);
  std::remove(path);
}

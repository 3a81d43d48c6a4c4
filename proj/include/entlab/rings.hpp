#pragma once

#include <string>
#include <vector>

namespace entlab {

// Finite commutative unital ring with explicit operation tables. Elements are
// encoded as integers 0..order-1:
//   cyclic(d)            — residues mod d
//   galois(p,n,poly)     — a_{n-1} x^{n-1} + ... + a_0  ->  sum a_k p^k
//   direct_sum(d1..dm)   — (a_1..a_m) -> positional mixed-radix encoding,
//                          e.g. (a,b) over Z3 (+) Z3 -> 3a + b
struct FiniteRing {
  enum class Kind { cyclic, galois, direct_sum };

  Kind kind;
  int order = 0;
  int one = 1;  // encoding of the multiplicative unit
  std::string name;
  std::vector<int> add_table, mul_table;  // order x order, row-major

  int add(int a, int b) const { return add_table[a * order + b]; }
  int mul(int a, int b) const { return mul_table[a * order + b]; }
  int neg(int a) const;
};

FiniteRing ring_cyclic(int d);

// poly holds coefficients c0..cn of a degree-n monic irreducible over Z_p
// (c_n must be 1); throws if the polynomial is reducible.
FiniteRing ring_galois(int p, int n, const std::vector<int>& poly);

FiniteRing ring_direct_sum(const std::vector<int>& orders);

// Shipped default moduli: x^2+x+1 for GF(4), x^2+1 for GF(9); lexicographically
// smallest irreducible otherwise.
std::vector<int> default_irreducible(int p, int n);

// Parses "Z9", "GF(9)", "Z3+Z3" style ring names (CLI surface).
FiniteRing ring_make(const std::string& spec);

// Exhaustive axiom check (closure, associativity, commutativity,
// distributivity, unit), plus no-zero-divisors for galois kind.
// Intended for order <= 16; throws std::runtime_error on violation.
void validate_ring(const FiniteRing& r);

struct GeneratorMatrix {
  FiniteRing ring;
  int rows = 0, cols = 0;
  std::vector<int> entries;  // rows x cols, ring-element encodings

  int at(int r, int c) const { return entries[r * cols + c]; }
};

GeneratorMatrix generator_matrix(FiniteRing ring, int rows, int cols,
                                 const std::vector<int>& entries);

}  // namespace entlab

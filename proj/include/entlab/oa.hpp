#pragma once

#include <string>
#include <vector>

#include "entlab/rings.hpp"

namespace entlab {

// Simple orthogonal array: r distinct rows, N columns, symbols 0..d-1.
struct OrthogonalArray {
  int runs = 0, cols = 0, alphabet = 0;
  std::vector<int> entries;  // runs x cols

  int at(int r, int c) const { return entries[r * cols + c]; }
};

OrthogonalArray make_oa(int runs, int cols, int alphabet,
                        std::vector<int> entries);

// Rows { v^T G : v in R^s } in lexicographic order of the coefficient vector
// (first coefficient most significant). Throws if the map is not injective.
OrthogonalArray oa_from_generator(const GeneratorMatrix& g);

// Largest k such that every k-column projection hits all d^k tuples with equal
// multiplicity; 0 if single columns are already unbalanced.
int oa_strength(const OrthogonalArray& oa);

// Index lambda = r / d^k; requires verified strength >= k.
int oa_index(const OrthogonalArray& oa, int k);

// Every (N-k)-column projection has pairwise distinct rows.
bool oa_irredundant(const OrthogonalArray& oa, int k);

// Bush / Reed-Solomon construction: OA(d^k, d+1, d, k) of index unity for a
// prime power d and k <= d. Row q (a degree<k polynomial over GF(d)) holds
// q(alpha_j) in column j and the coefficient of x^{k-1} in the last column.
OrthogonalArray bush_oa(int d, int k);

// File format: header "# OA r N d", then one whitespace-separated row per line.
void oa_to_file(const OrthogonalArray& oa, const std::string& path);
OrthogonalArray oa_from_file(const std::string& path);

}  // namespace entlab

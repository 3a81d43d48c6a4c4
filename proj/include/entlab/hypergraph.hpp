#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace entlab {

// Vertices are labeled 1..N. Edges are distinct nonempty vertex sets.
class Hypergraph {
 public:
  Hypergraph(int n_vertices, std::vector<std::set<int>> edges);

  int n_vertices() const { return n_; }
  const std::vector<std::set<int>>& edges() const { return edges_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }

  // Common edge size, or nullopt when edges have mixed sizes.
  std::optional<int> uniformity() const;
  bool is_graph() const { return uniformity() == 2; }

 private:
  int n_;
  std::vector<std::set<int>> edges_;
};

// ---- structural statistics -------------------------------------------------
int degree(const Hypergraph& g, int v);
// number of edges containing both v and w
int section(const Hypergraph& g, int v, int w);
// number of vertex sets W with both W+{v} and W+{w} edges
int joint_neighborhood(const Hypergraph& g, int v, int w);
// shortest-path distance in the co-occurrence graph; -1 if disconnected
int distance(const Hypergraph& g, int v, int w);

// ---- closed-form predictions for uniform hypergraphs -----------------------
// C_vw = max{0, (2/|E|)(n_vw - sqrt(s_vw * lambda))},
// lambda = |E| - d_v - d_w + s_vw. Requires a uniform hypergraph.
double predicted_concurrence(const Hypergraph& g, int v, int w);

// Distance-1 regular connected graphs: the same value specialized per
// distance bucket (1, 2, >2). Throws if the regularity assumption fails.
double predicted_regular_concurrence(const Hypergraph& g, int v, int w);

// C^2(v|rest) = 4 d_v (|E| - d_v) / |E|^2 (returns C, not C^2).
double predicted_generalized_concurrence(const Hypergraph& g, int v);

// Gamma_v = sum_w C_vw^2 / C^2(v|rest), all values from the closed forms.
double predicted_ratio(const Hypergraph& g, int v);

// ---- product structure ------------------------------------------------------
bool is_product_hypergraph(const Hypergraph& g,
                           const std::pair<std::set<int>, std::set<int>>& parts);
std::optional<std::pair<std::set<int>, std::set<int>>> factorize(
    const Hypergraph& g);

// ---- named families ---------------------------------------------------------
// complete(N,k)     all k-subsets of 1..N
// cycle(N), path(N)
// platonic(name, "edges"|"faces"), name in {tetrahedron, octahedron, cube,
//                                           icosahedron, dodecahedron}
// hypercube(m)      2^m vertices, Hamming-distance-1 edges
// simplex(m)        K_{m+1}
// orthoplex(m,k)    2m vertices paired (2i-1,2i); all k-subsets avoiding pairs
// hex_tiling(rows, cols)  brick-wall honeycomb on a torus, cols even
Hypergraph complete_hypergraph(int n, int k);
Hypergraph cycle_graph(int n);
Hypergraph path_graph(int n);
Hypergraph platonic(const std::string& name, const std::string& variant);
Hypergraph hypercube_graph(int m);
Hypergraph simplex_graph(int m);
Hypergraph orthoplex_hypergraph(int m, int k);
Hypergraph hex_tiling(int rows, int cols);

// Dispatch by name with positional integer parameters (CLI surface).
Hypergraph hypergraph_family(const std::string& name,
                             const std::vector<int>& params,
                             const std::string& variant = "");

// File format: first line N, then one edge per line (space-separated labels).
void hypergraph_to_file(const Hypergraph& g, const std::string& path);
Hypergraph hypergraph_from_file(const std::string& path);

}  // namespace entlab

#include "entlab/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace entlab {

namespace {

void check_vertex(const Hypergraph& g, int v) {
  if (v < 1 || v > g.n_vertices())
    throw std::invalid_argument("vertex label out of range: " +
                                std::to_string(v));
}

int require_uniform(const Hypergraph& g) {
  auto k = g.uniformity();
  if (!k) throw std::invalid_argument("hypergraph is not uniform");
  return *k;
}

}  // namespace

Hypergraph::Hypergraph(int n_vertices, std::vector<std::set<int>> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("hypergraph needs >= 1 vertex");
  std::set<std::set<int>> seen;
  for (const auto& e : edges_) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    if (*e.begin() < 1 || *e.rbegin() > n_)
      throw std::invalid_argument("edge contains out-of-range vertex");
    if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
  }
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  int k = static_cast<int>(edges_.front().size());
  for (const auto& e : edges_)
    if (static_cast<int>(e.size()) != k) return std::nullopt;
  return k;
}

int degree(const Hypergraph& g, int v) {
  check_vertex(g, v);
  int d = 0;
  for (const auto& e : g.edges())
    if (e.count(v)) ++d;
  return d;
}

int section(const Hypergraph& g, int v, int w) {
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w) throw std::invalid_argument("section needs two distinct vertices");
  int s = 0;
  for (const auto& e : g.edges())
    if (e.count(v) && e.count(w)) ++s;
  return s;
}

int joint_neighborhood(const Hypergraph& g, int v, int w) {
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w)
    throw std::invalid_argument("joint neighborhood needs two distinct vertices");
  // Count sets W with W+{v} and W+{w} both edges: take W = e\{v} over edges
  // containing v but not w, and test W+{w}.
  std::set<std::set<int>> edge_set(g.edges().begin(), g.edges().end());
  int n = 0;
  for (const auto& e : g.edges()) {
    if (!e.count(v) || e.count(w)) continue;
    std::set<int> shifted = e;
    shifted.erase(v);
    shifted.insert(w);
    if (edge_set.count(shifted)) ++n;
  }
  return n;
}

int distance(const Hypergraph& g, int v, int w) {
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w) return 0;
  std::vector<std::set<int>> adj(g.n_vertices() + 1);
  for (const auto& e : g.edges())
    for (int a : e)
      for (int b : e)
        if (a != b) adj[a].insert(b);
  std::vector<int> dist(g.n_vertices() + 1, -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == w) return dist[u];
    for (int x : adj[u])
      if (dist[x] < 0) {
        dist[x] = dist[u] + 1;
        q.push(x);
      }
  }
  return -1;
}

double predicted_concurrence(const Hypergraph& g, int v, int w) {
  require_uniform(g);
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w) throw std::invalid_argument("need two distinct vertices");
  double E = g.n_edges();
  double n = joint_neighborhood(g, v, w);
  double s = section(g, v, w);
  double lambda = E - degree(g, v) - degree(g, w) + s;
  return std::max(0.0, (2.0 / E) * (n - std::sqrt(s * lambda)));
}

double predicted_regular_concurrence(const Hypergraph& g, int v, int w) {
  require_uniform(g);
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w) throw std::invalid_argument("need two distinct vertices");
  int n_verts = g.n_vertices();
  int d = degree(g, 1);
  for (int u = 2; u <= n_verts; ++u)
    if (degree(g, u) != d) throw std::invalid_argument("graph is not regular");
  int s = -1;
  for (int a = 1; a <= n_verts; ++a)
    for (int b = a + 1; b <= n_verts; ++b) {
      int sab = section(g, a, b);
      if (sab == 0) continue;
      if (s < 0) s = sab;
      if (sab != s)
        throw std::invalid_argument("graph is not distance-1 regular");
    }
  for (int u = 2; u <= n_verts; ++u)
    if (distance(g, 1, u) < 0)
      throw std::invalid_argument("graph is not connected");
  double E = g.n_edges();
  int dist = distance(g, v, w);
  double n = joint_neighborhood(g, v, w);
  if (dist == 1)
    return (2.0 / E) *
           std::max(0.0, n - std::sqrt(static_cast<double>(s) * (E - 2 * d + s)));
  if (dist == 2) return (2.0 / E) * n;
  return 0.0;
}

double predicted_generalized_concurrence(const Hypergraph& g, int v) {
  check_vertex(g, v);
  double E = g.n_edges();
  if (E == 0) throw std::invalid_argument("hypergraph has no edges");
  double d = degree(g, v);
  return 2.0 * std::sqrt(d * (E - d)) / E;
}

double predicted_ratio(const Hypergraph& g, int v) {
  check_vertex(g, v);
  double rest = predicted_generalized_concurrence(g, v);
  if (rest == 0.0)
    throw std::invalid_argument("isolated vertex has no entanglement ratio");
  double sum = 0.0;
  for (int w = 1; w <= g.n_vertices(); ++w) {
    if (w == v) continue;
    double c = predicted_concurrence(g, v, w);
    sum += c * c;
  }
  return sum / (rest * rest);
}

bool is_product_hypergraph(
    const Hypergraph& g,
    const std::pair<std::set<int>, std::set<int>>& parts) {
  const auto& [v1, v2] = parts;
  if (v1.empty() || v2.empty())
    throw std::invalid_argument("both parts must be nonempty");
  std::set<int> all;
  for (int v : v1) all.insert(v);
  for (int v : v2) {
    if (v1.count(v)) throw std::invalid_argument("parts overlap");
    all.insert(v);
  }
  if (static_cast<int>(all.size()) != g.n_vertices() || *all.begin() != 1 ||
      *all.rbegin() != g.n_vertices())
    throw std::invalid_argument("parts must cover all vertices");

  std::set<std::set<int>> p1, p2, edge_set;
  for (const auto& e : g.edges()) {
    std::set<int> a, b;
    for (int v : e) (v1.count(v) ? a : b).insert(v);
    p1.insert(a);
    p2.insert(b);
    edge_set.insert(e);
  }
  if (p1.size() * p2.size() != edge_set.size()) return false;
  for (const auto& a : p1)
    for (const auto& b : p2) {
      std::set<int> u = a;
      u.insert(b.begin(), b.end());
      if (!edge_set.count(u)) return false;
    }
  return true;
}

std::optional<std::pair<std::set<int>, std::set<int>>> factorize(
    const Hypergraph& g) {
  int n = g.n_vertices();
  if (n < 2 || g.edges().empty()) return std::nullopt;
  if (n > 24) throw std::invalid_argument("factorize supports up to 24 vertices");

  // A vertex incident to no edge splits off immediately.
  std::vector<int> deg(n + 1, 0);
  for (const auto& e : g.edges())
    for (int v : e) ++deg[v];
  for (int v = 1; v <= n; ++v)
    if (deg[v] == 0) {
      std::set<int> rest;
      for (int u = 1; u <= n; ++u)
        if (u != v) rest.insert(u);
      return std::make_pair(std::set<int>{v}, rest);
    }

  std::vector<std::uint32_t> masks;
  masks.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << (v - 1);
    masks.push_back(m);
  }
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // Vertex n stays in part 2, so each bipartition is visited once.
  for (std::uint32_t side = 1; side < (1u << (n - 1)); ++side) {
    std::unordered_set<std::uint32_t> proj1, proj2;
    for (std::uint32_t m : masks) {
      proj1.insert(m & side);
      proj2.insert(m & (full ^ side));
    }
    if (proj1.size() * proj2.size() != masks.size()) continue;
    std::unordered_set<std::uint32_t> edge_set(masks.begin(), masks.end());
    bool ok = true;
    for (std::uint32_t a : proj1) {
      for (std::uint32_t b : proj2)
        if (!edge_set.count(a | b)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) continue;
    std::set<int> s1, s2;
    for (int v = 1; v <= n; ++v)
      (side >> (v - 1) & 1 ? s1 : s2).insert(v);
    return std::make_pair(s1, s2);
  }
  return std::nullopt;
}

// ---- families ----------------------------------------------------------------

Hypergraph complete_hypergraph(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("complete hypergraph needs 1 <= k <= n");
  std::vector<std::set<int>> edges;
  std::set<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      edges.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.insert(v);
      rec(v + 1);
      cur.erase(v);
    }
  };
  rec(1);
  return Hypergraph(n, edges);
}

Hypergraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  std::vector<std::set<int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  return Hypergraph(n, edges);
}

Hypergraph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path needs >= 2 vertices");
  std::vector<std::set<int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Hypergraph(n, edges);
}

namespace {

using Vec3 = std::array<double, 3>;

double dist2(const Vec3& a, const Vec3& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

// Edges join vertex pairs at the minimal pairwise distance.
std::vector<std::set<int>> nearest_neighbor_edges(const std::vector<Vec3>& pts) {
  double best = 1e300;
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::min(best, dist2(pts[i], pts[j]));
  std::vector<std::set<int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist2(pts[i], pts[j]) < best + 1e-6) edges.push_back({i + 1, j + 1});
  return edges;
}

// In a Platonic edge graph every shortest cycle bounds a face and every face
// is a shortest cycle, so faces = girth-length cycles (as vertex sets).
std::vector<std::set<int>> faces_from_girth_cycles(
    int n, const std::vector<std::set<int>>& edges) {
  std::vector<std::set<int>> adj(n + 1);
  for (const auto& e : edges) {
    auto it = e.begin();
    int a = *it++, b = *it;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  for (int target = 3; target <= n; ++target) {
    std::set<std::set<int>> found;
    std::vector<int> path;
    std::function<void(int)> extend = [&](int v) {
      if (static_cast<int>(path.size()) == target) {
        if (adj[v].count(path.front())) found.insert({path.begin(), path.end()});
        return;
      }
      for (int w : adj[v]) {
        if (w <= path.front()) continue;  // canonical start = smallest vertex
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        path.push_back(w);
        extend(w);
        path.pop_back();
      }
    };
    for (int start = 1; start <= n; ++start) {
      path = {start};
      extend(start);
    }
    if (!found.empty()) return {found.begin(), found.end()};
  }
  throw std::logic_error("acyclic graph has no faces");
}

std::vector<Vec3> platonic_vertices(const std::string& name) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pts;
  if (name == "tetrahedron") {
    pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  } else if (name == "octahedron") {
    // Antipodal pairs are (1,2), (3,4), (5,6).
    pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  } else if (name == "cube") {
    // Vertex i has sign pattern given by the bits of i-1 (+ for 0).
    for (int b = 0; b < 8; ++b)
      pts.push_back({1.0 - 2 * (b >> 2 & 1), 1.0 - 2 * (b >> 1 & 1),
                     1.0 - 2 * (b & 1)});
  } else if (name == "icosahedron") {
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        pts.push_back({0, 1.0 * sy, phi * sz});
        pts.push_back({phi * sy, 0, 1.0 * sz});
        pts.push_back({1.0 * sy, phi * sz, 0});
      }
  } else if (name == "dodecahedron") {
    for (int b = 0; b < 8; ++b)
      pts.push_back({1.0 - 2 * (b >> 2 & 1), 1.0 - 2 * (b >> 1 & 1),
                     1.0 - 2 * (b & 1)});
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        pts.push_back({0, sy / phi, phi * sz});
        pts.push_back({phi * sy, 0, sz / phi});
        pts.push_back({sy / phi, phi * sz, 0});
      }
  } else {
    throw std::invalid_argument("unknown Platonic solid: " + name);
  }
  return pts;
}

}  // namespace

Hypergraph platonic(const std::string& name, const std::string& variant) {
  std::string full = name;
  if (full == "tetra") full = "tetrahedron";
  if (full == "octa") full = "octahedron";
  if (full == "icosa") full = "icosahedron";
  if (full == "dodeca") full = "dodecahedron";
  auto pts = platonic_vertices(full);
  int n = static_cast<int>(pts.size());
  if (variant == "edges" || variant.empty())
    return Hypergraph(n, nearest_neighbor_edges(pts));
  if (variant != "faces")
    throw std::invalid_argument("variant must be 'edges' or 'faces'");
  return Hypergraph(n, faces_from_girth_cycles(n, nearest_neighbor_edges(pts)));
}

Hypergraph hypercube_graph(int m) {
  if (m < 1 || m > 20) throw std::invalid_argument("hypercube needs 1 <= m <= 20");
  int n = 1 << m;
  std::vector<std::set<int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < m; ++b) {
      int w = v ^ (1 << b);
      if (w > v) edges.push_back({v + 1, w + 1});
    }
  return Hypergraph(n, edges);
}

Hypergraph simplex_graph(int m) {
  if (m < 1) throw std::invalid_argument("simplex needs m >= 1");
  return complete_hypergraph(m + 1, 2);
}

Hypergraph orthoplex_hypergraph(int m, int k) {
  if (m < 2 || k < 1 || k > m)
    throw std::invalid_argument("orthoplex needs m >= 2 and 1 <= k <= m");
  int n = 2 * m;
  // Hyperedges are k-subsets avoiding every antipodal pair (2i-1, 2i).
  std::vector<std::set<int>> edges;
  std::set<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      edges.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      int mate = (v % 2 == 1) ? v + 1 : v - 1;
      if (cur.count(mate)) continue;
      cur.insert(v);
      rec(v + 1);
      cur.erase(v);
    }
  };
  rec(1);
  return Hypergraph(n, edges);
}

Hypergraph hex_tiling(int rows, int cols) {
  // Honeycomb on a torus: rows x cols hexagonal cells, two sites per cell.
  if (rows < 3 || cols < 3)
    throw std::invalid_argument("hex tiling needs at least 3x3 cells");
  auto site = [&](int p, int q, int which) {
    p = (p % rows + rows) % rows;
    q = (q % cols + cols) % cols;
    return 2 * (p * cols + q) + which + 1;
  };
  std::vector<std::set<int>> edges;
  for (int p = 0; p < rows; ++p)
    for (int q = 0; q < cols; ++q) {
      int b = site(p, q, 1);
      edges.push_back({b, site(p, q, 0)});
      edges.push_back({b, site(p + 1, q, 0)});
      edges.push_back({b, site(p, q + 1, 0)});
    }
  return Hypergraph(2 * rows * cols, edges);
}

Hypergraph hypergraph_family(const std::string& name,
                             const std::vector<int>& params,
                             const std::string& variant) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + name + "' expects " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (name == "complete" || name == "complete-hyper") {
    need(2);
    return complete_hypergraph(params[0], params[1]);
  }
  if (name == "cycle") {
    need(1);
    return cycle_graph(params[0]);
  }
  if (name == "path") {
    need(1);
    return path_graph(params[0]);
  }
  if (name == "hypercube") {
    need(1);
    return hypercube_graph(params[0]);
  }
  if (name == "simplex") {
    need(1);
    return simplex_graph(params[0]);
  }
  if (name == "orthoplex") {
    need(2);
    return orthoplex_hypergraph(params[0], params[1]);
  }
  if (name == "orthoplex-2edges") {
    need(1);
    return orthoplex_hypergraph(params[0], 2);
  }
  if (name == "hex" || name == "hex-tiling") {
    need(2);
    return hex_tiling(params[0], params[1]);
  }
  for (const char* solid : {"tetra", "tetrahedron", "octa", "octahedron", "cube",
                            "icosa", "icosahedron", "dodeca", "dodecahedron"})
    if (name == solid) {
      need(0);
      return platonic(name, variant);
    }
  throw std::invalid_argument("unknown family: " + name);
}

void hypergraph_to_file(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << g.n_vertices() << "\n";
  for (const auto& e : g.edges()) {
    bool first = true;
    for (int v : e) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << "\n";
  }
}

Hypergraph hypergraph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty hypergraph file");
  int n = std::stoi(line);
  std::vector<std::set<int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::set<int> e;
    int v;
    while (ss >> v) e.insert(v);
    if (!e.empty()) edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

}  // namespace entlab

#include "entlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace entlab {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// All n-bit kets with exactly k ones, in lexicographic order.
void for_each_weight_k(int n, int k, const std::function<void(MultiIndex&)>& f) {
  MultiIndex ket(n, 0);
  std::vector<int> ones(k);
  for (int i = 0; i < k; ++i) ones[i] = i;
  while (true) {
    std::fill(ket.begin(), ket.end(), 0);
    for (int p : ones) ket[p] = 1;
    f(ket);
    int i = k - 1;
    while (i >= 0 && ones[i] == n - k + i) --i;
    if (i < 0) break;
    ++ones[i];
    for (int j = i + 1; j < k; ++j) ones[j] = ones[j - 1] + 1;
  }
}

}  // namespace

PureState ghz(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("ghz: need n >= 2, d >= 2");
  PureState psi(std::vector<int>(n, d));
  const double a = 1.0 / std::sqrt(double(d));
  for (int i = 0; i < d; ++i) psi.set_amplitude(MultiIndex(n, i), a);
  return psi;
}

PureState w(int n) { return dicke(n, 1); }

PureState dicke(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("dicke: bad (n,k)");
  PureState psi(std::vector<int>(n, 2));
  const double a = 1.0 / std::sqrt(binom(n, k));
  for_each_weight_k(n, k, [&](MultiIndex& ket) { psi.set_amplitude(ket, a); });
  return psi;
}

PureState majorana_state(const MajoranaConstellation& stars) {
  if (stars.empty()) throw std::invalid_argument("majorana_state: no stars");
  const int n = static_cast<int>(stars.size());

  // Summing the product state over all of S_N weights each ket of Hamming
  // weight w by w!(n-w)! [x^w] prod_j (cos(t_j/2) + x e^{i p_j} sin(t_j/2)):
  // the permanent of the star-evaluation matrix depends only on w.
  std::vector<cplx> poly{1.0};
  for (const auto& s : stars) {
    const cplx zero_amp = std::cos(s.theta / 2);
    const cplx one_amp = std::exp(cplx(0, s.phi)) * std::sin(s.theta / 2);
    std::vector<cplx> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * zero_amp;
      next[i + 1] += poly[i] * one_amp;
    }
    poly = std::move(next);
  }
  std::vector<double> fact(n + 1, 1.0);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;

  PureState psi(std::vector<int>(n, 2));
  for (int w = 0; w <= n; ++w) {
    const cplx amp = poly[w] * fact[w] * fact[n - w];
    if (std::abs(amp) < 1e-12) continue;
    for_each_weight_k(n, w, [&](MultiIndex& ket) { psi.set_amplitude(ket, amp); });
  }
  if (psi.norm() < 1e-12)
    throw std::domain_error("majorana_state: degenerate constellation");
  return psi.normalized();
}

PureState psi_family(int n, int m) {
  if (n < 1 || m < 0 || m > n)
    throw std::invalid_argument("psi_family: bad (n,m)");
  PureState psi = dicke(n, n - m);
  psi.add_amplitude(MultiIndex(n, 0), std::sqrt(binom(n, m)));
  return psi.normalized();
}

PureState excitation_state(const Hypergraph& g) {
  if (g.edges().empty())
    throw std::invalid_argument("excitation_state: empty edge set");
  PureState psi(std::vector<int>(g.n_vertices(), 2));
  const double a = 1.0 / std::sqrt(double(g.edges().size()));
  for (const auto& e : g.edges()) {
    MultiIndex ket(g.n_vertices(), 0);
    for (int v : e) ket[v - 1] = 1;
    psi.add_amplitude(ket, a);
  }
  return psi;
}

PureState state_from_oa(const OrthogonalArray& oa,
                        const std::vector<cplx>& phases) {
  if (!phases.empty()) {
    if (static_cast<int>(phases.size()) != oa.runs)
      throw std::invalid_argument("state_from_oa: phase list length mismatch");
    for (const cplx& p : phases)
      if (std::abs(std::abs(p) - 1.0) > 1e-9)
        throw std::invalid_argument("state_from_oa: non-unit phase");
  }
  PureState psi(std::vector<int>(oa.cols, oa.alphabet));
  const double a = 1.0 / std::sqrt(double(oa.runs));
  for (int r = 0; r < oa.runs; ++r) {
    MultiIndex ket(oa.cols);
    for (int c = 0; c < oa.cols; ++c) ket[c] = oa.at(r, c);
    psi.add_amplitude(ket, a * (phases.empty() ? cplx(1.0) : phases[r]));
  }
  return psi;
}

PureState gabcd_state(const GabcdParams& p) {
  const cplx coeffs[4] = {(p.a + p.d) / 2.0, (p.a - p.d) / 2.0,
                          (p.b + p.c) / 2.0, (p.b - p.c) / 2.0};
  const MultiIndex kets[4][2] = {{{0, 0, 0, 0}, {1, 1, 1, 1}},
                                 {{0, 0, 1, 1}, {1, 1, 0, 0}},
                                 {{0, 1, 0, 1}, {1, 0, 1, 0}},
                                 {{0, 1, 1, 0}, {1, 0, 0, 1}}};
  PureState psi(std::vector<int>(4, 2));
  for (int i = 0; i < 4; ++i)
    for (const auto& k : kets[i]) psi.add_amplitude(k, coeffs[i]);
  if (psi.norm() < 1e-12)
    throw std::invalid_argument("gabcd_state: all-zero parameters");
  return psi.normalized();
}

PureState m4_state() {
  const cplx w = std::exp(cplx(0, 2 * std::numbers::pi / 3));
  const double a = 1.0 / std::sqrt(6.0);
  PureState psi(std::vector<int>(4, 2));
  psi.set_amplitude({0, 0, 1, 1}, a);
  psi.set_amplitude({1, 1, 0, 0}, a);
  psi.set_amplitude({1, 0, 1, 0}, a * w);
  psi.set_amplitude({0, 1, 0, 1}, a * w);
  psi.set_amplitude({1, 0, 0, 1}, a * w * w);
  psi.set_amplitude({0, 1, 1, 0}, a * w * w);
  return psi;
}

PureState ame5_minimal(int d) {
  if (d < 5 || !is_prime(d))
    throw std::invalid_argument("ame5_minimal: d must be a prime >= 5");
  PureState psi(std::vector<int>(5, d));
  const double a = 1.0 / d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      psi.set_amplitude(
          {i, j, (i + j) % d, (2 * i + j) % d, (3 * i + j) % d}, a);
  return psi;
}

PureState ame5_nonminimal(int d) {
  if (d < 2) throw std::invalid_argument("ame5_nonminimal: d must be >= 2");
  PureState psi(std::vector<int>(5, d));
  const double a = 1.0 / std::sqrt(double(d) * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        const cplx w =
            std::exp(cplx(0, 2 * std::numbers::pi * ((3 * i + j) * l % d) / d));
        psi.set_amplitude({i, j, (i + j) % d, (2 * i + j + l) % d, l}, a * w);
      }
  return psi;
}

}  // namespace entlab

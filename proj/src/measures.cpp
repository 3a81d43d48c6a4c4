#include "entlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entlab {

namespace {

constexpr double kUniformTol = 1e-9;
constexpr double kNptTol = 1e-9;

void require_qubits(const PureState& psi) {
  for (int d : psi.local_dims())
    if (d != 2) throw std::invalid_argument("operation needs qubit sites");
}

cplx amp(const PureState& psi, MultiIndex idx) { return psi.amplitude(idx); }

// (sy x sy) rho^* (sy x sy) without forming Pauli products: the spin flip
// sends |x> to +-|3-x>, so entries are index-reversed with a parity sign.
Mat spin_flipped(const Mat& rho) {
  auto sgn = [](int x) { return (x == 1 || x == 2) ? -1.0 : 1.0; };
  Mat tilde(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      tilde(r, c) = sgn(r) * sgn(c) * std::conj(rho(3 - r, 3 - c));
  return tilde;
}

void require_physical(const DensityMatrix& rho) {
  const std::size_t n = rho.entries.rows();
  if (rho.entries.cols() != n) throw std::invalid_argument("rho not square");
  if (!rho.entries.is_hermitian(1e-8))
    throw std::invalid_argument("rho not Hermitian");
  if (std::abs(rho.entries.trace() - 1.0) > 1e-8)
    throw std::invalid_argument("rho trace != 1");
  auto ev = hermitian_eigenvalues(rho.entries);
  if (ev.back() < -1e-8) throw std::invalid_argument("rho not positive");
}

// NPT across at least one bipartition of the reduction's sites.
bool npt_somewhere(const DensityMatrix& rho) {
  const int parts = static_cast<int>(rho.dims.size());
  for (int mask = 1; mask < (1 << parts); mask += 2) {
    if (mask == (1 << parts) - 1) continue;  // full transpose: same spectrum
    std::vector<int> side;
    for (int p = 0; p < parts; ++p)
      if (mask >> p & 1) side.push_back(p + 1);
    if (!is_ppt(rho, side)) return true;
  }
  return false;
}

}  // namespace

double concurrence_pure(const PureState& psi) {
  if (psi.n_sites() != 2) throw std::invalid_argument("need exactly 2 sites");
  require_qubits(psi);
  const double n2 = psi.norm() * psi.norm();
  if (n2 < 1e-30) throw std::invalid_argument("zero state");
  return 2.0 *
         std::abs(amp(psi, {0, 0}) * amp(psi, {1, 1}) -
                  amp(psi, {0, 1}) * amp(psi, {1, 0})) /
         n2;
}

double concurrence_mixed(const DensityMatrix& rho) {
  if (rho.dims != std::vector<int>{2, 2})
    throw std::invalid_argument("need a 2x2-qubit density matrix");
  require_physical(rho);
  // The l_i are the square roots of the eigenvalues of rho*tilde, a product
  // of two PSD matrices. Its nonzero spectrum equals that of the Hermitian
  // D^{1/2} V^dag tilde V D^{1/2} where rho = V D V^dag, so one Hermitian
  // solve suffices and no matrix square root is ever formed.
  EigenSystem es = hermitian_eigensystem(rho.entries);
  Mat root_d(4, 4);
  for (int i = 0; i < 4; ++i)
    root_d(i, i) = std::sqrt(std::max(0.0, es.values[i]));
  Mat herm = root_d * es.vectors.dagger() * spin_flipped(rho.entries) *
             es.vectors * root_d;
  auto ev = hermitian_eigenvalues(herm);
  double c = std::sqrt(std::max(0.0, ev[0]));
  for (int i = 1; i < 4; ++i) c -= std::sqrt(std::max(0.0, ev[i]));
  return std::max(0.0, c);
}

double two_site_concurrence(const PureState& psi, int v, int w) {
  require_qubits(psi);
  if (v == w) throw std::invalid_argument("sites must differ");
  std::vector<int> keep{std::min(v, w), std::max(v, w)};
  return concurrence_mixed(partial_trace(psi, keep));
}

double generalized_concurrence(const PureState& psi, int v) {
  if (psi.local_dims().at(v - 1) != 2)
    throw std::invalid_argument("generalized concurrence needs a qubit site");
  DensityMatrix rho = partial_trace(psi, {v});
  const cplx det = rho.entries(0, 0) * rho.entries(1, 1) -
                   rho.entries(0, 1) * rho.entries(1, 0);
  return 2.0 * std::sqrt(std::max(0.0, det.real()));
}

double entanglement_ratio(const PureState& psi, int v) {
  const double denom = generalized_concurrence(psi, v);
  if (denom < 1e-12)
    throw std::domain_error("entanglement ratio of an unentangled site");
  double num = 0.0;
  for (int w = 1; w <= psi.n_sites(); ++w) {
    if (w == v) continue;
    const double c = two_site_concurrence(psi, v, w);
    num += c * c;
  }
  return num / (denom * denom);
}

double three_tangle(const PureState& psi) {
  if (psi.n_sites() != 3) throw std::invalid_argument("need exactly 3 sites");
  require_qubits(psi);
  const PureState n = psi.normalized();
  auto c = [&](int i, int j, int k) { return n.amplitude({i, j, k}); };
  const cplx d1 = c(0, 0, 0) * c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 1) +
                  c(0, 0, 1) * c(0, 0, 1) * c(1, 1, 0) * c(1, 1, 0) +
                  c(0, 1, 0) * c(0, 1, 0) * c(1, 0, 1) * c(1, 0, 1) +
                  c(1, 0, 0) * c(1, 0, 0) * c(0, 1, 1) * c(0, 1, 1);
  const cplx d2 = c(0, 0, 0) * c(0, 0, 1) * c(1, 1, 0) * c(1, 1, 1) +
                  c(0, 0, 0) * c(0, 1, 0) * c(1, 0, 1) * c(1, 1, 1) +
                  c(0, 0, 0) * c(1, 0, 0) * c(0, 1, 1) * c(1, 1, 1) +
                  c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 1) * c(1, 1, 0) +
                  c(0, 0, 1) * c(1, 0, 0) * c(0, 1, 1) * c(1, 1, 0) +
                  c(0, 1, 0) * c(1, 0, 0) * c(0, 1, 1) * c(1, 0, 1);
  const cplx d3 = c(0, 0, 0) * c(0, 1, 1) * c(1, 0, 1) * c(1, 1, 0) +
                  c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 0) * c(1, 1, 1);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

bool is_ppt(const DensityMatrix& rho, const std::vector<int>& sites) {
  Mat pt = partial_transpose(rho, sites);
  auto ev = hermitian_eigenvalues(pt);
  return ev.back() >= -kNptTol;
}

bool entangled_2x2(const DensityMatrix& rho) {
  if (rho.dims.size() != 2)
    throw std::invalid_argument("need a two-party density matrix");
  return !is_ppt(rho, {2});
}

int k_uniformity(const PureState& psi) {
  const PureState n = psi.normalized();
  const int sites = n.n_sites();
  for (int k = sites / 2; k >= 1; --k) {
    bool ok = true;
    std::vector<int> keep(k);
    for (int i = 0; i < k; ++i) keep[i] = i + 1;
    while (ok) {
      DensityMatrix rho = partial_trace(n, keep);
      const std::size_t dim = rho.entries.rows();
      for (std::size_t r = 0; r < dim && ok; ++r)
        for (std::size_t c = 0; c < dim && ok; ++c) {
          const cplx want = r == c ? cplx(1.0 / double(dim)) : cplx(0.0);
          if (std::abs(rho.entries(r, c) - want) > kUniformTol) ok = false;
        }
      // next k-combination of 1..sites
      int i = k - 1;
      while (i >= 0 && keep[i] == sites - k + i + 1) --i;
      if (i < 0) break;
      ++keep[i];
      for (int j = i + 1; j < k; ++j) keep[j] = keep[j - 1] + 1;
    }
    if (ok) return k;
  }
  return 0;
}

bool is_ame(const PureState& psi) {
  return k_uniformity(psi) == psi.n_sites() / 2;
}

ResistanceReport resistance(const PureState& psi) {
  const PureState n = psi.normalized();
  const int sites = n.n_sites();
  ResistanceReport rep;

  // A fully product state never qualifies.
  bool product = true;
  for (int v = 1; v <= sites && product; ++v) {
    DensityMatrix rho = partial_trace(n, {v});
    double p = 0.0;
    for (std::size_t r = 0; r < rho.entries.rows(); ++r)
      for (std::size_t c = 0; c < rho.entries.cols(); ++c)
        p += std::norm(rho.entries(r, c));
    if (p < 1.0 - 1e-9) product = false;
  }

  for (int t = 1; t < sites; ++t) {
    const int s = sites - t;
    bool any_ent = false, any_sep = false;
    std::vector<int> keep(s);
    for (int i = 0; i < s; ++i) keep[i] = i + 1;
    while (true) {
      ReductionVerdict verdict;
      verdict.kept = keep;
      if (s == 1) {
        verdict.entangled = false;
        verdict.decisive = true;
      } else {
        DensityMatrix rho = partial_trace(n, keep);
        verdict.entangled = npt_somewhere(rho);
        const auto& d = rho.dims;
        const bool small = s == 2 && ((d[0] == 2 && d[1] <= 3) ||
                                      (d[1] == 2 && d[0] <= 3));
        verdict.decisive = verdict.entangled || small;
      }
      (verdict.entangled ? any_ent : any_sep) = true;
      rep.reductions.push_back(std::move(verdict));
      int i = s - 1;
      while (i >= 0 && keep[i] == sites - s + i + 1) --i;
      if (i < 0) break;
      ++keep[i];
      for (int j = i + 1; j < s; ++j) keep[j] = keep[j - 1] + 1;
    }
    rep.per_size[t] = any_ent && any_sep ? "mixed-verdicts"
                      : any_ent          ? "all-entangled"
                                         : "all-separable";
  }

  if (!product) {
    int prefix = 0;
    while (prefix + 1 < sites &&
           rep.per_size[prefix + 1] == "all-entangled")
      ++prefix;
    bool clean_tail = true;
    for (int t = prefix + 1; t < sites; ++t)
      if (rep.per_size[t] != "all-separable") clean_tail = false;
    if (clean_tail) rep.m = prefix;
  }
  return rep;
}

}  // namespace entlab

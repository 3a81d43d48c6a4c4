#include "entlab/slocc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace entlab {

namespace {

constexpr double kPi = std::numbers::pi;

cplx det2(cplx a, cplx b, cplx c, cplx d) { return a * d - b * c; }

// alpha_i beta_j - alpha_j beta_i; vanishes iff the points coincide.
cplx pdiff(const ExtendedComplex& x, const ExtendedComplex& y) {
  return x.alpha * y.beta - y.alpha * x.beta;
}

}  // namespace

ExtendedComplex::ExtendedComplex(cplx value) {
  *this = projective(value, {1.0, 0.0});
}

ExtendedComplex ExtendedComplex::infinity() { return projective(1.0, 0.0); }

ExtendedComplex ExtendedComplex::projective(cplx a, cplx b) {
  const double m = std::max(std::abs(a), std::abs(b));
  if (m < 1e-200)
    throw std::invalid_argument("projective point needs a nonzero pair");
  ExtendedComplex z;
  z.alpha = a / m;
  z.beta = b / m;
  return z;
}

cplx ExtendedComplex::value() const {
  if (is_infinity()) throw std::domain_error("value of the point at infinity");
  return alpha / beta;
}

double chordal_distance(const ExtendedComplex& x, const ExtendedComplex& y) {
  const double nx = std::sqrt(std::norm(x.alpha) + std::norm(x.beta));
  const double ny = std::sqrt(std::norm(y.alpha) + std::norm(y.beta));
  return 2.0 * std::abs(pdiff(x, y)) / (nx * ny);
}

MobiusTransform mobius_normalize(cplx a, cplx b, cplx c, cplx d) {
  const double mag = std::max({std::abs(a), std::abs(b), std::abs(c),
                               std::abs(d)});
  if (mag < 1e-200) throw std::invalid_argument("zero Mobius matrix");
  a /= mag, b /= mag, c /= mag, d /= mag;
  const cplx det = det2(a, b, c, d);
  if (std::abs(det) < 1e-24)
    throw std::invalid_argument("singular Mobius matrix");
  const cplx s = 1.0 / std::sqrt(det);
  MobiusTransform m;
  m.a = a * s, m.b = b * s, m.c = c * s, m.d = d * s;
  // Canonical lift: first significant coefficient lies in the closed right
  // half-plane (ties broken upward); `sign` remembers whether the incoming
  // lift was the canonical one.
  for (cplx e : {m.a, m.b, m.c, m.d}) {
    if (std::abs(e) < 1e-9) continue;
    const bool flip = e.real() < -1e-12 ||
                      (std::abs(e.real()) <= 1e-12 && e.imag() < 0.0);
    if (flip) {
      m.a = -m.a, m.b = -m.b, m.c = -m.c, m.d = -m.d;
      m.sign = -1;
    }
    break;
  }
  return m;
}

MobiusTransform mobius_identity() { return MobiusTransform{}; }

MobiusTransform mobius_compose(const MobiusTransform& f,
                               const MobiusTransform& g) {
  return mobius_normalize(f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                          f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d);
}

MobiusTransform mobius_inverse(const MobiusTransform& m) {
  return mobius_normalize(m.d, -m.b, -m.c, m.a);
}

ExtendedComplex apply_mobius(const MobiusTransform& m,
                             const ExtendedComplex& z) {
  return ExtendedComplex::projective(m.a * z.alpha + m.b * z.beta,
                                     m.c * z.alpha + m.d * z.beta);
}

MobiusTransform mobius_from_triplets(
    const std::array<ExtendedComplex, 3>& src,
    const std::array<ExtendedComplex, 3>& dst) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (chordal_distance(src[i], src[j]) < 1e-9 ||
          chordal_distance(dst[i], dst[j]) < 1e-9)
        throw std::invalid_argument("triplet points must be distinct");

  // Sends (z1, z2, z3) to (0, 1, infinity).
  auto to_standard = [](const std::array<ExtendedComplex, 3>& z) {
    const cplx d23 = pdiff(z[1], z[2]);
    const cplx d21 = pdiff(z[1], z[0]);
    std::array<cplx, 4> m = {z[0].beta * d23, -z[0].alpha * d23,
                             z[2].beta * d21, -z[2].alpha * d21};
    const double mag = std::max({std::abs(m[0]), std::abs(m[1]),
                                 std::abs(m[2]), std::abs(m[3])});
    for (auto& e : m) e /= mag;
    return m;
  };

  const auto s = to_standard(src);
  const auto t = to_standard(dst);
  // dst-standardizer inverted (adjugate) composed with the src one.
  return mobius_normalize(t[3] * s[0] - t[1] * s[2], t[3] * s[1] - t[1] * s[3],
                          t[0] * s[2] - t[2] * s[0],
                          t[0] * s[3] - t[2] * s[1]);
}

cplx cross_ratio(const ExtendedComplex& z1, const ExtendedComplex& z2,
                 const ExtendedComplex& z3, const ExtendedComplex& z4) {
  const cplx num = pdiff(z3, z1) * pdiff(z4, z2);
  const cplx den = pdiff(z3, z2) * pdiff(z4, z1);
  if (std::abs(den) < 1e-18 || std::abs(num) < 1e-18)
    throw std::invalid_argument("degenerate cross-ratio configuration");
  return num / den;
}

std::vector<cplx> six_values(cplx lambda) {
  const cplx one{1.0, 0.0};
  std::vector<cplx> all = {lambda,
                           one / lambda,
                           one - lambda,
                           one / (one - lambda),
                           (lambda - one) / lambda,
                           lambda / (lambda - one)};
  std::vector<cplx> out;
  for (cplx v : all) {
    bool seen = false;
    for (cplx w : out) seen = seen || std::abs(v - w) < 1e-12;
    if (!seen) out.push_back(v);
  }
  return out;
}

int slip_degree(SlipMeasure m) {
  return m == SlipMeasure::concurrence2 ? 2 : 4;
}

std::string slip_name(SlipMeasure m) {
  return m == SlipMeasure::concurrence2 ? "concurrence2" : "three_tangle";
}

SlipMeasure slip_from_name(const std::string& name) {
  if (name == "concurrence2" || name == "conc2")
    return SlipMeasure::concurrence2;
  if (name == "three_tangle" || name == "tau3") return SlipMeasure::three_tangle;
  throw std::invalid_argument("unknown measure: " + name);
}

std::pair<PureState, PureState> split_state(const PureState& psi, int site) {
  const auto& dims = psi.local_dims();
  if (site < 1 || site > psi.n_sites())
    throw std::invalid_argument("split site out of range");
  if (dims[site - 1] != 2)
    throw std::invalid_argument("split site must be a qubit");

  std::vector<int> rest;
  for (int i = 0; i < psi.n_sites(); ++i)
    if (i != site - 1) rest.push_back(dims[i]);
  PureState psi0(rest), psi1(rest);
  for (const auto& [idx, amp] : psi.terms()) {
    MultiIndex sub;
    for (int i = 0; i < psi.n_sites(); ++i)
      if (i != site - 1) sub.push_back(idx[i]);
    (idx[site - 1] == 0 ? psi0 : psi1).add_amplitude(sub, amp);
  }
  return {psi0, psi1};
}

namespace {

// The invariant as a complex polynomial in the (unnormalized) amplitudes;
// the measures take its modulus, the root machinery keeps the phase.
cplx slip_poly(const PureState& psi, SlipMeasure measure) {
  auto a = [&](MultiIndex idx) { return psi.amplitude(idx); };
  if (measure == SlipMeasure::concurrence2)
    return 2.0 * (a({0, 0}) * a({1, 1}) - a({0, 1}) * a({1, 0}));
  const cplx d1 = a({0, 0, 0}) * a({0, 0, 0}) * a({1, 1, 1}) * a({1, 1, 1}) +
                  a({0, 0, 1}) * a({0, 0, 1}) * a({1, 1, 0}) * a({1, 1, 0}) +
                  a({0, 1, 0}) * a({0, 1, 0}) * a({1, 0, 1}) * a({1, 0, 1}) +
                  a({1, 0, 0}) * a({1, 0, 0}) * a({0, 1, 1}) * a({0, 1, 1});
  const cplx d2 = a({0, 0, 0}) * a({0, 0, 1}) * a({1, 1, 0}) * a({1, 1, 1}) +
                  a({0, 0, 0}) * a({0, 1, 0}) * a({1, 0, 1}) * a({1, 1, 1}) +
                  a({0, 0, 0}) * a({1, 0, 0}) * a({0, 1, 1}) * a({1, 1, 1}) +
                  a({0, 0, 1}) * a({0, 1, 0}) * a({1, 0, 1}) * a({1, 1, 0}) +
                  a({0, 0, 1}) * a({1, 0, 0}) * a({0, 1, 1}) * a({1, 1, 0}) +
                  a({0, 1, 0}) * a({1, 0, 0}) * a({0, 1, 1}) * a({1, 0, 1});
  const cplx d3 = a({0, 0, 0}) * a({0, 1, 1}) * a({1, 0, 1}) * a({1, 1, 0}) +
                  a({0, 0, 1}) * a({0, 1, 0}) * a({1, 0, 0}) * a({1, 1, 1});
  return 4.0 * (d1 - 2.0 * d2 + 4.0 * d3);
}

PureState superpose(cplx z, const PureState& psi0, const PureState& psi1) {
  PureState s(psi0.local_dims());
  for (const auto& [idx, amp] : psi0.terms()) s.add_amplitude(idx, z * amp);
  for (const auto& [idx, amp] : psi1.terms()) s.add_amplitude(idx, amp);
  return s;
}

cplx eval_poly(const std::vector<cplx>& c, cplx z) {
  cplx v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  return v;
}

// Simultaneous (Weierstrass) iteration; degrees here never exceed 4.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
  const int m = static_cast<int>(coeffs.size()) - 1;
  std::vector<cplx> b(coeffs);
  for (auto& e : b) e /= coeffs.back();
  double radius = 0.0;
  for (int k = 0; k < m; ++k) radius = std::max(radius, std::abs(b[k]));
  radius = 1.0 + radius;

  std::vector<cplx> r(m);
  for (int k = 0; k < m; ++k)
    r[k] = std::polar(radius, 2.0 * kPi * k / m + 0.7);
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < m; ++k) {
      cplx denom = 1.0;
      for (int j = 0; j < m; ++j)
        if (j != k) denom *= r[k] - r[j];
      const cplx step = eval_poly(b, r[k]) / denom;
      r[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(r[k])));
    }
    if (worst < 1e-15) break;
  }
  return r;
}

}  // namespace

std::vector<ExtendedComplex> distinct_roots(const RootSystem& rs, double tol) {
  std::vector<ExtendedComplex> out;
  for (const auto& z : rs.roots) {
    bool seen = false;
    for (const auto& w : out) seen = seen || chordal_distance(z, w) < tol;
    if (!seen) out.push_back(z);
  }
  return out;
}

bool roots_match(const std::vector<ExtendedComplex>& a,
                 const std::vector<ExtendedComplex>& b, double tol) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  std::vector<bool> used(n, false);
  // Backtracking assignment; n <= 4 for every measure in the library.
  std::function<bool(int)> match = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || chordal_distance(a[i], b[j]) >= tol) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

RootSystem slip_roots(const PureState& psi, int site, SlipMeasure measure) {
  auto [psi0, psi1] = split_state(psi, site);
  const int arity = measure == SlipMeasure::concurrence2 ? 2 : 3;
  if (psi0.n_sites() != arity)
    throw std::invalid_argument("remaining system does not match the measure");
  for (int d : psi0.local_dims())
    if (d != 2)
      throw std::invalid_argument("invariant defined on qubit systems only");

  const int h = slip_degree(measure);
  auto E = [&](cplx z) { return slip_poly(superpose(z, psi0, psi1), measure); };

  std::vector<cplx> c(h + 1);
  const cplx i1{0.0, 1.0};
  if (h == 2) {
    const cplx f0 = E(0.0), fp = E(1.0), fm = E(-1.0);
    c[0] = f0;
    c[1] = (fp - fm) / 2.0;
    c[2] = (fp + fm) / 2.0 - f0;
  } else {
    const cplx f0 = E(0.0), fp = E(1.0), fm = E(-1.0), fi = E(i1),
               fmi = E(-i1);
    const cplx s1 = (fp + fm) / 2.0, d1 = (fp - fm) / 2.0;
    const cplx s2 = (fi + fmi) / 2.0, d2 = (fi - fmi) / (2.0 * i1);
    c[0] = f0;
    c[1] = (d1 + d2) / 2.0;
    c[2] = (s1 - s2) / 2.0;
    c[3] = (d1 - d2) / 2.0;
    c[4] = (s1 + s2) / 2.0 - f0;
  }

  double scale = 0.0;
  for (const cplx& e : c) scale = std::max(scale, std::abs(e));
  const double mass = std::pow(psi0.norm() + psi1.norm(), h);
  if (scale <= 1e-12 * std::max(mass, 1e-30))
    throw std::domain_error(
        "invariant vanishes identically: every z is a root");
  // Interpolation sanity at the spare sample point z = 2.
  if (std::abs(eval_poly(c, 2.0) - E(2.0)) >
      1e-8 * std::max(1.0, scale * std::pow(2.0, h)))
    throw std::logic_error("interpolated polynomial fails at z = 2");

  int hi = h, lo = 0;
  while (hi > 0 && std::abs(c[hi]) <= 1e-10 * scale) --hi;
  while (lo < hi && std::abs(c[lo]) <= 1e-10 * scale) ++lo;

  RootSystem rs;
  rs.site = site;
  rs.measure = slip_name(measure);
  rs.degree = h;
  std::vector<cplx> finite(lo, cplx{0.0, 0.0});
  if (hi > lo) {
    std::vector<cplx> mid(c.begin() + lo, c.begin() + hi + 1);
    for (cplx r : polynomial_roots(mid)) finite.push_back(r);
  }
  std::sort(finite.begin(), finite.end(), [](cplx x, cplx y) {
    if (std::abs(std::abs(x) - std::abs(y)) > 1e-12)
      return std::abs(x) < std::abs(y);
    return std::arg(x) < std::arg(y);
  });
  // Merge near-coincident finite roots onto a shared representative so that
  // multiplicities are visible as exact repeats.
  std::size_t k = 0;
  while (k < finite.size()) {
    std::size_t j = k + 1;
    cplx sum = finite[k];
    while (j < finite.size() &&
           chordal_distance(finite[j], finite[k]) < 1e-6) {
      sum += finite[j];
      ++j;
    }
    const cplx rep = sum / double(j - k);
    for (std::size_t t = k; t < j; ++t) rs.roots.push_back(rep);
    k = j;
  }
  for (int t = 0; t < h - hi; ++t)
    rs.roots.push_back(ExtendedComplex::infinity());
  return rs;
}

PureState apply_local(const LocalOperator& op, const PureState& psi) {
  if (static_cast<int>(op.factors.size()) != psi.n_sites())
    throw std::invalid_argument("one factor per site required");
  PureState out = psi;
  for (int s = 0; s < psi.n_sites(); ++s)
    out = apply_gate(out, {s + 1}, op.factors[s]);
  return out;
}

namespace {

bool mats_close(const Mat& x, const Mat& y, double tol = 1e-9) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (std::abs(x(r, c) - y(r, c)) > tol) return false;
  return true;
}

Mat canonical_sign(Mat m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const cplx e = m(r, c);
      if (std::abs(e) < 1e-9) continue;
      if (e.real() < -1e-12 ||
          (std::abs(e.real()) <= 1e-12 && e.imag() < 0.0))
        return m * cplx{-1.0, 0.0};
      return m;
    }
  return m;
}

}  // namespace

std::vector<Mat> g24_group() {
  const double s = 1.0 / std::sqrt(2.0);
  const cplx i1{0.0, 1.0};
  Mat rx(2, 2), ry(2, 2), rz(2, 2);
  rx(0, 0) = s, rx(0, 1) = -i1 * s, rx(1, 0) = -i1 * s, rx(1, 1) = s;
  ry(0, 0) = s, ry(0, 1) = -s, ry(1, 0) = s, ry(1, 1) = s;
  rz(0, 0) = s * (1.0 - i1), rz(1, 1) = s * (1.0 + i1);

  std::vector<Mat> group = {canonical_sign(Mat::identity(2))};
  std::vector<Mat> frontier = group;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& g : frontier)
      for (const Mat* gen : {&rx, &ry, &rz}) {
        Mat h = canonical_sign(*gen * g);
        bool seen = false;
        for (const Mat& e : group) seen = seen || mats_close(e, h);
        if (!seen) {
          group.push_back(h);
          next.push_back(h);
        }
      }
    frontier = std::move(next);
    if (group.size() > 48)
      throw std::logic_error("rotation closure exceeded expected order");
  }
  return group;
}

MobiusTransform mobius_of_operator(const Mat& o) {
  if (o.rows() != 2 || o.cols() != 2)
    throw std::invalid_argument("operator must be 2x2");
  return mobius_normalize(o(0, 0), o(0, 1), o(1, 0), o(1, 1));
}

MobiusTransform root_map_of_operator(const Mat& o) {
  if (o.rows() != 2 || o.cols() != 2)
    throw std::invalid_argument("operator must be 2x2");
  return mobius_normalize(o(1, 1), -o(0, 1), -o(1, 0), o(0, 0));
}

Mat operator_from_mobius(const MobiusTransform& m) {
  Mat o(2, 2);
  o(0, 0) = m.d, o(0, 1) = -m.b;
  o(1, 0) = -m.c, o(1, 1) = m.a;
  return o;
}

std::pair<MobiusTransform, cplx> normal_form_transform(
    const std::array<ExtendedComplex, 4>& pts) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (chordal_distance(pts[i], pts[j]) < 1e-9)
        throw std::invalid_argument("normal form needs four distinct points");

  const cplx lambda = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
  // 4 z^2/(1+z^2)^2 = lambda, solved as a quadratic in z^2; the two branches
  // are reciprocal and give the same four-point system.
  const cplx z0sq = (4.0 - 2.0 * lambda + 4.0 * std::sqrt(1.0 - lambda)) /
                    (2.0 * lambda);
  const cplx z0 = std::sqrt(z0sq);
  const std::array<ExtendedComplex, 3> dst = {ExtendedComplex(z0),
                                              ExtendedComplex(1.0 / z0),
                                              ExtendedComplex(-z0)};
  const MobiusTransform t = mobius_from_triplets({pts[0], pts[1], pts[2]}, dst);
  if (chordal_distance(apply_mobius(t, pts[3]), ExtendedComplex(-1.0 / z0)) >
      1e-6)
    throw std::logic_error("fourth point missed the normal system");
  return {t, z0};
}

namespace {

// psiB ~ lambda * t for some scalar, anchored at t's largest amplitude.
bool proportional(const PureState& t, const PureState& b, double tol) {
  MultiIndex anchor;
  double best = 0.0;
  for (const auto& [idx, amp] : t.terms())
    if (std::abs(amp) > best) best = std::abs(amp), anchor = idx;
  if (anchor.empty()) return b.terms().empty();
  const cplx lambda = b.amplitude(anchor) / t.amplitude(anchor);

  double sup = 0.0, scale = 0.0;
  for (const auto& [idx, amp] : b.terms()) scale = std::max(scale, std::abs(amp));
  for (const auto& [idx, amp] : t.terms())
    sup = std::max(sup, std::abs(b.amplitude(idx) - lambda * amp));
  for (const auto& [idx, amp] : b.terms())
    sup = std::max(sup, std::abs(amp - lambda * t.amplitude(idx)));
  return sup <= tol * std::max(scale, 1e-30);
}

}  // namespace

std::optional<LocalOperator> slocc_discriminate(const PureState& psiA,
                                                const PureState& psiB,
                                                SlipMeasure measure) {
  if (psiA.local_dims() != psiB.local_dims())
    throw std::invalid_argument("states must share their shape");
  const int n = psiA.n_sites();

  std::vector<std::vector<Mat>> candidates(n);
  for (int site = 1; site <= n; ++site) {
    const RootSystem ra = slip_roots(psiA, site, measure);
    const RootSystem rb = slip_roots(psiB, site, measure);
    const auto da = distinct_roots(ra);
    const auto db = distinct_roots(rb);
    if (da.size() < 3 || db.size() < 3)
      throw std::domain_error(
          "procedure inapplicable: fewer than 3 distinct roots at site " +
          std::to_string(site));

    const std::array<ExtendedComplex, 3> srcTriplet = {da[0], da[1], da[2]};
    auto& list = candidates[site - 1];
    const int k = static_cast<int>(db.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) {
          if (i == j || i == l || j == l) continue;
          const MobiusTransform m =
              mobius_from_triplets(srcTriplet, {db[i], db[j], db[l]});
          // A genuine witness factor must carry the full root multiset of A
          // onto that of B, not just the chosen triplet.
          std::vector<ExtendedComplex> moved;
          for (const auto& z : ra.roots) moved.push_back(apply_mobius(m, z));
          if (!roots_match(moved, rb.roots, 1e-6)) continue;
          const Mat op = canonical_sign(operator_from_mobius(m));
          bool seen = false;
          for (const Mat& e : list) seen = seen || mats_close(e, op);
          if (!seen) list.push_back(op);
        }
    if (list.empty()) return std::nullopt;
  }

  // Exhaustive scan over the per-site candidate combinations.
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    PureState moved = psiA;
    for (int s = 0; s < n; ++s)
      moved = apply_gate(moved, {s + 1}, candidates[s][pick[s]]);
    if (proportional(moved, psiB, 1e-8)) {
      LocalOperator op;
      for (int s = 0; s < n; ++s) op.factors.push_back(candidates[s][pick[s]]);
      return op;
    }
    int s = n - 1;
    while (s >= 0 && ++pick[s] == candidates[s].size()) pick[s--] = 0;
    if (s < 0) break;
  }
  return std::nullopt;
}

RootSystem gabcd_roots(const GabcdParams& p) {
  const cplx A = (p.b * p.b - p.c * p.c) * (p.a * p.a - p.d * p.d);
  const cplx B = (p.c * p.c - p.d * p.d) * (p.a * p.a - p.b * p.b);
  const double scale = std::pow(
      std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c), std::abs(p.d)}),
      4.0);
  if (std::abs(A) <= 1e-12 * scale || std::abs(B) <= 1e-12 * scale ||
      std::abs(A + 2.0 * B) <= 1e-12 * scale)
    throw std::invalid_argument("degenerate parameters: A, B, A+2B must be nonzero");

  const cplx zeta =
      std::sqrt(((A + 2.0 * B) + 2.0 * std::sqrt(B * (A + B))) / A);
  RootSystem rs;
  rs.site = 1;
  rs.measure = slip_name(SlipMeasure::three_tangle);
  rs.degree = 4;
  rs.roots = {ExtendedComplex(zeta), ExtendedComplex(1.0 / zeta),
              ExtendedComplex(-zeta), ExtendedComplex(-1.0 / zeta)};
  return rs;
}

std::vector<GabcdParams> gabcd_orbit(const GabcdParams& p) {
  const std::array<cplx, 4> base = {p.a, p.b, p.c, p.d};
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::vector<GabcdParams> orbit;
  auto push_unique = [&](const std::array<cplx, 4>& t) {
    for (const auto& e : orbit) {
      const std::array<cplx, 4> f = {e.a, e.b, e.c, e.d};
      double dev = 0.0;
      for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(f[i] - t[i]));
      if (dev < 1e-9) return;
    }
    orbit.push_back({t[0], t[1], t[2], t[3]});
  };

  std::vector<unsigned> masks = {0x0, 0xF};
  for (unsigned m = 1; m < 15; ++m)
    if (__builtin_popcount(m) == 2) masks.push_back(m);
  do {
    for (unsigned mask : masks) {
      std::array<cplx, 4> t;
      for (int i = 0; i < 4; ++i)
        t[i] = (mask >> i & 1u) ? -base[perm[i]] : base[perm[i]];
      push_unique(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit;
}

bool gabcd_orbit_contains(const GabcdParams& p, const GabcdParams& q,
                          double tol) {
  const std::array<cplx, 4> want = {q.a, q.b, q.c, q.d};
  for (const auto& e : gabcd_orbit(p)) {
    const std::array<cplx, 4> t = {e.a, e.b, e.c, e.d};
    int anchor = 0;
    for (int i = 1; i < 4; ++i)
      if (std::abs(t[i]) > std::abs(t[anchor])) anchor = i;
    if (std::abs(t[anchor]) < tol) continue;
    const cplx phase = want[anchor] / t[anchor];
    if (std::abs(std::abs(phase) - 1.0) > tol) continue;
    double dev = 0.0;
    for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(want[i] - phase * t[i]));
    if (dev < tol) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Local monomial equivalence.

namespace {

struct SupportRow {
  MultiIndex idx;
  cplx amp;
};

// Integer linear system  sum_j A[k][j] theta_j = arg(rhs[k])  (mod 2pi),
// solved exactly by Euclidean column elimination; the right-hand sides stay
// multiplicative (unit complex numbers), so wrap-around never loses anything.
class PhaseSystem {
 public:
  PhaseSystem(int vars) : vars_(vars) {}

  void add_equation(const std::vector<int>& cols, cplx rhs_unit) {
    std::vector<std::int64_t> row(vars_, 0);
    for (int c : cols) row[c] += 1;
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs_unit);
  }

  // Returns a solution vector theta (radians) or nullopt.
  std::optional<std::vector<double>> solve(double tol = 1e-8) {
    const int m = static_cast<int>(rows_.size());
    std::vector<bool> done(m, false);
    pivots_.clear();
    for (int col = 0; col < vars_; ++col) {
      // Euclidean reduction leaves at most one unprocessed row nonzero here.
      while (true) {
        int best = -1;
        for (int r = 0; r < m; ++r)
          if (!done[r] && rows_[r][col] != 0 &&
              (best < 0 ||
               std::llabs(rows_[r][col]) < std::llabs(rows_[best][col])))
            best = r;
        if (best < 0) break;
        bool reduced_all = true;
        for (int r = 0; r < m; ++r) {
          if (r == best || done[r] || rows_[r][col] == 0) continue;
          const std::int64_t q = rows_[r][col] / rows_[best][col];
          if (q != 0) combine(r, best, q);
          if (rows_[r][col] != 0) reduced_all = false;
        }
        if (reduced_all) {
          pivots_.push_back({best, col});
          done[best] = true;
          break;
        }
      }
    }
    for (int r = 0; r < m; ++r)
      if (!done[r] && std::abs(rhs_[r] - cplx{1.0, 0.0}) > tol)
        return std::nullopt;  // 0 = nonzero angle: inconsistent

    std::vector<double> theta(vars_, 0.0);
    if (back_substitute(static_cast<int>(pivots_.size()) - 1, theta) &&
        verify(theta, tol))
      return theta;
    return std::nullopt;
  }

 private:
  void combine(int r, int src, std::int64_t q) {
    for (int j = 0; j < vars_; ++j) rows_[r][j] -= q * rows_[src][j];
    rhs_[r] *= std::polar(1.0, -double(q) * std::arg(rhs_[src]));
  }

  // Pivot coefficients above 1 open |p| branches (theta known mod 2pi/|p|).
  bool back_substitute(int k, std::vector<double>& theta) {
    if (k < 0) return true;
    const auto [row, col] = pivots_[k];
    const std::int64_t p = rows_[row][col];
    double partial = 0.0;
    for (int j = 0; j < vars_; ++j)
      if (j != col) partial += double(rows_[row][j]) * theta[j];
    const double target = std::arg(rhs_[row] * std::polar(1.0, -partial));
    for (std::int64_t br = 0; br < std::llabs(p); ++br) {
      theta[col] = (target + 2.0 * kPi * double(br)) / double(p);
      if (back_substitute(k - 1, theta)) return true;
    }
    theta[col] = 0.0;
    return false;
  }

  bool verify(const std::vector<double>& theta, double tol) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      double s = 0.0;
      for (int j = 0; j < vars_; ++j) s += double(rows_[r][j]) * theta[j];
      if (std::abs(std::polar(1.0, s) - rhs_original_[r]) > tol) return false;
    }
    return true;
  }

 public:
  void freeze_for_verify() { rhs_original_ = rhs_; }

 private:
  int vars_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<cplx> rhs_, rhs_original_;
  std::vector<std::pair<int, int>> pivots_;
};

struct LmSearch {
  const std::vector<int>* dims = nullptr;
  std::vector<SupportRow> sa, sb;
  double mu = 1.0;  // common modulus ratio |amp_B| / |amp_A|
  std::vector<std::vector<int>> pi;       // site -> input symbol -> output
  std::vector<std::vector<bool>> taken;   // site -> output symbol used
  std::vector<bool> row_used;
  std::vector<int> row_image;
  std::optional<LocalOperator> result;
  const PureState* stateA = nullptr;
  const PureState* stateB = nullptr;
  long nodes = 0;

  bool assign(int row) {
    if (++nodes > 40'000'000)
      throw std::runtime_error("monomial search budget exceeded");
    if (row == static_cast<int>(sa.size())) return try_phases();
    const MultiIndex& src = sa[row].idx;
    const int n = static_cast<int>(dims->size());
    for (int cand = 0; cand < static_cast<int>(sb.size()); ++cand) {
      if (row_used[cand]) continue;
      if (std::abs(std::abs(sb[cand].amp) - mu * std::abs(sa[row].amp)) >
          1e-9 * std::max(1.0, mu))
        continue;
      const MultiIndex& dst = sb[cand].idx;
      std::vector<std::pair<int, int>> placed;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const int s = src[i], t = dst[i];
        if (pi[i][s] >= 0)
          ok = pi[i][s] == t;
        else if (taken[i][t])
          ok = false;
        else {
          pi[i][s] = t;
          taken[i][t] = true;
          placed.push_back({i, s});
        }
      }
      if (ok) {
        row_used[cand] = true;
        row_image[row] = cand;
        if (assign(row + 1)) return true;
        row_used[cand] = false;
      }
      for (auto [i, s] : placed) {
        taken[i][pi[i][s]] = false;
        pi[i][s] = -1;
      }
    }
    return false;
  }

  bool try_phases() {
    const int n = static_cast<int>(dims->size());
    std::vector<int> offset(n + 1, 1);  // variable 0 is the global scalar
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + (*dims)[i];
    PhaseSystem sys(offset[n]);
    for (std::size_t r = 0; r < sa.size(); ++r) {
      const MultiIndex& dst = sb[row_image[r]].idx;
      std::vector<int> cols = {0};
      for (int i = 0; i < n; ++i) cols.push_back(offset[i] + dst[i]);
      const cplx ua = sa[r].amp / std::abs(sa[r].amp);
      const cplx ub = sb[row_image[r]].amp / std::abs(sb[row_image[r]].amp);
      sys.add_equation(cols, ub * std::conj(ua));
    }
    sys.freeze_for_verify();
    const auto theta = sys.solve();
    if (!theta) return false;

    // Complete each partial symbol map to a permutation, then assemble the
    // monomial factors |s> -> phase(t) |t>, scaled to determinant one.
    LocalOperator op;
    for (int i = 0; i < n; ++i) {
      const int d = (*dims)[i];
      std::vector<int> full = pi[i];
      std::vector<bool> got = taken[i];
      for (int s = 0; s < d; ++s) {
        if (full[s] >= 0) continue;
        for (int t = 0; t < d; ++t)
          if (!got[t]) {
            full[s] = t;
            got[t] = true;
            break;
          }
      }
      Mat m(d, d);
      for (int s = 0; s < d; ++s)
        m(full[s], s) = std::polar(1.0, (*theta)[offset[i] + full[s]]);
      cplx det{1.0, 0.0};
      {  // permutation sign times the product of phases
        std::vector<int> perm = full;
        std::vector<bool> seen(d, false);
        int transpositions = 0;
        for (int s = 0; s < d; ++s) {
          if (seen[s]) continue;
          int len = 0;
          for (int t = s; !seen[t]; t = perm[t]) seen[t] = true, ++len;
          transpositions += len - 1;
        }
        for (int s = 0; s < d; ++s) det *= m(full[s], s);
        if (transpositions % 2) det = -det;
      }
      op.factors.push_back(m * std::pow(det, -1.0 / d));
    }
    if (!proportional(apply_local(op, *stateA), *stateB, 1e-8)) return false;
    result = op;
    return true;
  }
};

}  // namespace

std::optional<LocalOperator> lm_equivalence(const PureState& psiA,
                                            const PureState& psiB) {
  if (psiA.local_dims() != psiB.local_dims())
    throw std::invalid_argument("states must share their shape");

  LmSearch search;
  search.dims = &psiA.local_dims();
  for (const auto& [idx, amp] : psiA.terms()) search.sa.push_back({idx, amp});
  for (const auto& [idx, amp] : psiB.terms()) search.sb.push_back({idx, amp});
  if (search.sa.size() != search.sb.size()) return std::nullopt;
  if (search.sa.empty()) return std::nullopt;

  // A monomial map rescales every amplitude modulus by the same factor, so
  // the sorted modulus profiles must already agree.
  std::vector<double> ma, mb;
  for (const auto& r : search.sa) ma.push_back(std::abs(r.amp));
  for (const auto& r : search.sb) mb.push_back(std::abs(r.amp));
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  search.mu = mb.back() / ma.back();
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (std::abs(mb[i] - search.mu * ma[i]) > 1e-9 * std::max(1.0, search.mu))
      return std::nullopt;

  const int n = psiA.n_sites();
  search.pi.assign(n, {});
  search.taken.assign(n, {});
  for (int i = 0; i < n; ++i) {
    search.pi[i].assign(psiA.local_dims()[i], -1);
    search.taken[i].assign(psiA.local_dims()[i], false);
  }
  search.row_used.assign(search.sb.size(), false);
  search.row_image.assign(search.sa.size(), -1);
  search.stateA = &psiA;
  search.stateB = &psiB;
  search.assign(0);
  return search.result;
}

}  // namespace entlab

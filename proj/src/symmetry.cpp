#include "entlab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace entlab {

namespace {
constexpr std::size_t kGroupCap = 3628800;  // 10!
}

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
  std::vector<bool> seen(image.size(), false);
  for (int v : image) {
    if (v < 1 || v > static_cast<int>(image.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(img);
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image.size());
  for (int i = 1; i <= n(); ++i) img[image[i - 1] - 1] = i;
  return Permutation(img);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("arity mismatch");
  std::vector<int> img(a.n());
  for (int i = 1; i <= a.n(); ++i) img[i - 1] = a(b(i));
  return Permutation(img);
}

PermGroup::PermGroup(int n, std::vector<Permutation> elements)
    : n_(n), elements_(std::move(elements)) {
  for (const auto& p : elements_)
    if (p.n() != n) throw std::invalid_argument("element arity mismatch");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!std::binary_search(elements_.begin(), elements_.end(),
                          Permutation::identity(n)))
    throw std::invalid_argument("group must contain the identity");
  for (const auto& p : elements_) {
    if (!contains(p.inverse()))
      throw std::invalid_argument("set not closed under inverse");
  }
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup subgroup_generate(int n, const std::vector<Permutation>& generators) {
  for (const auto& g : generators)
    if (g.n() != n) throw std::invalid_argument("generator arity mismatch");
  std::set<Permutation> closed = {Permutation::identity(n)};
  std::vector<Permutation> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        Permutation q = g * p;
        if (closed.insert(q).second) {
          if (closed.size() > kGroupCap)
            throw std::invalid_argument("group order exceeds 10!");
          next.push_back(q);
        }
      }
    frontier = std::move(next);
  }
  return PermGroup(n, {closed.begin(), closed.end()});
}

PermGroup symmetric_group(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric_group needs n <= 8");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup(n, elems);
}

namespace {

int parity(const Permutation& p) {
  int n = p.n(), swaps = 0;
  std::vector<bool> seen(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2;
}

}  // namespace

PermGroup alternating_group(int n) {
  auto sn = symmetric_group(n);
  std::vector<Permutation> even;
  for (const auto& p : sn.elements())
    if (parity(p) == 0) even.push_back(p);
  return PermGroup(n, even);
}

PermGroup cyclic_group(int n) {
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n + 1;
  return subgroup_generate(n, {Permutation(shift)});
}

PermGroup dihedral_group(int n) {
  std::vector<int> shift(n), flip(n);
  for (int i = 0; i < n; ++i) {
    shift[i] = (i + 1) % n + 1;
    flip[i] = n - i;
  }
  return subgroup_generate(n, {Permutation(shift), Permutation(flip)});
}

PureState permute_state(const PureState& psi, const Permutation& sigma) {
  int n = psi.n_sites();
  if (sigma.n() != n) throw std::invalid_argument("arity mismatch");
  std::vector<int> dims(n);
  for (int s = 1; s <= n; ++s) dims[sigma(s) - 1] = psi.local_dims()[s - 1];
  PureState out(dims);
  for (const auto& [idx, a] : psi.terms()) {
    MultiIndex moved(n);
    for (int s = 1; s <= n; ++s) moved[sigma(s) - 1] = idx[s - 1];
    out.add_amplitude(moved, a);
  }
  return out;
}

PermGroup symmetry_group(const PureState& psi, bool projective, double tol) {
  int n = psi.n_sites();
  if (n > 8) throw std::invalid_argument("symmetry_group supports n_sites <= 8");
  PureState ref = psi.normalized();
  std::vector<Permutation> stab;
  auto sn = symmetric_group(n);
  for (const auto& sigma : sn.elements()) {
    bool dims_ok = true;
    for (int s = 1; s <= n; ++s)
      if (psi.local_dims()[sigma(s) - 1] != psi.local_dims()[s - 1]) dims_ok = false;
    if (!dims_ok) continue;
    PureState moved = permute_state(ref, sigma);
    cplx phase(1.0, 0.0);
    if (projective) {
      cplx overlap = ref.inner(moved);
      if (std::abs(overlap) < 1.0 - 1e-6) continue;
      phase = overlap / std::abs(overlap);
    }
    double dev = 0.0;
    for (const auto& [idx, a] : moved.terms())
      dev = std::max(dev, std::abs(a - phase * ref.amplitude(idx)));
    for (const auto& [idx, a] : ref.terms())
      dev = std::max(dev, std::abs(moved.amplitude(idx) - phase * a));
    if (dev < tol) stab.push_back(sigma);
  }
  return PermGroup(n, stab);
}

PureState dicke_like(int n, int k, const PermGroup& h) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (h.n() != n) throw std::invalid_argument("group arity mismatch");
  PureState out(std::vector<int>(n, 2));
  for (const auto& sigma : h.elements()) {
    MultiIndex ket(n, 0);
    for (int s = 1; s <= k; ++s) ket[sigma(s) - 1] = 1;
    out.add_amplitude(ket, 1.0);
  }
  return out.normalized();
}

PureState canonical_h_symmetric(const PermGroup& h) {
  int n = h.n();
  PureState out(std::vector<int>(n, n));
  double coeff = 1.0 / std::sqrt(static_cast<double>(h.order()));
  for (const auto& sigma : h.elements()) {
    MultiIndex ket(n);
    for (int s = 1; s <= n; ++s) ket[s - 1] = sigma(s) - 1;
    out.set_amplitude(ket, coeff);
  }
  return out;
}

}  // namespace entlab

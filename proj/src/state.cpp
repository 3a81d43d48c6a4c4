#include "entlab/state.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace entlab {

namespace {

void check_index(const MultiIndex& idx, const std::vector<int>& dims) {
  if (idx.size() != dims.size())
    throw std::invalid_argument("state index arity mismatch");
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] < 0 || idx[k] >= dims[k])
      throw std::out_of_range("state index exceeds local dimension");
}

bool finite(cplx a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

}  // namespace

PureState::PureState(std::vector<int> local_dims) : dims_(std::move(local_dims)) {
  if (dims_.empty()) throw std::invalid_argument("state needs >= 1 site");
  for (int d : dims_)
    if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
}

void PureState::set_amplitude(const MultiIndex& idx, cplx a) {
  check_index(idx, dims_);
  if (!finite(a)) throw std::invalid_argument("non-finite amplitude");
  if (std::abs(a) < 1e-15)
    terms_.erase(idx);
  else
    terms_[idx] = a;
}

void PureState::add_amplitude(const MultiIndex& idx, cplx a) {
  check_index(idx, dims_);
  auto it = terms_.find(idx);
  const cplx v = (it == terms_.end() ? cplx{} : it->second) + a;
  set_amplitude(idx, v);
}

cplx PureState::amplitude(const MultiIndex& idx) const {
  check_index(idx, dims_);
  auto it = terms_.find(idx);
  return it == terms_.end() ? cplx{} : it->second;
}

double PureState::norm() const {
  double s = 0;
  for (const auto& [idx, a] : terms_) s += std::norm(a);
  return std::sqrt(s);
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n < 1e-15) throw std::runtime_error("cannot normalize zero state");
  return scaled(1.0 / n);
}

PureState PureState::scaled(cplx s) const {
  PureState r(dims_);
  for (const auto& [idx, a] : terms_) r.set_amplitude(idx, a * s);
  return r;
}

cplx PureState::inner(const PureState& other) const {
  if (dims_ != other.dims_)
    throw std::invalid_argument("inner: shape mismatch");
  // iterate over the smaller support
  const PureState& small = terms_.size() <= other.terms_.size() ? *this : other;
  const PureState& big = terms_.size() <= other.terms_.size() ? other : *this;
  const bool swapped = &small != this;
  cplx s = 0;
  for (const auto& [idx, a] : small.terms_) {
    auto it = big.terms_.find(idx);
    if (it == big.terms_.end()) continue;
    s += swapped ? std::conj(it->second) * a : std::conj(a) * it->second;
  }
  return s;
}

double PureState::fidelity(const PureState& other) const {
  const double nn = norm() * other.norm();
  if (nn < 1e-30) throw std::runtime_error("fidelity of zero state");
  const double ov = std::abs(inner(other));
  return (ov * ov) / (nn * nn);
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<int> dims = a.local_dims();
  dims.insert(dims.end(), b.local_dims().begin(), b.local_dims().end());
  PureState r(dims);
  for (const auto& [ia, va] : a.terms())
    for (const auto& [ib, vb] : b.terms()) {
      MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.set_amplitude(idx, va * vb);
    }
  return r;
}

PureState apply_gate(const PureState& psi, const std::vector<int>& sites,
                     const Mat& u) {
  const auto& dims = psi.local_dims();
  std::set<int> seen;
  std::size_t block = 1;
  for (int s : sites) {
    if (s < 1 || s > psi.n_sites())
      throw std::out_of_range("apply_gate: site out of range");
    if (!seen.insert(s).second)
      throw std::invalid_argument("apply_gate: repeated site");
    block *= static_cast<std::size_t>(dims[s - 1]);
  }
  if (u.rows() != block || u.cols() != block)
    throw std::invalid_argument("apply_gate: unitary order mismatch");

  // Group terms by the untouched sites, then mix each block densely.
  std::map<MultiIndex, std::vector<std::pair<std::size_t, cplx>>> groups;
  for (const auto& [idx, a] : psi.terms()) {
    MultiIndex rest = idx;
    std::size_t sub = 0;
    for (int s : sites) {
      sub = sub * dims[s - 1] + idx[s - 1];
      rest[s - 1] = -1;  // mark
    }
    groups[rest].emplace_back(sub, a);
  }
  PureState out(dims);
  for (const auto& [rest, entries] : groups) {
    std::vector<cplx> in(block), res(block);
    for (const auto& [sub, a] : entries) in[sub] = a;
    for (std::size_t r = 0; r < block; ++r) {
      cplx acc = 0;
      for (const auto& [sub, a] : entries) acc += u(r, sub) * a;
      res[r] = acc;
    }
    for (std::size_t r = 0; r < block; ++r) {
      if (std::abs(res[r]) < 1e-15) continue;
      MultiIndex idx = rest;
      std::size_t q = r;
      for (std::size_t k = sites.size(); k-- > 0;) {
        idx[sites[k] - 1] = static_cast<int>(q % dims[sites[k] - 1]);
        q /= dims[sites[k] - 1];
      }
      out.add_amplitude(idx, res[r]);
    }
  }
  return out;
}

std::size_t DensityMatrix::order() const {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

DensityMatrix partial_trace(const PureState& psi, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (int s : ks)
    if (s < 1 || s > psi.n_sites())
      throw std::out_of_range("partial_trace: site out of range");

  const auto& dims = psi.local_dims();
  DensityMatrix rho;
  for (int s : ks) rho.dims.push_back(dims[s - 1]);
  const std::size_t n = rho.order();
  rho.entries = Mat(n, n);

  // Group amplitudes by the traced-out pattern; each group contributes a
  // dense outer product on the kept flat index.
  std::map<MultiIndex, std::vector<std::pair<std::size_t, cplx>>> groups;
  std::vector<bool> kept(dims.size() + 1, false);
  for (int s : ks) kept[s] = true;
  for (const auto& [idx, a] : psi.terms()) {
    MultiIndex rest;
    std::size_t flat = 0;
    for (int s = 1; s <= psi.n_sites(); ++s) {
      if (kept[s])
        flat = flat * dims[s - 1] + idx[s - 1];
      else
        rest.push_back(idx[s - 1]);
    }
    groups[rest].emplace_back(flat, a);
  }
  for (const auto& [rest, entries] : groups)
    for (const auto& [i, ai] : entries)
      for (const auto& [j, aj] : entries)
        rho.entries(i, j) += ai * std::conj(aj);
  return rho;
}

Mat partial_transpose(const DensityMatrix& rho, const std::vector<int>& sites) {
  const std::size_t n = rho.order();
  std::vector<bool> flip(rho.dims.size(), false);
  for (int s : sites) {
    if (s < 1 || s > static_cast<int>(rho.dims.size()))
      throw std::out_of_range("partial_transpose: subsystem out of range");
    flip[s - 1] = true;
  }
  auto unpack = [&](std::size_t f) {
    std::vector<int> digits(rho.dims.size());
    for (std::size_t k = rho.dims.size(); k-- > 0;) {
      digits[k] = static_cast<int>(f % rho.dims[k]);
      f /= rho.dims[k];
    }
    return digits;
  };
  auto pack = [&](const std::vector<int>& digits) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < rho.dims.size(); ++k)
      f = f * rho.dims[k] + digits[k];
    return f;
  };
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> di = unpack(i);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> dj = unpack(j);
      std::vector<int> ri = di, rj = dj;
      for (std::size_t k = 0; k < rho.dims.size(); ++k)
        if (flip[k]) std::swap(ri[k], rj[k]);
      out(pack(ri), pack(rj)) = rho.entries(i, j);
    }
  }
  return out;
}

std::string state_to_json(const PureState& psi) {
  nlohmann::json j;
  j["sites"] = psi.n_sites();
  j["dims"] = psi.local_dims();
  j["terms"] = nlohmann::json::array();
  for (const auto& [idx, a] : psi.terms()) {
    nlohmann::json t;
    t["idx"] = idx;
    t["re"] = a.real();
    t["im"] = a.imag();
    j["terms"].push_back(t);
  }
  j["normalized"] = std::abs(psi.norm() - 1.0) < 1e-12;
  return j.dump(2);
}

PureState state_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("sites") && j.at("sites").get<int>() != static_cast<int>(dims.size()))
    throw std::invalid_argument("state json: sites/dims mismatch");
  PureState psi(dims);
  for (const auto& t : j.at("terms")) {
    const MultiIndex idx = t.at("idx").get<MultiIndex>();
    psi.add_amplitude(idx, cplx(t.at("re").get<double>(),
                                t.value("im", 0.0)));
  }
  return psi;
}

void state_to_file(const PureState& psi, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f << state_to_json(psi) << "\n";
}

PureState state_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return state_from_json(ss.str());
}

}  // namespace entlab

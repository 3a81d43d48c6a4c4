#include "entlab/tensor4.hpp"

#include <cmath>
#include <fstream>
#include <array>
#include <cctype>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace entlab {

namespace {

std::size_t flat_index(int d, int i, int j, int k, int l) {
  return static_cast<std::size_t>((((i - 1) * d + (j - 1)) * d + (k - 1))) *
             d +
         (l - 1);
}

void check_leg(int d, int v) {
  if (v < 1 || v > d) throw std::out_of_range("tensor leg index outside 1..d");
}

// Row/column labels of entry (i,j,k,l) under a pairing, both 0-based.
std::pair<int, int> slot(const Pairing p, int d, int i, int j, int k, int l) {
  switch (p) {
    case Pairing::ij_kl:
      return {(i - 1) * d + (j - 1), (k - 1) * d + (l - 1)};
    case Pairing::ik_jl:
      return {(i - 1) * d + (k - 1), (j - 1) * d + (l - 1)};
    default:
      return {(i - 1) * d + (l - 1), (j - 1) * d + (k - 1)};
  }
}

int side_of(const Mat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("tensor reshaping needs a square matrix");
  const int dd = static_cast<int>(m.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(double(dd))));
  if (d * d != dd)
    throw std::invalid_argument("matrix order is not a perfect square");
  return d;
}

cplx omega_power(int p) {
  return std::polar(1.0, std::numbers::pi * p / 10.0);
}

}  // namespace

FourIndexTensor::FourIndexTensor(int dim) : d(dim) {
  if (dim < 1) throw std::invalid_argument("tensor dimension must be >= 1");
  data.assign(static_cast<std::size_t>(dim) * dim * dim * dim, cplx(0, 0));
}

cplx& FourIndexTensor::at(int i, int j, int k, int l) {
  check_leg(d, i), check_leg(d, j), check_leg(d, k), check_leg(d, l);
  return data[flat_index(d, i, j, k, l)];
}

const cplx& FourIndexTensor::at(int i, int j, int k, int l) const {
  check_leg(d, i), check_leg(d, j), check_leg(d, k), check_leg(d, l);
  return data[flat_index(d, i, j, k, l)];
}

Mat flatten(const FourIndexTensor& t, Pairing p) {
  const int d = t.d;
  Mat m(static_cast<std::size_t>(d) * d, static_cast<std::size_t>(d) * d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          auto [r, c] = slot(p, d, i, j, k, l);
          m(r, c) = t.at(i, j, k, l);
        }
  return m;
}

FourIndexTensor tensor_from_flat(const Mat& m, Pairing p) {
  const int d = side_of(m);
  FourIndexTensor t(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          auto [r, c] = slot(p, d, i, j, k, l);
          t.at(i, j, k, l) = m(r, c);
        }
  return t;
}

bool is_2unitary(const Mat& u, double tol) {
  return is_perfect(tensor_from_flat(u, Pairing::ij_kl), tol);
}

bool is_perfect(const FourIndexTensor& t, double tol) {
  for (Pairing p : {Pairing::ij_kl, Pairing::ik_jl, Pairing::il_jk})
    if (!is_unitary(flatten(t, p), tol)) return false;
  return true;
}

PureState state_from_tensor(const FourIndexTensor& t) {
  PureState psi(std::vector<int>(4, t.d));
  for (int i = 1; i <= t.d; ++i)
    for (int j = 1; j <= t.d; ++j)
      for (int k = 1; k <= t.d; ++k)
        for (int l = 1; l <= t.d; ++l) {
          const cplx a = t.at(i, j, k, l) / double(t.d);
          if (std::abs(a) < 1e-15) continue;
          psi.set_amplitude({i - 1, j - 1, k - 1, l - 1}, a);
        }
  return psi;
}

FourIndexTensor tensor_from_state(const PureState& psi) {
  if (psi.n_sites() != 4)
    throw std::invalid_argument("tensor conversion needs a four-site state");
  const int d = psi.local_dims().front();
  for (int dim : psi.local_dims())
    if (dim != d)
      throw std::invalid_argument("tensor conversion needs equal local dims");
  FourIndexTensor t(d);
  for (const auto& [idx, a] : psi.terms())
    t.at(idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1) = a * double(d);
  return t;
}

bool verify_tensor_state_consistency(const FourIndexTensor& t,
                                     const PureState& psi, double tol) {
  if (psi.n_sites() != 4)
    throw std::invalid_argument("consistency check needs a four-site state");
  for (int dim : psi.local_dims())
    if (dim != t.d)
      throw std::invalid_argument("consistency check: dimension mismatch");
  for (int i = 1; i <= t.d; ++i)
    for (int j = 1; j <= t.d; ++j)
      for (int k = 1; k <= t.d; ++k)
        for (int l = 1; l <= t.d; ++l) {
          const cplx want = t.at(i, j, k, l) / double(t.d);
          const cplx got = psi.amplitude({i - 1, j - 1, k - 1, l - 1});
          if (std::abs(want - got) > tol) return false;
        }
  return true;
}

GoldenConstants golden_constants() {
  const double root5 = std::sqrt(5.0);
  GoldenConstants g;
  g.a = 1.0 / std::sqrt(5.0 + root5);
  g.b = std::sqrt((5.0 + root5) / 20.0);
  g.c = 1.0 / std::sqrt(2.0);
  g.omega = omega_power(1);
  return g;
}

std::vector<RelationCheck> verify_orthogonality_relations() {
  const auto [a, b, c, w0] = golden_constants();
  auto w = [](int p) { return omega_power(p); };
  // Row-orthogonality constellations; each sums to zero on the complex plane.
  return {
      {"bc(1-1)", b * c * (1.0 - 1.0)},
      {"a^2(w^8+w^-8)+b^2(w^4+w^-4)",
       a * a * (w(8) + w(-8)) + b * b * (w(4) + w(-4))},
      {"ab(1+w^2+w^-8-1)", a * b * (1.0 + w(2) + w(-8) - 1.0)},
      {"ab(w^-2+w^2+w^-8+w^8)", a * b * (w(-2) + w(2) + w(-8) + w(8))},
      {"a^2w^4+ab(w^10+w^4)+b^2w^-4",
       a * a * w(4) + a * b * (w(10) + w(4)) + b * b * w(-4)},
      {"a^2w^-3+ab(w^5+w^3)+b^2w^-7",
       a * a * w(-3) + a * b * (w(5) + w(3)) + b * b * w(-7)},
      {"ab(w^-4+w^-6)+bcw^5", a * b * (w(-4) + w(-6)) + b * c * w(5)},
      {"ab(w^-8+w^-2)+acw^5", a * b * (w(-8) + w(-2)) + a * c * w(5)},
      {"a^2+b^2w^4+bcw^-7", a * a + b * b * w(4) + b * c * w(-7)},
  };
}

FourIndexTensor tensor_from_csv(const std::string& path, int d) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file: " + path);
  const auto [ca, cb, cc, w0] = golden_constants();

  struct Row {
    int i, j, k, l;
    cplx value;
  };
  std::vector<Row> rows;
  int max_leg = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!std::isdigit(static_cast<unsigned char>(line[0])) && line[0] != '-')
      continue;  // column-header line
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6)
      throw std::runtime_error("tensor file line " + std::to_string(line_no) +
                               ": expected i,j,k,l,coeff,omega_power");
    Row r;
    try {
      r.i = std::stoi(fields[0]);
      r.j = std::stoi(fields[1]);
      r.k = std::stoi(fields[2]);
      r.l = std::stoi(fields[3]);
      double coeff;
      if (fields[4] == "a")
        coeff = ca;
      else if (fields[4] == "b")
        coeff = cb;
      else if (fields[4] == "c")
        coeff = cc;
      else
        coeff = std::stod(fields[4]);
      r.value = coeff * omega_power(std::stoi(fields[5]));
    } catch (const std::exception&) {
      throw std::runtime_error("tensor file line " + std::to_string(line_no) +
                               ": malformed field");
    }
    if (r.i < 1 || r.j < 1 || r.k < 1 || r.l < 1)
      throw std::runtime_error("tensor file line " + std::to_string(line_no) +
                               ": indices are 1-based");
    max_leg = std::max({max_leg, r.i, r.j, r.k, r.l});
    rows.push_back(r);
  }
  if (rows.empty()) throw std::runtime_error("tensor file has no entries");
  if (d <= 0) d = max_leg;
  if (max_leg > d)
    throw std::runtime_error("tensor file index exceeds dimension " +
                             std::to_string(d));

  FourIndexTensor t(d);
  std::map<std::array<int, 4>, bool> seen;
  for (const Row& r : rows) {
    if (!seen.emplace(std::array<int, 4>{r.i, r.j, r.k, r.l}, true).second)
      throw std::runtime_error("tensor file repeats an index quadruple");
    t.at(r.i, r.j, r.k, r.l) = r.value;
  }
  return t;
}

bool is_butson(const Mat& m, int q, double tol) {
  if (q < 1) throw std::invalid_argument("root order must be positive");
  if (m.rows() != m.cols())
    throw std::invalid_argument("membership needs a square matrix");
  const double scale = std::sqrt(double(m.rows()));
  const double step = 2.0 * std::numbers::pi / q;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const cplx z = m(r, c) * scale;
      if (std::abs(std::abs(z) - 1.0) > tol) return false;
      const double turns = std::arg(z) / step;
      const cplx nearest = std::polar(1.0, step * std::round(turns));
      if (std::abs(z - nearest) > tol) return false;
    }
  return is_unitary(m, tol);
}

}  // namespace entlab

#include "entlab/oa.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace entlab {

namespace {

// all k-subsets of {0..n-1} in lexicographic order
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    f(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool balanced_projection(const OrthogonalArray& oa, const std::vector<int>& cols) {
  // every tuple must occur exactly runs/d^k times
  long long cells = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) cells *= oa.alphabet;
  if (oa.runs % cells != 0) return false;
  const long long expect = oa.runs / cells;
  std::map<std::vector<int>, long long> counts;
  for (int r = 0; r < oa.runs; ++r) {
    std::vector<int> key(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) key[i] = oa.at(r, cols[i]);
    ++counts[key];
  }
  if (static_cast<long long>(counts.size()) != cells) return false;
  for (const auto& [k, c] : counts)
    if (c != expect) return false;
  return true;
}

}  // namespace

OrthogonalArray make_oa(int runs, int cols, int alphabet,
                        std::vector<int> entries) {
  if (runs < 1 || cols < 1 || alphabet < 2)
    throw std::invalid_argument("make_oa: bad shape");
  if (static_cast<int>(entries.size()) != runs * cols)
    throw std::invalid_argument("make_oa: entry count mismatch");
  for (int e : entries)
    if (e < 0 || e >= alphabet)
      throw std::invalid_argument("make_oa: symbol outside alphabet");
  OrthogonalArray oa{runs, cols, alphabet, std::move(entries)};
  std::set<std::vector<int>> rows;
  for (int r = 0; r < runs; ++r) {
    std::vector<int> row(oa.entries.begin() + r * cols,
                         oa.entries.begin() + (r + 1) * cols);
    if (!rows.insert(row).second)
      throw std::invalid_argument("make_oa: duplicate rows (array not simple)");
  }
  return oa;
}

OrthogonalArray oa_from_generator(const GeneratorMatrix& g) {
  const FiniteRing& R = g.ring;
  long long runs = 1;
  for (int i = 0; i < g.rows; ++i) runs *= R.order;
  std::vector<int> entries;
  entries.reserve(runs * g.cols);
  std::vector<int> v(g.rows, 0);
  for (long long code = 0; code < runs; ++code) {
    long long c = code;
    for (int i = g.rows; i-- > 0;) {  // last coefficient least significant
      v[i] = static_cast<int>(c % R.order);
      c /= R.order;
    }
    for (int j = 0; j < g.cols; ++j) {
      int acc = 0;
      for (int i = 0; i < g.rows; ++i)
        acc = R.add(acc, R.mul(v[i], g.at(i, j)));
      entries.push_back(acc);
    }
  }
  try {
    return make_oa(static_cast<int>(runs), g.cols, R.order, std::move(entries));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "oa_from_generator: generator map is not injective (duplicate rows)");
  }
}

int oa_strength(const OrthogonalArray& oa) {
  int k = 0;
  for (int kk = 1; kk <= oa.cols; ++kk) {
    bool ok = true;
    for_each_subset(oa.cols, kk, [&](const std::vector<int>& cols) {
      if (ok && !balanced_projection(oa, cols)) ok = false;
    });
    if (!ok) break;
    k = kk;
  }
  return k;
}

int oa_index(const OrthogonalArray& oa, int k) {
  if (k > oa.cols) throw std::invalid_argument("oa_index: k exceeds columns");
  if (oa_strength(oa) < k)
    throw std::invalid_argument("oa_index: strength below requested k");
  long long cells = 1;
  for (int i = 0; i < k; ++i) cells *= oa.alphabet;
  return static_cast<int>(oa.runs / cells);
}

bool oa_irredundant(const OrthogonalArray& oa, int k) {
  if (k > oa.cols) throw std::invalid_argument("oa_irredundant: k too large");
  const int keep = oa.cols - k;
  if (keep == 0) return oa.runs == 1;
  bool ok = true;
  for_each_subset(oa.cols, keep, [&](const std::vector<int>& cols) {
    if (!ok) return;
    std::set<std::vector<int>> seen;
    for (int r = 0; r < oa.runs; ++r) {
      std::vector<int> key(cols.size());
      for (std::size_t i = 0; i < cols.size(); ++i) key[i] = oa.at(r, cols[i]);
      if (!seen.insert(key).second) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

OrthogonalArray bush_oa(int d, int k) {
  // prime-power factorization of the alphabet
  int p = 2;
  while (d % p != 0) {
    ++p;
    if (p > d) throw std::invalid_argument("bush_oa: d not a prime power");
  }
  int n = 0, m = d;
  while (m > 1) {
    if (m % p != 0) throw std::invalid_argument("bush_oa: d not a prime power");
    m /= p;
    ++n;
  }
  if (k < 1 || k > d) throw std::invalid_argument("bush_oa: need 1 <= k <= d");
  const FiniteRing F =
      n == 1 ? ring_cyclic(p) : ring_galois(p, n, default_irreducible(p, n));

  long long runs = 1;
  for (int i = 0; i < k; ++i) runs *= d;
  std::vector<int> entries;
  entries.reserve(runs * (d + 1));
  for (long long code = 0; code < runs; ++code) {
    // coefficients c_0..c_{k-1}, c_{k-1} most significant in the row order
    std::vector<int> c(k);
    long long q = code;
    for (int i = 0; i < k; ++i) {
      c[i] = static_cast<int>(q % d);
      q /= d;
    }
    for (int alpha = 0; alpha < d; ++alpha) {
      int val = 0;  // Horner evaluation of the polynomial at alpha
      for (int i = k; i-- > 0;) val = F.add(F.mul(val, alpha), c[i]);
      entries.push_back(val);
    }
    entries.push_back(c[k - 1]);  // coefficient of x^{k-1}
  }
  return make_oa(static_cast<int>(runs), d + 1, d, std::move(entries));
}

void oa_to_file(const OrthogonalArray& oa, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f << "# OA " << oa.runs << " " << oa.cols << " " << oa.alphabet << "\n";
  for (int r = 0; r < oa.runs; ++r) {
    for (int c = 0; c < oa.cols; ++c) f << (c ? " " : "") << oa.at(r, c);
    f << "\n";
  }
}

OrthogonalArray oa_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(f, line)) throw std::runtime_error("empty OA file");
  std::istringstream hdr(line);
  std::string hash, tag;
  int runs, cols, alphabet;
  if (!(hdr >> hash >> tag >> runs >> cols >> alphabet) || hash != "#" ||
      tag != "OA")
    throw std::runtime_error("bad OA header: " + line);
  std::vector<int> entries;
  int x;
  while (f >> x) entries.push_back(x);
  return make_oa(runs, cols, alphabet, std::move(entries));
}

}  // namespace entlab

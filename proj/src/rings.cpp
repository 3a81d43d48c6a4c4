#include "entlab/rings.hpp"

#include <algorithm>
#include <stdexcept>

namespace entlab {

namespace {

// ---- polynomial helpers over Z_p (coefficient vectors, index = power) ----

std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul_mod_p(const std::vector<int>& a,
                                const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_trim(r);
}

// a mod m, both over Z_p, m monic
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& m, int p) {
  a = poly_trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int lead = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    for (int k = 0; k <= dm; ++k) {
      int& c = a[k + shift];
      c = ((c - lead * m[k]) % p + p) % p;
    }
    a = poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool poly_irreducible(const std::vector<int>& m, int p) {
  const int n = static_cast<int>(m.size()) - 1;
  if (n < 1 || m.back() != 1) return false;
  // trial division by every monic polynomial of degree 1..n/2
  for (int deg = 1; deg * 2 <= n; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> f(deg + 1, 0);
      int c = code;
      for (int i = 0; i < deg; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[deg] = 1;
      if (poly_rem(m, f, p).empty()) return false;
    }
  }
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<int> decode_base(int code, int base, int len) {
  std::vector<int> digits(len);
  for (int i = 0; i < len; ++i) {
    digits[i] = code % base;
    code /= base;
  }
  return digits;  // digits[k] multiplies x^k / position k
}

int encode_base(const std::vector<int>& digits, int base, int len) {
  int code = 0;
  for (int i = len; i-- > 0;)
    code = code * base + (i < static_cast<int>(digits.size()) ? digits[i] : 0);
  return code;
}

}  // namespace

int FiniteRing::neg(int a) const {
  for (int b = 0; b < order; ++b)
    if (add(a, b) == 0) return b;
  throw std::runtime_error("ring element without additive inverse");
}

FiniteRing ring_cyclic(int d) {
  if (d < 2) throw std::invalid_argument("cyclic ring needs order >= 2");
  FiniteRing r;
  r.kind = FiniteRing::Kind::cyclic;
  r.order = d;
  r.one = 1;
  r.name = "Z" + std::to_string(d);
  r.add_table.resize(d * d);
  r.mul_table.resize(d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      r.add_table[a * d + b] = (a + b) % d;
      r.mul_table[a * d + b] = (a * b) % d;
    }
  return r;
}

FiniteRing ring_galois(int p, int n, const std::vector<int>& poly) {
  if (!is_prime(p)) throw std::invalid_argument("galois: p must be prime");
  if (n < 1) throw std::invalid_argument("galois: n must be >= 1");
  if (static_cast<int>(poly.size()) != n + 1 || poly.back() != 1)
    throw std::invalid_argument("galois: modulus must be monic of degree n");
  for (int c : poly)
    if (c < 0 || c >= p) throw std::invalid_argument("galois: bad coefficient");
  if (!poly_irreducible(poly, p))
    throw std::invalid_argument("galois: modulus is reducible");

  FiniteRing r;
  r.kind = FiniteRing::Kind::galois;
  int order = 1;
  for (int i = 0; i < n; ++i) order *= p;
  r.order = order;
  r.one = 1;
  r.name = "GF(" + std::to_string(order) + ")";
  r.add_table.resize(order * order);
  r.mul_table.resize(order * order);
  for (int a = 0; a < order; ++a) {
    const auto pa = decode_base(a, p, n);
    for (int b = 0; b < order; ++b) {
      const auto pb = decode_base(b, p, n);
      std::vector<int> sum(n);
      for (int k = 0; k < n; ++k) sum[k] = (pa[k] + pb[k]) % p;
      r.add_table[a * order + b] = encode_base(sum, p, n);
      const auto prod = poly_rem(poly_mul_mod_p(pa, pb, p), poly, p);
      r.mul_table[a * order + b] = encode_base(prod, p, n);
    }
  }
  return r;
}

FiniteRing ring_direct_sum(const std::vector<int>& orders) {
  if (orders.size() < 2)
    throw std::invalid_argument("direct sum needs >= 2 components");
  FiniteRing r;
  r.kind = FiniteRing::Kind::direct_sum;
  int order = 1;
  for (int d : orders) {
    if (d < 2) throw std::invalid_argument("direct sum component order < 2");
    order *= d;
  }
  r.order = order;
  r.name = "";
  for (std::size_t i = 0; i < orders.size(); ++i)
    r.name += (i ? "+Z" : "Z") + std::to_string(orders[i]);
  auto decode = [&](int code) {
    std::vector<int> comp(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      comp[i] = code % orders[i];
      code /= orders[i];
    }
    return comp;  // comp[0] most significant, per the 3a+b rule
  };
  auto encode = [&](const std::vector<int>& comp) {
    int code = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
      code = code * orders[i] + comp[i];
    return code;
  };
  r.add_table.resize(order * order);
  r.mul_table.resize(order * order);
  for (int a = 0; a < order; ++a) {
    const auto ca = decode(a);
    for (int b = 0; b < order; ++b) {
      const auto cb = decode(b);
      std::vector<int> s(orders.size()), m(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) {
        s[i] = (ca[i] + cb[i]) % orders[i];
        m[i] = (ca[i] * cb[i]) % orders[i];
      }
      r.add_table[a * order + b] = encode(s);
      r.mul_table[a * order + b] = encode(m);
    }
  }
  r.one = encode(std::vector<int>(orders.size(), 1));
  return r;
}

std::vector<int> default_irreducible(int p, int n) {
  if (p == 2 && n == 2) return {1, 1, 1};  // x^2 + x + 1
  if (p == 3 && n == 2) return {1, 0, 1};  // x^2 + 1
  // lexicographically smallest irreducible monic of degree n
  int count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    std::vector<int> f(n + 1, 0);
    int c = code;
    for (int i = 0; i < n; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[n] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw std::runtime_error("no irreducible polynomial found");
}

FiniteRing ring_make(const std::string& spec) {
  if (spec.rfind("GF(", 0) == 0 && spec.back() == ')') {
    const int q = std::stoi(spec.substr(3, spec.size() - 4));
    int p = 2;
    while (q % p != 0) ++p;
    int n = 0, m = q;
    while (m > 1) {
      if (m % p != 0) throw std::invalid_argument("GF order not a prime power");
      m /= p;
      ++n;
    }
    return ring_galois(p, n, default_irreducible(p, n));
  }
  if (spec.find('+') != std::string::npos) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos < spec.size()) {
      if (spec[pos] != 'Z') throw std::invalid_argument("bad ring spec: " + spec);
      std::size_t end = spec.find('+', pos);
      if (end == std::string::npos) end = spec.size();
      orders.push_back(std::stoi(spec.substr(pos + 1, end - pos - 1)));
      pos = end + 1;
    }
    return ring_direct_sum(orders);
  }
  if (spec.size() > 1 && spec[0] == 'Z') return ring_cyclic(std::stoi(spec.substr(1)));
  throw std::invalid_argument("unknown ring spec: " + spec);
}

void validate_ring(const FiniteRing& r) {
  const int n = r.order;
  auto in_range = [&](int x) { return x >= 0 && x < n; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!in_range(r.add(a, b)) || !in_range(r.mul(a, b)))
        throw std::runtime_error("ring: operation escapes element range");
      if (r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a))
        throw std::runtime_error("ring: commutativity violated");
    }
  for (int a = 0; a < n; ++a) {
    if (r.add(a, 0) != a) throw std::runtime_error("ring: bad additive zero");
    if (r.mul(a, r.one) != a) throw std::runtime_error("ring: bad unit");
    r.neg(a);  // throws if missing
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          throw std::runtime_error("ring: addition not associative");
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          throw std::runtime_error("ring: multiplication not associative");
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          throw std::runtime_error("ring: distributivity violated");
      }
  if (r.kind == FiniteRing::Kind::galois)
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        if (r.mul(a, b) == 0)
          throw std::runtime_error("galois ring has zero divisors");
}

GeneratorMatrix generator_matrix(FiniteRing ring, int rows, int cols,
                                 const std::vector<int>& entries) {
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("generator matrix shape mismatch");
  for (int e : entries)
    if (e < 0 || e >= ring.order)
      throw std::invalid_argument("generator entry outside ring");
  return GeneratorMatrix{std::move(ring), rows, cols, entries};
}

}  // namespace entlab

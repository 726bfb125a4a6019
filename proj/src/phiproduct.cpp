#include "genphi/phiproduct.hpp"

#include <map>

#include "genphi/arith.hpp"

namespace genphi {

u64 phi_pair(u64 a, u64 b) {
  if (a == 0 || b == 0) throw DomainError("phi_pair: arguments must be >= 1");
  u64 g = gcd(a, b);
  u64 phi_a = euler_phi(a);
  u64 phi_g = euler_phi(g);
  // g | a, so phi(g) | phi(a): the division below is exact.
  if (phi_a % phi_g != 0)
    throw InternalError("phi_pair: phi(gcd) does not divide phi(a)");
  return checked_mul(checked_mul(phi_a / phi_g, euler_phi(b)), g);
}

namespace {

// Signed prime-exponent map: the workhorse for exact products of integer and
// ratio factors. Zero exponents are never stored.
using ExpMap = std::map<u64, long long>;

void add_value(ExpMap& acc, u64 v, long long sign) {
  for (const auto& e : factorize(v)) {
    long long& x = acc[e.prime];
    x += sign * (long long)e.exponent;
    if (x == 0) acc.erase(e.prime);
  }
}

void add_map(ExpMap& acc, const ExpMap& m, long long sign) {
  for (const auto& [p, e] : m) {
    long long& x = acc[p];
    x += sign * e;
    if (x == 0) acc.erase(p);
  }
}

ExpMap gcd_map(const ExpMap& a, const ExpMap& b) {
  ExpMap g;
  for (const auto& [p, e] : a) {
    auto it = b.find(p);
    if (it != b.end()) g[p] = std::min(e, it->second);
  }
  return g;
}

// phi of the integer a map represents. pre: all exponents positive.
ExpMap phi_map(const ExpMap& f) {
  ExpMap r;
  for (const auto& [p, e] : f) {
    if (e <= 0) throw InternalError("phi_map: non-positive exponent");
    add_value(r, p - 1, +1);  // p = 2 adds nothing: factorize(1) is empty
    if (e > 1) {
      long long& x = r[p];
      x += e - 1;
      if (x == 0) r.erase(p);
    }
  }
  return r;
}

u128 map_value(const ExpMap& m) {
  u128 v = 1;
  for (const auto& [p, e] : m) {
    if (e < 0)
      throw InternalError("product expansion: non-exact division survived");
    for (long long i = 0; i < e; ++i) v = checked_mul128(v, p);
  }
  return v;
}

struct Builder {
  std::vector<ExpMap> leaves;  // factorizations of the input values
  PhiProductExpansion out;
  ExpMap acc;  // running signed exponents of the final value

  void phi_leaf(size_t i, u64 value) {
    ExpMap phi = phi_map(leaves[i]);
    add_map(acc, phi, +1);
    out.phi_terms.push_back({value, map_value(phi)});
  }

  void ratio(const ExpMap& left, const ExpMap& right) {
    ExpMap g = gcd_map(left, right);
    ExpMap phi_g = phi_map(g);
    add_map(acc, g, +1);
    add_map(acc, phi_g, -1);
    out.ratio_terms.push_back({map_value(g), map_value(phi_g)});
  }

  ExpMap range_product(size_t lo, size_t hi) const {  // [lo, hi)
    ExpMap m;
    for (size_t i = lo; i < hi; ++i) add_map(m, leaves[i], +1);
    return m;
  }

  // Balanced-tree expansion of one block [lo, lo + 2^r) of the value list.
  void expand_pow2_block(std::span<const u64> values, size_t lo, u32 r) {
    size_t len = size_t(1) << r;
    if (len == 1) {
      phi_leaf(lo, values[lo]);
      return;
    }
    for (size_t i = lo; i < lo + len; i += 2) {
      phi_leaf(i, values[i]);
      phi_leaf(i + 1, values[i + 1]);
      ratio(leaves[i], leaves[i + 1]);
    }
    for (u32 level = 1; level < r; ++level) {
      size_t half = size_t(1) << level;
      for (size_t s = lo; s < lo + len; s += 2 * half)
        ratio(range_product(s, s + half), range_product(s + half, s + 2 * half));
    }
  }
};

PhiProductExpansion expand(std::span<const u64> values, bool require_pow2) {
  if (values.empty())
    throw DomainError("phi_product: value list must be non-empty");
  Builder b;
  b.leaves.reserve(values.size());
  for (u64 v : values) {
    if (v == 0) throw DomainError("phi_product: values must be >= 1");
    ExpMap m;
    add_value(m, v, +1);
    b.leaves.push_back(std::move(m));
  }
  // Reject inputs whose plain product leaves the supported width up front,
  // so every traced intermediate below is representable.
  map_value(b.range_product(0, values.size()));

  size_t n = values.size();
  u32 r = 0;
  while (((n >> r) & 1) == 0) ++r;  // n = 2^r * m, m odd
  size_t m = n >> r;
  if (require_pow2 && m != 1)
    throw DomainError("phi_product_pow2: length must be a power of two");

  if (m == 1) {
    b.expand_pow2_block(values, 0, r);
  } else {
    size_t block = size_t(1) << r;
    for (size_t t = 0; t < m; ++t) {
      size_t lo = t * block;
      b.expand_pow2_block(values, lo, r);
      // Correct this block against the product of everything after it; the
      // final block sees an empty tail, i.e. gcd with 1.
      b.ratio(b.range_product(lo, lo + block), b.range_product(lo + block, n));
    }
  }
  b.out.value = map_value(b.acc);
  return b.out;
}

}  // namespace

PhiProductExpansion phi_product_expand_pow2(std::span<const u64> values) {
  return expand(values, true);
}

PhiProductExpansion phi_product_expand(std::span<const u64> values) {
  return expand(values, false);
}

u128 phi_product_pow2(std::span<const u64> values) {
  return expand(values, true).value;
}

u128 phi_product_general(std::span<const u64> values) {
  return expand(values, false).value;
}

u128 euler_phi_of_product(std::span<const u64> values) {
  if (values.empty())
    throw DomainError("euler_phi_of_product: value list must be non-empty");
  ExpMap n;
  for (u64 v : values) {
    if (v == 0) throw DomainError("euler_phi_of_product: values must be >= 1");
    add_value(n, v, +1);
  }
  return map_value(phi_map(n));
}

}  // namespace genphi

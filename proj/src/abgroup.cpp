#include "genphi/abgroup.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "genphi/arith.hpp"

namespace genphi {

CyclicDecomposition::CyclicDecomposition(std::span<const u64> orders) {
  for (u64 d : orders) {
    if (d == 0) throw DomainError("CyclicDecomposition: order 0 is not a group");
    if (d == 1) continue;
    for (const auto& e : factorize(d))
      orders_.push_back(checked_pow(e.prime, e.exponent));
  }
  std::sort(orders_.begin(), orders_.end());
}

u64 CyclicDecomposition::order() const {
  u64 n = 1;
  for (u64 d : orders_) n = checked_mul(n, d);
  return n;
}

bool CyclicDecomposition::is_cyclic() const {
  // Cyclic iff the prime-power components have pairwise distinct primes.
  // Orders are sorted by value, not by prime, so collect primes first.
  std::vector<u64> primes;
  primes.reserve(orders_.size());
  for (u64 d : orders_) {
    u64 p;
    is_prime_power(d, &p);
    primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  return std::adjacent_find(primes.begin(), primes.end()) == primes.end();
}

std::vector<u64> CyclicDecomposition::invariant_factors() const {
  // Stack the j-th largest power of each prime into the j-th largest
  // invariant factor; the count of factors is the largest per-prime
  // component count.
  std::map<u64, std::vector<u64>> by_prime;  // prime -> powers, descending
  for (u64 d : orders_) {
    u64 p;
    is_prime_power(d, &p);
    by_prime[p].push_back(d);
  }
  size_t t = 0;
  for (auto& kv : by_prime) {
    std::sort(kv.second.begin(), kv.second.end(), std::greater<>());
    t = std::max(t, kv.second.size());
  }
  std::vector<u64> chain(t, 1);  // chain[0] = largest
  for (const auto& kv : by_prime)
    for (size_t j = 0; j < kv.second.size(); ++j)
      chain[j] = checked_mul(chain[j], kv.second[j]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::string CyclicDecomposition::to_text() const {
  if (orders_.empty()) return "Z1";
  std::string s;
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += " x ";
    s += "Z" + std::to_string(orders_[i]);
  }
  return s;
}

CyclicDecomposition CyclicDecomposition::parse_text(std::string_view text) {
  std::vector<u64> orders;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    if (!first) {
      if (text[i] != 'x' && text[i] != 'X')
        throw DomainError("parse_text: expected 'x' between factors");
      ++i;
      skip_ws();
    }
    if (i >= text.size() || (text[i] != 'Z' && text[i] != 'z'))
      throw DomainError("parse_text: expected 'Z<order>'");
    ++i;
    u64 value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i)
      throw DomainError("parse_text: bad order after 'Z'");
    if (value == 0) throw DomainError("parse_text: order 0 is not a group");
    orders.push_back(value);
    i = ptr - text.data();
    skip_ws();
    first = false;
  }
  if (first) throw DomainError("parse_text: empty input");
  return CyclicDecomposition(orders);
}

CyclicDecomposition CyclicDecomposition::direct_sum(
    const CyclicDecomposition& other) const {
  CyclicDecomposition r;
  r.orders_.reserve(orders_.size() + other.orders_.size());
  std::merge(orders_.begin(), orders_.end(), other.orders_.begin(),
             other.orders_.end(), std::back_inserter(r.orders_));
  return r;
}

}  // namespace genphi

#pragma once
// Shared integer types, the error taxonomy, and overflow-checked helpers.
//
// Error classes map onto CLI exit codes:
//   DomainError   -> 1  (input violates a documented precondition)
//   BoundError    -> 2  (work refused: configured bound or supported width exceeded)
//   InternalError -> 3  (a self-check failed; indicates a bug, not bad input)

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genphi {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr const char* kVersion = "1.0.0";

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic would leave the supported integer width. A kind of BoundError:
// the inputs were legal but too large for exact computation.
class OverflowError : public BoundError {
 public:
  using BoundError::BoundError;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline u64 checked_pow(u64 base, u32 exp) {
  u64 r = 1;
  while (exp) {
    if (exp & 1) r = checked_mul(r, base);
    exp >>= 1;
    if (exp) base = checked_mul(base, base);
  }
  return r;
}

inline u128 checked_mul128(u128 a, u128 b) {
  if (a != 0 && b > ~(u128)0 / a)
    throw OverflowError("128-bit overflow in multiplication");
  return a * b;
}

std::string to_string_u128(u128 v);

// Current time as an ISO-8601 UTC string, e.g. "2025-06-01T12:00:00Z".
std::string iso8601_utc_now();

}  // namespace genphi

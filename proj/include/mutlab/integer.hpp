#pragma once

#include <cstdint>
#include <numeric>

#include "mutlab/errors.hpp"

namespace mutlab {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

/// [b]_+ = max(b, 0).
constexpr Int positive_part(Int b) noexcept { return b > 0 ? b : 0; }

/// sgn with sgn(0) = 0.
constexpr int sgn(Int b) noexcept { return (b > 0) - (b < 0); }

inline Int checked_lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace mutlab

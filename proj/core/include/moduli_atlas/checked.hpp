#pragma once

#include <cstdint>

#include "moduli_atlas/errors.hpp"

namespace moduli_atlas {

using Int = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every lattice formula goes through
// these; a wrap throws OverflowError instead of producing garbage.
namespace ck {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

template <typename... Rest>
Int add(Int a, Int b, Rest... rest) {
  return add(add(a, b), rest...);
}

template <typename... Rest>
Int mul(Int a, Int b, Rest... rest) {
  return mul(mul(a, b), rest...);
}

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

/// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Ceiling division for b > 0.
inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

}  // namespace ck
}  // namespace moduli_atlas

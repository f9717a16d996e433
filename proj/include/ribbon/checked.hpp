#pragma once

#include <cstdint>

#include "ribbon/errors.hpp"

namespace ribbon::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

/// Floor division; b must be positive.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline bool is_even(std::int64_t a) { return a % 2 == 0; }

}  // namespace ribbon::checked

#pragma once

#include <cstdint>
#include <initializer_list>

#include "topoindex/error.hpp"

namespace topoindex {

// All index arithmetic is signed 64-bit; wraparound is never acceptable.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "64-bit addition overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "64-bit subtraction overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "64-bit multiplication overflow");
  return out;
}

inline std::int64_t checked_product(std::initializer_list<std::int64_t> factors) {
  std::int64_t out = 1;
  for (auto f : factors) out = checked_mul(out, f);
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned exponent) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace topoindex

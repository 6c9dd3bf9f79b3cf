#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace kempner {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// a*b with overflow detection.
inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("u64 multiplication overflow");
  return r;
}

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("u64 addition overflow");
  return r;
}

/// base^exp in u64, throwing on overflow.
inline u64 checked_pow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline BigInt big_pow(u64 base, u64 exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace kempner

#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include <boost/rational.hpp>

#include "factorinv/error.hpp"

namespace factorinv {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

inline Int checked_dot(std::span<const Int> a, std::span<const Int> b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = checked_add(acc, checked_mul(a[i], b[i]));
  }
  return acc;
}

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

// Non-negative residue of a modulo m (m >= 1).
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Exact comparison of p/q against r/s without floating point.
inline bool rational_equal(Int p, Int q, Int r, Int s) {
  __extension__ using Wide = __int128;
  return static_cast<Wide>(p) * s == static_cast<Wide>(r) * q;
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace factorinv

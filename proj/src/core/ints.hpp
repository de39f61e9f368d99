#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace artin3 {

// Arbitrary-precision integers and rationals. Rationals are kept reduced
// with positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Rat abs(const Rat& a) { return boost::multiprecision::abs(a); }

inline Int pow_int(Int base, uint64_t e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Floor division (rounds toward negative infinity); b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  check(b != 0, Err::InvalidArgument, "division by zero");
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Floor of the square root; argument must be nonnegative.
inline Int isqrt_floor(const Int& a) {
  check(a >= 0, Err::InvalidArgument, "isqrt of negative value");
  return boost::multiprecision::sqrt(a);
}

inline bool is_square(const Int& a, Int* root = nullptr) {
  if (a < 0) return false;
  Int s = boost::multiprecision::sqrt(a);
  if (s * s == a) {
    if (root) *root = s;
    return true;
  }
  return false;
}

// Exact k-th root test for k >= 1.
inline bool is_perfect_power_of(const Int& a, unsigned k, Int* root = nullptr) {
  if (k == 0) return false;
  if (a < 0 && k % 2 == 0) return false;
  Int target = abs(a);
  // Binary search for floor k-th root.
  Int lo = 0, hi = target + 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (pow_int(mid, k) <= target) lo = mid; else hi = mid;
  }
  if (pow_int(lo, k) != target) return false;
  if (root) *root = (a < 0) ? -lo : lo;
  return true;
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    fail(Err::SchemaError, "cannot parse rational: " + s);
  }
}

inline Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    fail(Err::SchemaError, "cannot parse integer: " + s);
  }
}

inline int64_t to_i64(const Int& a) {
  check(a >= std::numeric_limits<int64_t>::min() && a <= std::numeric_limits<int64_t>::max(),
        Err::InvalidArgument, "value out of 64-bit range");
  return static_cast<int64_t>(a);
}

}  // namespace artin3

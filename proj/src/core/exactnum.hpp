#pragma once

#include <utility>
#include <vector>

#include "core/ints.hpp"

namespace artin3 {

// Element of the cyclotomic field Q(zeta_n), stored as a rational vector in
// the power basis 1, zeta, ..., zeta^{phi(n)-1} reduced modulo the n-th
// cyclotomic polynomial. The stored conductor is 1 or a value not congruent
// to 2 mod 4 (Q(zeta_{2m}) = Q(zeta_m) for odd m), and never exceeds
// kMaxConductor. Arithmetic between different conductors embeds both
// operands into the compositum first.
class CycNum {
public:
  static constexpr int kMaxConductor = 120;

  CycNum() : n_(1), c_(1, Rat(0)) {}
  CycNum(const Rat& r) : n_(1), c_(1, r) {}
  CycNum(int64_t v) : n_(1), c_(1, Rat(v)) {}

  // zeta_k^power. Any integer power is accepted.
  static CycNum root_of_unity(int k, int64_t power = 1);

  // Construct from an explicit coefficient vector of length phi(n).
  static CycNum from_coeffs(int n, std::vector<Rat> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Exact rational value; NonIntegerResult if the element is irrational.
  Rat to_rational() const;
  // Exact rational integer value; NonIntegerResult otherwise.
  Int to_integer() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  // Multiplicative inverse; ZeroElement on zero.
  CycNum inverse() const;

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Galois action zeta -> zeta^a for gcd(a, n) = 1; a = -1 is complex
  // conjugation and is an involution.
  CycNum galois(int64_t a) const;
  CycNum conjugate() const { return galois(-1); }

  bool is_real() const { return conjugate() == *this; }

  // Rewrites the element over the smallest cyclotomic subfield containing
  // it. Canonical form for serialization and ordering.
  CycNum minimal_form() const;

  // Rewrites over Q(zeta_m); m must be a normalized multiple of the current
  // conductor. Used to put containers of elements on a common basis.
  CycNum to_conductor(int m) const;

  // Order on the raw (conductor, coefficient) representation. Total order
  // only within a fixed common conductor; cheaper than compare().
  static int compare_raw(const CycNum& a, const CycNum& b);

  // Certified enclosure of a real element: a dyadic interval [lo, hi] with
  // hi - lo <= 2^-bits. NotRealValued on non-real input. bits <= 140.
  std::pair<Rat, Rat> approx_real(unsigned bits) const;

  // Strict total order on elements of equal conductor vectors; used for
  // deterministic containers. Compares (conductor, coeff vector) of the
  // minimal form.
  static int compare(const CycNum& a, const CycNum& b);

  std::string str() const;

private:
  int n_;
  std::vector<Rat> c_;

  CycNum embedded(int m) const;  // n_ | m, m normalized
  static void align(CycNum& a, CycNum& b);
};

inline CycNum operator*(const Rat& r, const CycNum& x) { return CycNum(r) * x; }

// phi(n) for n >= 1.
int euler_phi(int n);

// n-th cyclotomic polynomial, monic, as integer coefficient vector
// (degree phi(n), ascending). Cached; n <= CycNum::kMaxConductor.
const std::vector<Int>& cyclotomic_poly(int n);

}  // namespace artin3

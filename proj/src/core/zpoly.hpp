#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/ints.hpp"

namespace artin3 {

// Dense univariate polynomial over the integers, coefficient of x^i at
// index i, no trailing zeros. Every caller works at degree <= 12, so the
// algorithms favor certified simplicity over asymptotics: Sylvester
// determinants for resultants, Yun squarefree splitting plus mod-p
// factorization, linear Hensel lifting, and subset recombination over Z.
struct ZPoly {
  std::vector<Int> c;

  ZPoly() = default;
  ZPoly(std::initializer_list<int64_t> lo_to_hi);
  static ZPoly from_coeffs(std::vector<Int> lo_to_hi);
  static ZPoly constant(const Int& v);
  // v * x^k.
  static ZPoly monomial(const Int& v, int k);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  // Leading coefficient; zero polynomial is rejected.
  const Int& lc() const;
  // Coefficient of x^i, zero outside the stored range.
  Int coeff(int i) const;
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator-() const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const Int& k) const;
  bool operator==(const ZPoly& o) const { return c == o.c; }
  bool operator!=(const ZPoly& o) const { return c != o.c; }
  // Total order: degree, then coefficients from the constant term up.
  bool operator<(const ZPoly& o) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  ZPoly derivative() const;
  // Nonnegative gcd of the coefficients; zero for the zero polynomial.
  Int content() const;
  // this / content, with positive leading coefficient; zero stays zero.
  ZPoly primitive_part() const;
  // f(x + a).
  ZPoly shift(const Int& a) const;
  std::string str() const;
};

// Quotient of an exact division in Z[x]; false when g does not divide f
// there (including rational-only quotients). g must be nonzero.
bool try_divide_exact(const ZPoly& f, const ZPoly& g, ZPoly* quotient);

// Primitive gcd with positive leading coefficient (contents are ignored);
// both arguments zero yields zero.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

// Resultant Res(a, b) = lc(a)^deg(b) * prod b over the roots of a, via a
// fraction-free Sylvester determinant. Zero if either argument is zero;
// 1 if both are nonzero constants.
Int resultant(const ZPoly& a, const ZPoly& b);

// Discriminant of a monic polynomial of degree >= 2:
// (-1)^(d(d-1)/2) * Res(f, f').
Int poly_disc(const ZPoly& f);

// One irreducible factor with its multiplicity.
struct ZFactor {
  ZPoly poly;  // primitive, positive leading coefficient
  int mult;
};

// Exact factorization over Z: f = content * prod poly^mult with every
// factor irreducible, primitive, of positive leading coefficient, in a
// deterministic order. f must be nonzero; degree <= 12.
std::pair<Int, std::vector<ZFactor>> factor_z(const ZPoly& f);

// True iff f has degree >= 1, content +-1, and a single factor of
// multiplicity one.
bool irreducible_z(const ZPoly& f);

// Factorization shape of f mod p: sorted (degree, multiplicity) pairs over
// the irreducible factors. p must be an odd-or-2 prime below 2^31 not
// dividing the leading coefficient of f.
std::vector<std::pair<int, int>> factor_shape_mod_p(const ZPoly& f, const Int& p);

// Full factorization mod p with the monic factors lifted to integer
// polynomials with coefficients in [0, p), deterministically ordered.
// Same preconditions as factor_shape_mod_p.
std::vector<std::pair<ZPoly, int>> factor_mod_p_lifted(const ZPoly& f, const Int& p);

// Monic gcd of a and b mod p, lifted to coefficients in [0, p).
ZPoly poly_gcd_mod_p(const ZPoly& a, const ZPoly& b, const Int& p);

// Division with remainder mod p; the divisor must not vanish mod p.
std::pair<ZPoly, ZPoly> poly_divrem_mod_p(const ZPoly& num, const ZPoly& den, const Int& p);

}  // namespace artin3

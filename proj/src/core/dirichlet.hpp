#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core/exactnum.hpp"
#include "core/ints.hpp"

namespace artin3 {

// (Z/n)* presented by independent cyclic generators, one CRT component per
// odd prime power and the (-1, 5) pair at 2^k for k >= 3.
class UnitGroup {
public:
  static std::shared_ptr<const UnitGroup> of(int64_t n);

  int64_t modulus() const { return n_; }
  Int size() const;  // Euler phi
  // (generator lifted mod n, order), in a fixed deterministic order.
  const std::vector<std::pair<int64_t, int64_t>>& generators() const { return gens_; }
  // Exponents of a on the generators; InvalidArgument unless gcd(a, n) = 1.
  std::vector<int64_t> dlog(int64_t a) const;

private:
  struct Component {
    int64_t prime;
    int exp;
    int64_t pk;                                       // prime^exp
    std::vector<std::pair<int64_t, int64_t>> gens;    // (gen mod pk, order)
  };
  explicit UnitGroup(int64_t n);
  int64_t n_ = 1;
  std::vector<Component> comps_;
  std::vector<std::pair<int64_t, int64_t>> gens_;     // lifted mod n
};

// Primitive Dirichlet character, stored on its conductor. Values are roots
// of unity e^{2 pi i t / m}, reported as reduced pairs (m, t).
class DirichletCharacter {
public:
  DirichletCharacter();  // trivial, conductor 1

  // Character mod n with the given exponents on unit_group(n) generators,
  // normalized to its primitive core.
  static DirichletCharacter from_exponents(int64_t n, std::vector<int64_t> exps);

  int64_t conductor() const { return conductor_; }
  const std::vector<int64_t>& exponents() const { return exps_; }
  int64_t order() const;
  bool is_trivial() const { return conductor_ == 1; }
  bool is_real() const { return order() <= 2; }
  DirichletCharacter inverse() const;

  // Value at a unit, as (denominator m, numerator t) with 0 <= t < m,
  // gcd(t, m) = 1 or t = 0. InvalidArgument when gcd(a, conductor) > 1.
  std::pair<int64_t, int64_t> value_at(int64_t a) const;
  // Same value as an exact cyclotomic number; 0 on non-units.
  CycNum value_cyc(int64_t a) const;

  bool operator==(const DirichletCharacter& o) const {
    return conductor_ == o.conductor_ && exps_ == o.exps_;
  }
  bool operator!=(const DirichletCharacter& o) const { return !(*this == o); }
  bool operator<(const DirichletCharacter& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    return exps_ < o.exps_;
  }

private:
  int64_t conductor_ = 1;
  std::vector<int64_t> exps_;
  std::shared_ptr<const UnitGroup> group_;
};

// Unordered triple of primitive characters; the shape of an abelian
// three-dimensional representation.
struct AbelianTriple {
  std::array<DirichletCharacter, 3> chars;  // sorted

  AbelianTriple(DirichletCharacter a, DirichletCharacter b, DirichletCharacter c);
  Int total_conductor() const;
  // Closed under inversion as a multiset.
  bool self_dual() const;
  bool operator==(const AbelianTriple& o) const { return chars == o.chars; }
  bool operator<(const AbelianTriple& o) const { return chars < o.chars; }
};

// All primitive characters of conductor <= x, ordered by (conductor,
// exponent vector).
std::vector<DirichletCharacter> enumerate_primitive(int64_t x);

// The real ones among them: trivial plus one character per fundamental
// discriminant D with |D| <= x.
std::vector<DirichletCharacter> quadratic_characters(int64_t x);

// Multisets {chi1, chi2, chi3} of primitive characters with product of
// conductors <= x; and the sub-count of multisets closed under inversion.
Int count_ab3(int64_t x);
Int count_ab_sd3(int64_t x);

// CSV rows "x,count_ab3,count_ab_sd3,ratio" with a fixed six-decimal ratio.
std::string abelian_census_csv(const std::vector<int64_t>& xs);

// Kronecker symbol (a / n), full extension: multiplicative in n, with the
// standard conventions at 2, -1 and 0.
int kronecker(Int a, Int n);

bool is_fundamental_discriminant(const Int& d);

}  // namespace artin3

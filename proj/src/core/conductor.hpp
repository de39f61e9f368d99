#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/chartable.hpp"
#include "core/ints.hpp"

namespace artin3 {

// Positive integer kept in factored form; the plain value is derived.
struct Conductor {
  std::map<Int, int> factored;  // prime -> exponent >= 1

  static Conductor one() { return {}; }
  static Conductor from_factored(std::map<Int, int> f);  // validates
  static Conductor from_value(const Int& v);             // v >= 1, factorized

  Int value() const;
  int exponent_at(const Int& p) const;
  bool disjoint_from(const Conductor& o) const;
  Conductor operator*(const Conductor& o) const;
  Conductor pow(int k) const;  // k >= 0
  bool operator==(const Conductor& o) const { return factored == o.factored; }
  bool operator!=(const Conductor& o) const { return !(*this == o); }
  std::string to_json() const;  // {"2": 3, "7": 1}
};

// Local inertia data at one prime: tame cyclic of small order, or wild.
struct InertiaDatum {
  bool wild = false;
  int order = 0;                  // tame only, in {2,3,4,5}
  std::optional<char> a5_class;   // 'A' (order 2), 'B' (3), 'C' (5)

  static InertiaDatum tame(int e, std::optional<char> cls = std::nullopt);
  static InertiaDatum wild_at();
};

struct RamificationProfile {
  std::map<Int, InertiaDatum> entries;
  // Validates: wild only at 2, 3, 5; tame order in {2,3,4,5} with p not
  // dividing it; class letter, when present, matches the order.
  void set(const Int& p, const InertiaDatum& d);
};

// Tame twist support: primes with inertia order 2 (A), 3 (B), 5 (C), split
// by whether the twisting character is ramified there (primed) or not.
struct TwistSupport {
  std::vector<Int> a1, a2;  // A', A''
  std::vector<Int> b1, b2;  // B', B''
  std::vector<Int> c1, c2;  // C', C''
};

// dim(V / V^I) = deg chi - <chi|_I, 1>, for cyclic I. NonCyclicInertia
// otherwise.
int tame_exponent(const ClassFunction& chi, const SubgroupEmbedding& I);

// Product over the tame entries of p^{tame_exponent}, with the inertia
// subgroup of order e supplied by the resolver. Wild entries are skipped;
// their contribution is capped separately. UnresolvableInertia when the
// resolver lacks an order or supplies a mismatched subgroup.
Conductor tame_conductor(const ClassFunction& chi, const RamificationProfile& profile,
                         const std::map<int, SubgroupEmbedding>& inertia_resolver);

// Uniform cap on the wild part of the field discriminant: 2^11 3^7 for
// quartic resolvents, 2^14 3^9 5^9 for quintic. UnsupportedDegree otherwise.
Conductor wild_cap(int m);

// Conductor of a monomial representation: field discriminant times the
// character conductor.
Conductor induced_conductor(const Int& d_M, const Conductor& q_chi);

// q(sigma tensor epsilon) = q(sigma tensor chi) q(chi')^3 for chi' of
// conductor prime to everything in sight. SupportOverlap if the two
// supports meet.
Conductor twist_conductor(const Conductor& q_sigma_chi, const Conductor& q_chi_prime);

// Exponents 1, 2 on A', A''; 3, 2 on B', B''; 3, 2 on C', C''.
// InvalidSupport unless the sets are disjoint primes above 5.
Conductor twist_tame_exponents(const TwistSupport& support);

// prod_A p^2 prod_B p^2 prod_C p^4, same validation.
Int tame_disc_bound_A5(const std::vector<Int>& A, const std::vector<Int>& B,
                       const std::vector<Int>& C);

// Certified discriminant bound: cap * ceil(q^{3/2}) for A4 and S4,
// cap * q^2 for A5.
Int disc_from_conductor_bound(const std::string& group, const Conductor& q);

// Shape check for quadratic character conductors 2^alpha * squarefree odd:
// alpha in {0, 2, 3}. Returns (alpha, odd primes). NotQuadraticConductor
// otherwise.
std::pair<int, std::vector<Int>> epsilon_conductor_shape(const Conductor& q);

}  // namespace artin3

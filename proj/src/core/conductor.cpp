#include "core/conductor.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "core/primes.hpp"

namespace artin3 {

Conductor Conductor::from_factored(std::map<Int, int> f) {
  for (const auto& [p, e] : f) {
    check(is_prime(p), Err::InvalidArgument, "conductor key is not prime");
    check(e >= 1, Err::InvalidArgument, "conductor exponent below one");
  }
  return {std::move(f)};
}

Conductor Conductor::from_value(const Int& v) {
  check(v >= 1, Err::InvalidArgument, "conductor must be positive");
  return {factorize(v)};
}

Int Conductor::value() const {
  Int v = 1;
  for (const auto& [p, e] : factored) v *= pow_int(p, e);
  return v;
}

int Conductor::exponent_at(const Int& p) const {
  auto it = factored.find(p);
  return it == factored.end() ? 0 : it->second;
}

bool Conductor::disjoint_from(const Conductor& o) const {
  for (const auto& [p, e] : factored)
    if (o.factored.count(p)) return false;
  return true;
}

Conductor Conductor::operator*(const Conductor& o) const {
  Conductor r = *this;
  for (const auto& [p, e] : o.factored) r.factored[p] += e;
  return r;
}

Conductor Conductor::pow(int k) const {
  check(k >= 0, Err::InvalidArgument, "negative conductor power");
  if (k == 0) return one();
  Conductor r = *this;
  for (auto& [p, e] : r.factored) e *= k;
  return r;
}

std::string Conductor::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [p, e] : factored) j[p.str()] = e;
  return j.dump();
}

InertiaDatum InertiaDatum::tame(int e, std::optional<char> cls) {
  InertiaDatum d;
  d.wild = false;
  d.order = e;
  d.a5_class = cls;
  return d;
}

InertiaDatum InertiaDatum::wild_at() {
  InertiaDatum d;
  d.wild = true;
  return d;
}

void RamificationProfile::set(const Int& p, const InertiaDatum& d) {
  check(is_prime(p), Err::InvalidArgument, "profile key is not prime");
  if (d.wild) {
    check(p == 2 || p == 3 || p == 5, Err::InvalidArgument, "wild inertia only at 2, 3, 5");
    check(!d.a5_class.has_value(), Err::InvalidArgument, "class letter on a wild entry");
  } else {
    check(d.order >= 2 && d.order <= 5, Err::InvalidArgument, "tame order outside 2..5");
    check(Int(d.order) % p != 0, Err::InvalidArgument, "inertia order divisible by p is wild");
    if (d.a5_class.has_value()) {
      char want = d.order == 2 ? 'A' : d.order == 3 ? 'B' : d.order == 5 ? 'C' : '?';
      check(*d.a5_class == want, Err::InvalidArgument, "class letter does not match the order");
    }
  }
  entries[p] = d;
}

int tame_exponent(const ClassFunction& chi, const SubgroupEmbedding& I) {
  check(I.sub->is_cyclic(), Err::NonCyclicInertia, "tame inertia must be cyclic");
  Int fixed = trivial_multiplicity(chi, I);
  Int deg = chi.degree().to_integer();
  check(fixed <= deg, Err::Internal, "fixed space larger than the space");
  return static_cast<int>(to_i64(deg - fixed));
}

Conductor tame_conductor(const ClassFunction& chi, const RamificationProfile& profile,
                         const std::map<int, SubgroupEmbedding>& inertia_resolver) {
  Conductor q;
  for (const auto& [p, d] : profile.entries) {
    if (d.wild) continue;
    auto it = inertia_resolver.find(d.order);
    check(it != inertia_resolver.end(), Err::UnresolvableInertia,
          "no inertia subgroup supplied for this order");
    const SubgroupEmbedding& I = it->second;
    check(I.sub->is_cyclic() && I.sub->order() == size_t(d.order), Err::UnresolvableInertia,
          "resolved subgroup is not cyclic of the required order");
    check(same_group(I.parent, chi.group), Err::UnresolvableInertia,
          "resolved subgroup lives in a different group");
    int e = tame_exponent(chi, I);
    if (e > 0) q.factored[p] = e;
  }
  return q;
}

Conductor wild_cap(int m) {
  if (m == 4) return Conductor::from_factored({{2, 11}, {3, 7}});
  if (m == 5) return Conductor::from_factored({{2, 14}, {3, 9}, {5, 9}});
  fail(Err::UnsupportedDegree, "wild cap known for degrees 4 and 5 only");
}

Conductor induced_conductor(const Int& d_M, const Conductor& q_chi) {
  return Conductor::from_value(d_M) * q_chi;
}

Conductor twist_conductor(const Conductor& q_sigma_chi, const Conductor& q_chi_prime) {
  check(q_sigma_chi.disjoint_from(q_chi_prime), Err::SupportOverlap,
        "twisting character shares a ramified prime");
  return q_sigma_chi * q_chi_prime.pow(3);
}

namespace {

void collect(const std::vector<Int>& ps, int exp, std::set<Int>& seen, Conductor& q) {
  for (const Int& p : ps) {
    check(p > 5 && is_prime(p), Err::InvalidSupport, "support primes must be primes above 5");
    check(seen.insert(p).second, Err::InvalidSupport, "support sets are not disjoint");
    q.factored[p] += exp;
  }
}

}  // namespace

Conductor twist_tame_exponents(const TwistSupport& s) {
  Conductor q;
  std::set<Int> seen;
  collect(s.a1, 1, seen, q);
  collect(s.a2, 2, seen, q);
  collect(s.b1, 3, seen, q);
  collect(s.b2, 2, seen, q);
  collect(s.c1, 3, seen, q);
  collect(s.c2, 2, seen, q);
  return q;
}

Int tame_disc_bound_A5(const std::vector<Int>& A, const std::vector<Int>& B,
                       const std::vector<Int>& C) {
  Conductor q;
  std::set<Int> seen;
  collect(A, 2, seen, q);
  collect(B, 2, seen, q);
  collect(C, 4, seen, q);
  return q.value();
}

Int disc_from_conductor_bound(const std::string& group, const Conductor& q) {
  Int c = wild_cap(group == "A5" ? 5 : 4).value();
  Int v = q.value();
  if (group == "A4" || group == "S4") {
    Int cube = v * v * v;
    Int s = isqrt_floor(cube);
    if (s * s != cube) s += 1;
    return c * s;
  }
  if (group == "A5") return c * v * v;
  fail(Err::InvalidArgument, "group must be A4, S4 or A5");
}

std::pair<int, std::vector<Int>> epsilon_conductor_shape(const Conductor& q) {
  int alpha = q.exponent_at(2);
  check(alpha == 0 || alpha == 2 || alpha == 3, Err::NotQuadraticConductor,
        "exponent at 2 must be 0, 2 or 3");
  std::vector<Int> odd;
  for (const auto& [p, e] : q.factored) {
    if (p == 2) continue;
    check(e == 1, Err::NotQuadraticConductor, "odd part must be squarefree");
    odd.push_back(p);
  }
  return {alpha, odd};
}

}  // namespace artin3

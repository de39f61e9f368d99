#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "core/conductor.hpp"
#include "core/matgroup.hpp"
#include "core/primes.hpp"

using namespace artin3;

namespace {

Err code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Err(0);
}

// Exact rank of a 3x3 matrix by Gaussian elimination; used as a fixed-space
// oracle independent of character theory.
int rank3(Matrix3 m) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < 3; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    CycNum inv = m.at(rank, col).inverse();
    for (int c = 0; c < 3; ++c) m.at(rank, c) *= inv;
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      CycNum f = m.at(r, col);
      for (int c = 0; c < 3; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

int fixed_space_dim(const Matrix3& g) {
  Matrix3 d = g;
  for (int i = 0; i < 3; ++i) d.at(i, i) -= CycNum(1);
  return 3 - rank3(d);
}

const ClassFunction& row_of_degree(const std::vector<ClassFunction>& table, int64_t deg,
                                   size_t skip = 0) {
  for (const auto& chi : table)
    if (chi.degree() == CycNum(deg)) {
      if (skip == 0) return chi;
      --skip;
    }
  REQUIRE(false);
  return table[0];
}

}  // namespace

TEST_CASE("primality and factorization") {
  auto sieve = primes_up_to(10000);
  std::set<uint32_t> sieved(sieve.begin(), sieve.end());
  for (uint32_t n = 0; n <= 10000; ++n) CHECK(is_prime(Int(n)) == (sieved.count(n) > 0));
  CHECK(sieve.size() == 1229);
  CHECK(sieve[0] == 2);
  CHECK(sieve.back() == 9973);

  CHECK(is_prime(Int("1000000007")));
  CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
  CHECK(!is_prime(Int("2305843009213693953")));  // 2^61 + 1 = 3 * ...

  CHECK(factorize(1).empty());
  std::map<Int, int> m360{{2, 3}, {3, 2}, {5, 1}};
  CHECK(factorize(360) == m360);

  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 200; ++t) {
    Int n = Int(rng() % 1000000000000ULL) + 1;
    auto f = factorize(n);
    Int prod = 1;
    for (const auto& [p, e] : f) {
      CHECK(is_prime(p));
      CHECK(e >= 1);
      prod *= pow_int(p, e);
    }
    CHECK(prod == n);
  }
  // Large prime cofactor exercises the early exit.
  Int big = Int("1000000007") * 12;
  auto f = factorize(big);
  CHECK(f.at(Int("1000000007")) == 1);
  CHECK(f.at(2) == 2);
  CHECK(f.at(3) == 1);
}

TEST_CASE("conductor arithmetic") {
  Conductor q = Conductor::from_value(360);
  CHECK(q.value() == 360);
  CHECK(q.exponent_at(2) == 3);
  CHECK(q.exponent_at(7) == 0);
  CHECK(Conductor::one().value() == 1);

  CHECK(code_of([] { Conductor::from_factored({{4, 1}}); }) == Err::InvalidArgument);
  CHECK(code_of([] { Conductor::from_factored({{3, 0}}); }) == Err::InvalidArgument);
  CHECK(code_of([] { Conductor::from_value(0); }) == Err::InvalidArgument);

  Conductor a = Conductor::from_value(12), b = Conductor::from_value(35);
  CHECK(a.disjoint_from(b));
  CHECK(!a.disjoint_from(Conductor::from_value(9)));
  CHECK((a * b).value() == 420);
  CHECK(a.pow(3).value() == 12 * 12 * 12);
  CHECK(a.pow(0) == Conductor::one());

  // Multiplicativity over disjoint supports.
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Conductor x = Conductor::from_value(Int(rng() % 5000 + 1));
    Conductor y = Conductor::from_value(Int(rng() % 5000 + 1));
    if (!x.disjoint_from(y)) continue;
    CHECK((x * y).value() == x.value() * y.value());
  }

  CHECK(Conductor::from_factored({{2, 3}, {7, 1}}).to_json() == "{\"2\":3,\"7\":1}");
}

TEST_CASE("ramification profile validation") {
  RamificationProfile pr;
  pr.set(7, InertiaDatum::tame(2, 'A'));
  pr.set(11, InertiaDatum::tame(3, 'B'));
  pr.set(31, InertiaDatum::tame(5, 'C'));
  pr.set(13, InertiaDatum::tame(4));
  pr.set(2, InertiaDatum::wild_at());
  pr.set(3, InertiaDatum::tame(2));  // 3 is tame for order 2
  CHECK(pr.entries.size() == 6);

  RamificationProfile bad;
  CHECK(code_of([&] { bad.set(7, InertiaDatum::wild_at()); }) == Err::InvalidArgument);
  CHECK(code_of([&] { bad.set(7, InertiaDatum::tame(6)); }) == Err::InvalidArgument);
  CHECK(code_of([&] { bad.set(2, InertiaDatum::tame(2)); }) == Err::InvalidArgument);
  CHECK(code_of([&] { bad.set(2, InertiaDatum::tame(4)); }) == Err::InvalidArgument);
  CHECK(code_of([&] { bad.set(3, InertiaDatum::tame(3)); }) == Err::InvalidArgument);
  CHECK(code_of([&] { bad.set(7, InertiaDatum::tame(2, 'B')); }) == Err::InvalidArgument);
  CHECK(code_of([&] { bad.set(13, InertiaDatum::tame(4, 'A')); }) == Err::InvalidArgument);
  CHECK(code_of([&] { bad.set(6, InertiaDatum::tame(5)); }) == Err::InvalidArgument);
}

TEST_CASE("tame exponents at cyclic inertia") {
  GroupPtr a4 = builtin_group("A4");
  auto a4_table = builtin_table("A4");
  const ClassFunction& chi3 = row_of_degree(a4_table, 3);
  size_t g2 = 0;
  for (size_t i = 0; i < a4->order(); ++i)
    if (a4->element_order(i) == 2) g2 = i;
  CHECK(tame_exponent(chi3, SubgroupEmbedding::cyclic(a4, g2)) == 2);

  GroupPtr s4 = builtin_group("S4");
  auto s4_table = builtin_table("S4");
  // Two degree-3 rows; the one with trivial determinant is the rotation
  // realization, the other is the standard one with det = sign.
  const ClassFunction* rot = nullptr;
  const ClassFunction* std_rep = nullptr;
  for (const auto& chi : s4_table) {
    if (!(chi.degree() == CycNum(3))) continue;
    if (det_character(chi) == ClassFunction::trivial(s4))
      rot = &chi;
    else
      std_rep = &chi;
  }
  REQUIRE(rot != nullptr);
  REQUIRE(std_rep != nullptr);
  size_t g4 = 0, gt = 0;
  for (size_t i = 0; i < s4->order(); ++i) {
    if (s4->element_order(i) == 4) g4 = i;
    if (s4->element_order(i) == 2 && s4->elements()[i] == perm_parse("(1,2)", 4)) gt = i;
  }
  CHECK(tame_exponent(*rot, SubgroupEmbedding::cyclic(s4, g4)) == 2);
  CHECK(tame_exponent(*std_rep, SubgroupEmbedding::cyclic(s4, gt)) == 1);

  // Non-cyclic inertia is refused.
  for (const auto& emb : subgroups(a4))
    if (emb.sub->order() == 4)
      CHECK(code_of([&] { tame_exponent(chi3, emb); }) == Err::NonCyclicInertia);
}

TEST_CASE("tame exponent agrees with an exact fixed-space computation") {
  // Matrix-side oracle: dim V/V^I = 3 - dim ker(g - 1) for I = <g>.
  for (auto gens : {tetrahedral_gens(), octahedral_gens(), icosahedral_gens(),
                    s4_standard_gens()}) {
    MatrixGroup3 G = MatrixGroup3::close(gens);
    auto [tr, dt] = trace_and_det_characters(G);
    for (size_t i = 0; i < G.order(); ++i) {
      int e = G.abstract_group()->element_order(G.to_abstract(i));
      if (e < 2 || e > 5) continue;
      int via_char =
          tame_exponent(tr, SubgroupEmbedding::cyclic(G.abstract_group(), G.to_abstract(i)));
      // The fixed space of the cyclic group is cut out by its generator.
      CHECK(via_char == 3 - fixed_space_dim(G.elements()[i]));
    }
  }
}

TEST_CASE("trivial-determinant three-dimensional characters always get exponent two") {
  for (const std::string& label : {"A4", "S4", "A5"}) {
    GroupPtr G = builtin_group(label);
    for (const auto& chi : builtin_table(label)) {
      if (!(chi.degree() == CycNum(3))) continue;
      if (!(det_character(chi) == ClassFunction::trivial(G))) continue;
      REQUIRE(inner_product(chi, chi) == CycNum(1));
      size_t swept = 0;
      for (size_t i = 0; i < G->order(); ++i) {
        int e = G->element_order(i);
        if (e < 2 || e > 5) continue;
        CHECK(tame_exponent(chi, SubgroupEmbedding::cyclic(G, i)) == 2);
        ++swept;
      }
      CHECK(swept > 0);
    }
  }
}

TEST_CASE("tame conductor over a ramification profile") {
  GroupPtr a5 = builtin_group("A5");
  auto a5_table = builtin_table("A5");
  const ClassFunction& chi = row_of_degree(a5_table, 3);
  std::map<int, SubgroupEmbedding> resolver;
  for (size_t i = 0; i < a5->order(); ++i) {
    int e = a5->element_order(i);
    if ((e == 2 || e == 3 || e == 5) && !resolver.count(e))
      resolver.emplace(e, SubgroupEmbedding::cyclic(a5, i));
  }
  REQUIRE(resolver.size() == 3);

  RamificationProfile pr;
  pr.set(7, InertiaDatum::tame(2, 'A'));
  pr.set(11, InertiaDatum::tame(3, 'B'));
  pr.set(31, InertiaDatum::tame(5, 'C'));
  Conductor q = tame_conductor(chi, pr, resolver);
  CHECK(q.value() == Int(7 * 7) * Int(11 * 11) * Int(31 * 31));
  CHECK(q.exponent_at(7) == 2);
  CHECK(q.exponent_at(31) == 2);

  // Wild entries are skipped.
  pr.set(2, InertiaDatum::wild_at());
  CHECK(tame_conductor(chi, pr, resolver) == q);

  CHECK(tame_conductor(chi, RamificationProfile{}, {}) == Conductor::one());

  GroupPtr a4 = builtin_group("A4");
  auto a4_table = builtin_table("A4");
  const ClassFunction& chi4 = row_of_degree(a4_table, 3);
  size_t g3 = 0;
  for (size_t i = 0; i < a4->order(); ++i)
    if (a4->element_order(i) == 3) g3 = i;
  RamificationProfile pr4;
  pr4.set(7, InertiaDatum::tame(3));
  Conductor q4 =
      tame_conductor(chi4, pr4, {{3, SubgroupEmbedding::cyclic(a4, g3)}});
  CHECK(q4.value() == 49);

  // A character trivial on the inertia contributes nothing.
  Conductor q0 = tame_conductor(ClassFunction::trivial(a4), pr4,
                                {{3, SubgroupEmbedding::cyclic(a4, g3)}});
  CHECK(q0 == Conductor::one());

  // Resolver failures.
  RamificationProfile pr5;
  pr5.set(7, InertiaDatum::tame(2));
  CHECK(code_of([&] { tame_conductor(chi4, pr5, {}); }) == Err::UnresolvableInertia);
  CHECK(code_of([&] {
          tame_conductor(chi4, pr5, {{2, SubgroupEmbedding::cyclic(a4, g3)}});
        }) == Err::UnresolvableInertia);
  GroupPtr s4 = builtin_group("S4");
  CHECK(code_of([&] {
          tame_conductor(chi4, pr5, {{2, SubgroupEmbedding::cyclic(s4, 1)}});
        }) == Err::UnresolvableInertia);
}

TEST_CASE("wild caps") {
  Conductor c4 = wild_cap(4);
  std::map<Int, int> want4{{2, 11}, {3, 7}};
  CHECK(c4.factored == want4);
  CHECK(c4.value() == pow_int(2, 11) * pow_int(3, 7));
  CHECK(c4.value() == 4478976);

  Conductor c5 = wild_cap(5);
  std::map<Int, int> want5{{2, 14}, {3, 9}, {5, 9}};
  CHECK(c5.factored == want5);
  CHECK(c5.value() == pow_int(2, 14) * pow_int(3, 9) * pow_int(5, 9));
  CHECK(c5.value() == Int("629856000000000"));

  CHECK(code_of([] { wild_cap(6); }) == Err::UnsupportedDegree);
  CHECK(code_of([] { wild_cap(3); }) == Err::UnsupportedDegree);
}

TEST_CASE("induced and twisted conductors") {
  CHECK(induced_conductor(49, Conductor::from_value(8)).value() == 392);
  CHECK(induced_conductor(23, Conductor::one()).value() == 23);
  Conductor q = Conductor::from_value(392);
  CHECK(induced_conductor(1, q) == q);

  CHECK(twist_conductor(Conductor::from_value(4), Conductor::from_value(3)).value() == 108);
  CHECK(twist_conductor(q, Conductor::one()) == q);
  CHECK(code_of([] {
          twist_conductor(Conductor::from_value(6), Conductor::from_value(10));
        }) == Err::SupportOverlap);
}

TEST_CASE("twist support exponents") {
  TwistSupport s;
  s.a1 = {7};
  CHECK(twist_tame_exponents(s).value() == 7);

  TwistSupport t;
  t.b1 = {11};
  t.c2 = {31};
  CHECK(twist_tame_exponents(t).value() == Int(11) * 11 * 11 * 31 * 31);

  CHECK(twist_tame_exponents({}).value() == 1);

  TwistSupport full;
  full.a1 = {7};
  full.a2 = {13};
  full.b1 = {11};
  full.b2 = {17};
  full.c1 = {19};
  full.c2 = {23};
  Conductor q = twist_tame_exponents(full);
  CHECK(q.exponent_at(7) == 1);
  CHECK(q.exponent_at(13) == 2);
  CHECK(q.exponent_at(11) == 3);
  CHECK(q.exponent_at(17) == 2);
  CHECK(q.exponent_at(19) == 3);
  CHECK(q.exponent_at(23) == 2);

  TwistSupport dup;
  dup.a1 = {7};
  dup.b2 = {7};
  CHECK(code_of([&] { twist_tame_exponents(dup); }) == Err::InvalidSupport);
  TwistSupport low;
  low.a1 = {5};
  CHECK(code_of([&] { twist_tame_exponents(low); }) == Err::InvalidSupport);
  TwistSupport comp;
  comp.c1 = {9};
  CHECK(code_of([&] { twist_tame_exponents(comp); }) == Err::InvalidSupport);
}

TEST_CASE("tame discriminant bound for quintic twists") {
  CHECK(tame_disc_bound_A5({7}, {}, {}) == 49);
  CHECK(tame_disc_bound_A5({}, {}, {11}) == 14641);
  CHECK(tame_disc_bound_A5({}, {}, {}) == 1);
  CHECK(code_of([] { tame_disc_bound_A5({7}, {7}, {}); }) == Err::InvalidSupport);

  // The bound never exceeds the square of the twisted tame conductor,
  // whichever way the primes split into primed and double-primed parts.
  std::mt19937_64 rng(424242);
  auto ps = primes_up_to(500);
  for (int t = 0; t < 200; ++t) {
    TwistSupport s;
    std::vector<Int> A, B, C;
    std::set<uint32_t> used;
    int n = 1 + int(rng() % 6);
    for (int i = 0; i < n; ++i) {
      uint32_t p = ps[3 + rng() % (ps.size() - 3)];
      if (!used.insert(p).second) continue;
      int cls = int(rng() % 3), primed = int(rng() % 2);
      if (cls == 0) {
        A.push_back(p);
        (primed ? s.a1 : s.a2).push_back(p);
      } else if (cls == 1) {
        B.push_back(p);
        (primed ? s.b1 : s.b2).push_back(p);
      } else {
        C.push_back(p);
        (primed ? s.c1 : s.c2).push_back(p);
      }
    }
    Int bound = tame_disc_bound_A5(A, B, C);
    Int twisted = twist_tame_exponents(s).value();
    CHECK(bound <= twisted * twisted);
  }
}

TEST_CASE("discriminant bounds from the conductor") {
  Conductor q49 = Conductor::from_value(49);
  CHECK(disc_from_conductor_bound("A4", q49) == pow_int(2, 11) * pow_int(3, 7) * 343);
  CHECK(disc_from_conductor_bound("S4", q49) == pow_int(2, 11) * pow_int(3, 7) * 343);
  CHECK(disc_from_conductor_bound("A5", q49) ==
        pow_int(2, 14) * pow_int(3, 9) * pow_int(5, 9) * 2401);
  CHECK(disc_from_conductor_bound("A4", Conductor::one()) == wild_cap(4).value());
  CHECK(disc_from_conductor_bound("A5", Conductor::one()) == wild_cap(5).value());

  // Non-square cube: ceil(2^{3/2}) = 3.
  CHECK(disc_from_conductor_bound("A4", Conductor::from_value(2)) == wild_cap(4).value() * 3);

  // Monotone in q.
  Int prev = 0;
  for (int v : {1, 2, 3, 4, 9, 10, 49, 100, 1000}) {
    Int b = disc_from_conductor_bound("S4", Conductor::from_value(v));
    CHECK(b >= prev);
    prev = b;
  }
  prev = 0;
  for (int v : {1, 2, 3, 4, 9, 10, 49, 100, 1000}) {
    Int b = disc_from_conductor_bound("A5", Conductor::from_value(v));
    CHECK(b >= prev);
    prev = b;
  }

  CHECK(code_of([&] { disc_from_conductor_bound("D4", q49); }) == Err::InvalidArgument);
}

TEST_CASE("quadratic character conductor shapes") {
  auto s24 = epsilon_conductor_shape(Conductor::from_value(24));
  CHECK(s24.first == 3);
  CHECK(s24.second == std::vector<Int>{3});

  auto s12 = epsilon_conductor_shape(Conductor::from_value(12));
  CHECK(s12.first == 2);
  CHECK(s12.second == std::vector<Int>{3});

  auto s1 = epsilon_conductor_shape(Conductor::one());
  CHECK(s1.first == 0);
  CHECK(s1.second.empty());

  auto s15 = epsilon_conductor_shape(Conductor::from_value(15));
  CHECK(s15.first == 0);
  CHECK((s15.second == std::vector<Int>{3, 5}));

  auto s4 = epsilon_conductor_shape(Conductor::from_value(4));
  CHECK(s4.first == 2);
  CHECK(s4.second.empty());

  CHECK(code_of([] { epsilon_conductor_shape(Conductor::from_value(2)); }) ==
        Err::NotQuadraticConductor);
  CHECK(code_of([] { epsilon_conductor_shape(Conductor::from_value(16)); }) ==
        Err::NotQuadraticConductor);
  CHECK(code_of([] { epsilon_conductor_shape(Conductor::from_value(9)); }) ==
        Err::NotQuadraticConductor);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "core/chartable.hpp"
#include "core/error.hpp"
#include "core/exactnum.hpp"
#include "core/permgroup.hpp"

using namespace artin3;

namespace {

// Oracle closure: quadratic fixpoint over pairwise products, independent of
// the BFS in PermGroup::close.
std::set<Perm> oracle_closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> s(gens.begin(), gens.end());
  s.insert(perm_identity(degree));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(perm_compose(a, b)).second) grew = true;
  }
  return s;
}

std::vector<size_t> sorted_sizes(const GroupPtr& G) {
  std::vector<size_t> v = G->class_sizes();
  std::sort(v.begin(), v.end());
  return v;
}

bool is_faithful(const ClassFunction& chi) {
  for (size_t c = 1; c < chi.values.size(); ++c)
    if (chi.values[c] == chi.degree()) return false;
  return true;
}

const std::vector<std::string> kAllLabels = [] {
  std::vector<std::string> v;
  for (int k = 1; k <= 12; ++k) v.push_back("C" + std::to_string(k));
  for (int k = 1; k <= 12; ++k) v.push_back("D" + std::to_string(k));
  v.insert(v.end(), {"A4", "S4", "A5", "A4xC2", "S4xC2", "A5xC2"});
  return v;
}();

}  // namespace

TEST_CASE("closure matches quadratic oracle") {
  struct Case {
    int degree;
    std::vector<std::string> gens;
    size_t order;
  };
  for (const Case& tc : std::vector<Case>{
           {4, {"(1,2)(3,4)", "(1,2,3)"}, 12},
           {5, {"(1,2,3,4,5)", "(1,2)(3,4)"}, 60},
           {3, {}, 1},
           {4, {"(1,2)", "(1,2,3,4)"}, 24},
           {6, {"(1,2,3,4,5,6)"}, 6},
       }) {
    std::vector<Perm> gens;
    for (const auto& s : tc.gens) gens.push_back(perm_parse(s, tc.degree));
    GroupPtr G = PermGroup::close(tc.degree, gens);
    CHECK(G->order() == tc.order);
    auto oracle = oracle_closure(tc.degree, gens);
    CHECK(oracle.size() == tc.order);
    std::vector<Perm> expect(oracle.begin(), oracle.end());
    CHECK(G->elements() == expect);  // canonical = lex order
  }
  // Safety cap: <(1..7), (1,2)> is S7, order 5040.
  CHECK_THROWS_AS(
      PermGroup::close(7, {perm_parse("(1,2,3,4,5,6,7)", 7), perm_parse("(1,2)", 7)}),
      Error);
}

TEST_CASE("group table internals") {
  GroupPtr G = builtin_group("S4");
  CHECK(G->order() == 24);
  CHECK(G->elements()[0] == perm_identity(4));
  for (size_t a = 0; a < G->order(); ++a) {
    CHECK(G->mul(a, G->inv(a)) == 0);
    CHECK(G->mul(0, a) == a);
    for (size_t b = 0; b < G->order(); ++b) {
      // Table consistency with actual composition.
      Perm p = perm_compose(G->elements()[a], G->elements()[b]);
      CHECK(G->elements()[G->mul(a, b)] == p);
    }
  }
  CHECK(G->derived_indices().size() == 12);                       // A4
  CHECK(builtin_group("A4")->derived_indices().size() == 4);      // V4
  CHECK(builtin_group("A5")->is_perfect());
  CHECK(builtin_group("C12")->is_cyclic());
  CHECK(builtin_group("C12")->is_abelian());
  CHECK(!builtin_group("D4")->is_abelian());
  CHECK(builtin_group("D1")->order() == 2);
  CHECK(builtin_group("D2")->order() == 4);
  CHECK(builtin_group("D2")->is_abelian());
  CHECK_THROWS_AS(builtin_group("C13"), Error);
  CHECK_THROWS_AS(builtin_group("Q8"), Error);
  CHECK_THROWS_AS(builtin_group("D4xC2"), Error);
}

TEST_CASE("conjugacy classes") {
  CHECK(sorted_sizes(builtin_group("S4")) == std::vector<size_t>{1, 3, 6, 6, 8});
  CHECK(sorted_sizes(builtin_group("A4")) == std::vector<size_t>{1, 3, 4, 4});
  CHECK(sorted_sizes(builtin_group("A5")) == std::vector<size_t>{1, 12, 12, 15, 20});
  CHECK(PermGroup::close(3, {})->class_count() == 1);

  // Canonical order for S4: identity, transpositions, double transpositions,
  // 3-cycles, 4-cycles.
  GroupPtr S4 = builtin_group("S4");
  REQUIRE(S4->class_count() == 5);
  CHECK(S4->class_sizes() == std::vector<size_t>{1, 6, 3, 8, 6});
  std::vector<int> orders;
  for (size_t r : S4->class_reps()) orders.push_back(S4->element_order(r));
  CHECK(orders == std::vector<int>{1, 2, 2, 3, 4});
  // Each class is closed under conjugation and sizes sum to |G|.
  for (const auto& label : {"S4", "A5", "D6"}) {
    GroupPtr G = builtin_group(label);
    size_t total = 0;
    for (size_t s : G->class_sizes()) total += s;
    CHECK(total == G->order());
    for (size_t e = 0; e < G->order(); ++e)
      for (size_t x = 0; x < G->order(); ++x)
        CHECK(G->class_of(G->conj(x, e)) == G->class_of(e));
  }
}

TEST_CASE("builtin tables verify and match known values") {
  for (const auto& label : kAllLabels) {
    auto table = builtin_table(label);  // verify_table runs inside
    GroupPtr G = builtin_group(label);
    CHECK(table.size() == G->class_count());
  }
  CHECK_THROWS_AS(builtin_table("C13"), Error);
  CHECK_THROWS_AS(builtin_table("SL2"), Error);

  // A4: the unique 3-dimensional row is (3, -1, 0, 0).
  auto a4 = builtin_table("A4");
  const ClassFunction* three = nullptr;
  for (const auto& r : a4)
    if (r.degree() == CycNum(3)) three = &r;
  REQUIRE(three != nullptr);
  CHECK(three->values == std::vector<CycNum>{CycNum(3), CycNum(-1), CycNum(0), CycNum(0)});

  // S4: SO(3)-type row on (1, transp, double, 3cyc, 4cyc).
  auto s4 = builtin_table("S4");
  bool found = false;
  for (const auto& r : s4)
    if (r.values == std::vector<CycNum>{CycNum(3), CycNum(-1), CycNum(-1), CycNum(0), CycNum(1)})
      found = true;
  CHECK(found);

  // A5: order-5 class values are the golden pair, roots of x^2 - x - 1.
  auto a5 = builtin_table("A5");
  GroupPtr A5 = builtin_group("A5");
  int golden_checked = 0;
  for (const auto& r : a5) {
    if (r.degree() != CycNum(3)) continue;
    for (size_t c = 0; c < A5->class_count(); ++c) {
      if (A5->element_order(A5->class_reps()[c]) != 5) continue;
      const CycNum& v = r.values[c];
      CHECK(v * v == v + CycNum(1));
      ++golden_checked;
    }
  }
  CHECK(golden_checked == 4);
  // (1 + sqrt 5)/2 is about 1.618; both rows carry it on one order-5 class.
  for (const auto& r : a5) {
    if (r.degree() != CycNum(3)) continue;
    CycNum sum(0);
    for (size_t c = 0; c < A5->class_count(); ++c)
      if (A5->element_order(A5->class_reps()[c]) == 5) sum += r.values[c];
    CHECK(sum == CycNum(1));  // phi+ + phi- = 1
  }
}

TEST_CASE("inner products") {
  auto a4 = builtin_table("A4");
  GroupPtr A4 = builtin_group("A4");
  // Oracle: direct sum over all 12 elements.
  const ClassFunction& three = a4[3];
  REQUIRE(three.degree() == CycNum(3));
  CycNum direct(0);
  for (size_t e = 0; e < A4->order(); ++e) direct += three.at_element(e);
  CHECK(Rat(1, 12) * direct == CycNum(0));
  CHECK(inner_product(three, ClassFunction::trivial(A4)) == CycNum(0));

  for (const auto& label : {"A4", "S4", "A5", "D6", "C8"}) {
    auto table = builtin_table(label);
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < table.size(); ++j)
        CHECK(inner_product(table[i], table[j]) == CycNum(i == j ? 1 : 0));
    GroupPtr G = builtin_group(label);
    CHECK(inner_product(ClassFunction::regular(G), ClassFunction::trivial(G)) == CycNum(1));
  }

  GroupPtr A5 = builtin_group("A5");
  CHECK_THROWS_AS(inner_product(ClassFunction::trivial(A5), ClassFunction::trivial(A4)), Error);
}

TEST_CASE("restriction") {
  GroupPtr A4 = builtin_group("A4");
  auto a4 = builtin_table("A4");
  const ClassFunction& three = a4[3];
  size_t dbl = A4->index_of(perm_parse("(1,2)(3,4)", 4));
  auto C2 = SubgroupEmbedding::cyclic(A4, dbl);
  ClassFunction res = restrict_along(three, C2);
  CHECK(res.values == std::vector<CycNum>{CycNum(3), CycNum(-1)});

  // Restriction to the trivial subgroup is the constant degree.
  auto triv = SubgroupEmbedding::cyclic(A4, 0);
  CHECK(restrict_along(three, triv).values == std::vector<CycNum>{CycNum(3)});

  // S4 SO(3)-type restricted to a C4: canonical class order of C4 is
  // (e, g^2, g, g^3), so values are (3, -1, 1, 1).
  GroupPtr S4 = builtin_group("S4");
  auto s4 = builtin_table("S4");
  const ClassFunction& so3 = s4[4];
  REQUIRE(so3.values[1] == CycNum(-1));
  size_t four = S4->index_of(perm_parse("(1,2,3,4)", 4));
  auto C4 = SubgroupEmbedding::cyclic(S4, four);
  ClassFunction r4 = restrict_along(so3, C4);
  std::vector<int> ords;
  for (size_t r : C4.sub->class_reps()) ords.push_back(C4.sub->element_order(r));
  CHECK(ords == std::vector<int>{1, 2, 4, 4});
  CHECK(r4.values == std::vector<CycNum>{CycNum(3), CycNum(-1), CycNum(1), CycNum(1)});
}

TEST_CASE("induction") {
  // Oracle: Frobenius reciprocity reconstruction. Ind(lambda) must equal
  // sum over irreducible chi of <lambda, Res chi>_H * chi.
  struct Sample {
    std::string glabel;
    size_t sub_order;
  };
  for (const auto& sample : std::vector<Sample>{{"S4", 8}, {"A4", 4}, {"A5", 12}, {"S4", 6}}) {
    GroupPtr G = builtin_group(sample.glabel);
    auto table = builtin_table(sample.glabel);
    for (const auto& H : subgroups(G)) {
      if (H.sub->order() != sample.sub_order) continue;
      for (const auto& lam : linear_characters(H.sub)) {
        ClassFunction ind = induce(lam, H);
        // Degree law.
        CHECK(ind.degree() == CycNum(Rat(static_cast<int64_t>(H.index()))));
        // Reciprocity against every irreducible.
        std::vector<CycNum> recon(G->class_count(), CycNum(0));
        for (const auto& chi : table) {
          CycNum mult = inner_product(lam, restrict_along(chi, H));
          CHECK(inner_product(ind, chi) == mult);
          for (size_t c = 0; c < recon.size(); ++c) recon[c] += mult * chi.values[c];
        }
        CHECK(recon == ind.values);
      }
      break;  // one subgroup of each sampled order suffices
    }
  }

  // Trivial character induces the coset permutation character: degree
  // [G:H] and trivial multiplicity exactly 1.
  GroupPtr A4 = builtin_group("A4");
  for (const auto& H : subgroups(A4)) {
    if (H.sub->order() != 4) continue;
    ClassFunction ind = induce(ClassFunction::trivial(H.sub), H);
    CHECK(ind.degree() == CycNum(3));
    CHECK(inner_product(ind, ClassFunction::trivial(A4)) == CycNum(1));
  }

  // A quadratic character of an order-8 subgroup of S4 induces the standard
  // character, whose determinant is the sign character.
  GroupPtr S4 = builtin_group("S4");
  auto s4 = builtin_table("S4");
  const ClassFunction& standard = s4[3];
  const ClassFunction& sign_row = s4[1];
  bool witnessed = false;
  for (const auto& H : subgroups(S4)) {
    if (H.sub->order() != 8) continue;
    for (const auto& lam : linear_characters(H.sub)) {
      if (induce(lam, H) == standard) {
        witnessed = true;
        CHECK(tensor(lam, lam) == ClassFunction::trivial(H.sub));  // quadratic
        CHECK(!(lam == ClassFunction::trivial(H.sub)));
      }
    }
  }
  CHECK(witnessed);
  CHECK(det_character(standard) == sign_row);
}

TEST_CASE("tensor and determinant") {
  auto s4 = builtin_table("S4");
  GroupPtr S4 = builtin_group("S4");
  const ClassFunction& sign_row = s4[1];
  const ClassFunction& standard = s4[3];
  const ClassFunction& so3 = s4[4];
  for (const auto& chi : s4) CHECK(tensor(chi, ClassFunction::trivial(S4)) == chi);
  CHECK(tensor(standard, sign_row) == so3);

  // Determinant oracle: eigenvalue multisets of the standard representation.
  // transposition {1,1,-1} -> -1; double transposition {1,-1,-1} -> 1;
  // 3-cycle {1, z3, z3^2} -> 1; 4-cycle {-1, i, -i} -> -1.
  ClassFunction det_std = det_character(standard);
  CHECK(det_std.values == sign_row.values);
  CHECK(det_character(so3) == ClassFunction::trivial(S4));
  CHECK(det_character(sign_row) == sign_row);

  // Degree-2 determinant: the 2-dim of S4 has determinant = sign.
  CHECK(det_character(s4[2]) == sign_row);

  auto a5 = builtin_table("A5");
  CHECK_THROWS_AS(det_character(a5[3]), Error);  // degree 4 unsupported
}

TEST_CASE("trivial multiplicity") {
  GroupPtr A4 = builtin_group("A4");
  auto a4 = builtin_table("A4");
  size_t dbl = A4->index_of(perm_parse("(1,2)(3,4)", 4));
  CHECK(trivial_multiplicity(a4[3], SubgroupEmbedding::cyclic(A4, dbl)) == 1);

  GroupPtr A5 = builtin_group("A5");
  auto a5 = builtin_table("A5");
  size_t five = A5->index_of(perm_parse("(1,2,3,4,5)", 5));
  CHECK(trivial_multiplicity(a5[1], SubgroupEmbedding::cyclic(A5, five)) == 1);
  CHECK(trivial_multiplicity(a5[2], SubgroupEmbedding::cyclic(A5, five)) == 1);

  CHECK(trivial_multiplicity(a5[3], SubgroupEmbedding::cyclic(A5, 0)) == 4);

  // Non-character input is flagged: (3 + 2)/2 is not an integer.
  ClassFunction bogus = a4[3];
  bogus.values[1] = CycNum(2);
  CHECK_THROWS_AS(trivial_multiplicity(bogus, SubgroupEmbedding::cyclic(A4, dbl)), Error);
}

TEST_CASE("inertia sweep: faithful 3-dim trivial-det characters") {
  // For A4, S4, A5: every faithful irreducible 3-dimensional character with
  // trivial determinant has dim V^I = 1 for every nontrivial cyclic I.
  int swept = 0;
  for (const auto& label : {"A4", "S4", "A5"}) {
    GroupPtr G = builtin_group(label);
    for (const auto& chi : builtin_table(label)) {
      if (chi.degree() != CycNum(3) || !is_faithful(chi)) continue;
      if (det_character(chi) != ClassFunction::trivial(G)) continue;
      for (size_t g = 1; g < G->order(); ++g) {
        CHECK(trivial_multiplicity(chi, SubgroupEmbedding::cyclic(G, g)) == 1);
        ++swept;
      }
    }
  }
  CHECK(swept == 11 + 23 + 2 * 59);

  // Contrast: the S4 standard character (nontrivial determinant) restricted
  // to a transposition's C2 has invariant dimension 2, not 1.
  GroupPtr S4 = builtin_group("S4");
  auto s4 = builtin_table("S4");
  size_t tr = S4->index_of(perm_parse("(1,2)", 4));
  CHECK(trivial_multiplicity(s4[3], SubgroupEmbedding::cyclic(S4, tr)) == 2);
}

TEST_CASE("subgroup lattice") {
  GroupPtr A4 = builtin_group("A4");
  auto subs = subgroups(A4);
  CHECK(subs.size() == 10);
  // Oracle: exhaustive subset closure over all 2^12 subsets is too slow, but
  // every subgroup is determined by its element set; check closure and count
  // subgroups of each order against Lagrange-admissible brute force:
  // enumerate closed subsets generated by at most 2 elements plus joins.
  std::set<std::vector<size_t>> closed;
  for (size_t a = 0; a < A4->order(); ++a)
    for (size_t b = 0; b < A4->order(); ++b) {
      std::set<size_t> s = {0, a, b};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<size_t> cur(s.begin(), s.end());
        for (size_t x : cur)
          for (size_t y : cur)
            if (s.insert(A4->mul(x, y)).second) grew = true;
      }
      closed.insert(std::vector<size_t>(s.begin(), s.end()));
    }
  // A4's subgroups are all 1- or 2-generated, so the oracle is complete.
  CHECK(closed.size() == 10);

  for (const auto& H : subs) {
    CHECK(A4->order() % H.sub->order() == 0);
    // Inclusion is a homomorphism.
    for (size_t x = 0; x < H.sub->order(); ++x)
      for (size_t y = 0; y < H.sub->order(); ++y)
        CHECK(H.incl[H.sub->mul(x, y)] == A4->mul(H.incl[x], H.incl[y]));
  }

  // A5 has no subgroup of index 3.
  GroupPtr A5 = builtin_group("A5");
  for (const auto& H : subgroups(A5)) CHECK(H.sub->order() != 20);

  // S4 has at least 3 subgroups of order 8 (Sylow).
  GroupPtr S4 = builtin_group("S4");
  int count8 = 0;
  for (const auto& H : subgroups(S4))
    if (H.sub->order() == 8) ++count8;
  CHECK(count8 == 3);

  // A6 (order 360) is closable but beyond the lattice cap.
  CHECK_THROWS_AS(subgroups(PermGroup::close(
                      6, {perm_parse("(1,2,3,4,5)", 6), perm_parse("(4,5,6)", 6)})),
                  Error);
}

TEST_CASE("linear characters") {
  CHECK(linear_characters(builtin_group("S4")).size() == 2);
  CHECK(linear_characters(builtin_group("A4")).size() == 3);
  CHECK(linear_characters(builtin_group("A5")).size() == 1);
  CHECK(linear_characters(builtin_group("D4")).size() == 4);
  CHECK(linear_characters(builtin_group("C6")).size() == 6);
  CHECK(linear_characters(builtin_group("A4xC2")).size() == 6);

  // Multiplicativity on elements.
  GroupPtr D6 = builtin_group("D6");
  for (const auto& lam : linear_characters(D6)) {
    CHECK(lam.values[0] == CycNum(1));
    for (size_t a = 0; a < D6->order(); ++a)
      for (size_t b = 0; b < D6->order(); ++b)
        CHECK(lam.at_element(D6->mul(a, b)) == lam.at_element(a) * lam.at_element(b));
  }
  // First one is trivial; all distinct.
  auto lams = linear_characters(builtin_group("C8"));
  CHECK(lams[0] == ClassFunction::trivial(builtin_group("C8")));
  for (size_t i = 0; i < lams.size(); ++i)
    for (size_t j = i + 1; j < lams.size(); ++j) CHECK(!(lams[i] == lams[j]));
}

TEST_CASE("monomial witnesses") {
  GroupPtr S4 = builtin_group("S4");
  auto s4 = builtin_table("S4");
  auto w = monomial_witness(s4[3], S4);
  REQUIRE(w.has_value());
  CHECK(w->first.sub->order() == 8);
  CHECK(tensor(w->second, w->second) == ClassFunction::trivial(w->first.sub));
  CHECK(induce(w->second, w->first) == s4[3]);

  // Both 3-dimensional characters of A5 are primitive.
  GroupPtr A5 = builtin_group("A5");
  auto a5 = builtin_table("A5");
  CHECK(!monomial_witness(a5[1], A5).has_value());
  CHECK(!monomial_witness(a5[2], A5).has_value());

  // Linear characters get the degenerate witness.
  auto wl = monomial_witness(s4[1], S4);
  REQUIRE(wl.has_value());
  CHECK(wl->first.sub->order() == 24);
  CHECK(wl->second == s4[1]);

  // The A4 3-dim is monomial: induced from a linear character of V4.
  GroupPtr A4 = builtin_group("A4");
  auto a4 = builtin_table("A4");
  auto wa = monomial_witness(a4[3], A4);
  REQUIRE(wa.has_value());
  CHECK(wa->first.sub->order() == 4);

  // Reducible input violates the precondition.
  CHECK_THROWS_AS(monomial_witness(ClassFunction::regular(S4), S4), Error);
}

TEST_CASE("table json export") {
  GroupPtr A5 = builtin_group("A5");
  auto table = builtin_table("A5");
  std::string j1 = table_to_json("A5", A5, table);
  std::string j2 = table_to_json("A5", A5, table);
  CHECK(j1 == j2);
  CHECK(j1.find("\"label\": \"A5\"") != std::string::npos);
  CHECK(j1.find("\"order\": 60") != std::string::npos);
  // Golden-ratio entries appear with conductor 5.
  CHECK(j1.find("\"n\": 5") != std::string::npos);
}

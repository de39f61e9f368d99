#include "core/matgroup.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace artin3 {

Matrix3 Matrix3::identity() { return scalar(CycNum(1)); }

Matrix3 Matrix3::scalar(const CycNum& c) {
  Matrix3 m;
  for (int i = 0; i < 9; ++i) m.a[i] = CycNum(0);
  m.at(0, 0) = c;
  m.at(1, 1) = c;
  m.at(2, 2) = c;
  return m;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CycNum s(0);
      for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Matrix3 Matrix3::operator-() const {
  Matrix3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = -a[i];
  return r;
}

CycNum Matrix3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

CycNum Matrix3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

bool Matrix3::operator==(const Matrix3& o) const {
  for (int i = 0; i < 9; ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

Matrix3 Matrix3::on_conductor(int m) const {
  Matrix3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = a[i].minimal_form().to_conductor(m);
  return r;
}

namespace {

// Strict order on matrices over one ambient conductor.
struct MatLess {
  bool operator()(const Matrix3& x, const Matrix3& y) const {
    for (int i = 0; i < 9; ++i) {
      int c = CycNum::compare_raw(x.a[i], y.a[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace

MatrixGroup3 MatrixGroup3::close(std::vector<Matrix3> gens) {
  int ambient = 1;
  for (const auto& g : gens)
    for (const auto& e : g.a) {
      int n = e.minimal_form().conductor();
      ambient = ambient / std::gcd(ambient, n) * n;
      check(ambient <= kMaxAmbient, Err::BoundTooLarge,
            "matrix entries exceed the supported cyclotomic conductor");
    }
  for (auto& g : gens) g = g.on_conductor(ambient);

  std::set<Matrix3, MatLess> seen;
  std::vector<Matrix3> queue;
  Matrix3 id = Matrix3::identity().on_conductor(ambient);
  seen.insert(id);
  queue.push_back(id);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : gens) {
      Matrix3 nxt = queue[qi] * g;
      if (seen.insert(nxt).second) {
        check(seen.size() <= kMaxOrder, Err::GroupTooLarge,
              "matrix group exceeds 240 elements (finite input?)");
        queue.push_back(std::move(nxt));
      }
    }
  }

  MatrixGroup3 G;
  G.ambient_ = ambient;
  G.gens_ = std::move(gens);
  G.elems_.assign(seen.begin(), seen.end());
  size_t n = G.elems_.size();

  std::map<Matrix3, size_t, MatLess> index;
  for (size_t i = 0; i < n; ++i) index.emplace(G.elems_[i], i);

  // Left-regular permutation model.
  std::vector<Perm> regular(n);
  for (size_t i = 0; i < n; ++i) {
    Perm p(n);
    for (size_t j = 0; j < n; ++j)
      p[j] = static_cast<uint16_t>(index.at(G.elems_[i] * G.elems_[j]));
    regular[i] = std::move(p);
  }
  std::vector<Perm> pgens;
  for (const auto& g : G.gens_) pgens.push_back(regular[index.at(g)]);
  G.abstract_ = PermGroup::close(static_cast<int>(n), pgens);
  check(G.abstract_->order() == n, Err::Internal, "regular model order mismatch");
  G.to_abs_.resize(n);
  G.from_abs_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    G.to_abs_[i] = G.abstract_->index_of(regular[i]);
    G.from_abs_[G.to_abs_[i]] = i;
  }
  return G;
}

size_t MatrixGroup3::index_of(const Matrix3& m) const {
  Matrix3 q;
  for (int i = 0; i < 9; ++i) {
    CycNum mf = m.a[i].minimal_form();
    check(ambient_ % mf.conductor() == 0, Err::InvalidArgument, "element not in group");
    q.a[i] = mf.to_conductor(ambient_);
  }
  auto it = std::lower_bound(elems_.begin(), elems_.end(), q, MatLess{});
  check(it != elems_.end() && *it == q, Err::InvalidArgument, "element not in group");
  return static_cast<size_t>(it - elems_.begin());
}

bool MatrixGroup3::contains(const Matrix3& m) const {
  for (int i = 0; i < 9; ++i)
    if (ambient_ % m.a[i].minimal_form().conductor() != 0) return false;
  Matrix3 q = m.on_conductor(ambient_);
  return std::binary_search(elems_.begin(), elems_.end(), q, MatLess{});
}

std::pair<ClassFunction, ClassFunction> trace_and_det_characters(const MatrixGroup3& G) {
  const GroupPtr& A = G.abstract_group();
  std::vector<CycNum> tr(A->class_count()), dt(A->class_count());
  for (size_t c = 0; c < A->class_count(); ++c) {
    const Matrix3& m = G.elements()[G.from_abstract(A->class_reps()[c])];
    tr[c] = m.trace();
    dt[c] = m.det();
  }
  return {ClassFunction(A, std::move(tr)), ClassFunction(A, std::move(dt))};
}

std::string recognize_so3_type(const GroupPtr& A) {
  size_t n = A->order();
  if (A->is_cyclic()) return "C" + std::to_string(n);
  if (n == 12 && A->derived_indices().size() == 4) return "A4";
  if (n == 24 && A->derived_indices().size() == 12) return "S4";
  if (n == 60 && A->is_perfect()) return "A5";
  if (n % 2 == 0) {
    size_t k = n / 2;
    // Dihedral certificate: r of order k, s of order 2 outside <r>, with
    // s r s^-1 = r^-1.
    for (size_t r = 0; r < n; ++r) {
      if (A->element_order(r) != static_cast<int>(k)) continue;
      std::vector<bool> in_r(n, false);
      size_t cur = 0;
      for (size_t j = 0; j < k; ++j) {
        in_r[cur] = true;
        cur = A->mul(cur, r);
      }
      for (size_t s = 0; s < n; ++s) {
        if (in_r[s] || A->element_order(s) != 2) continue;
        if (A->conj(s, r) == A->inv(r)) return "D" + std::to_string(k);
      }
    }
  }
  fail(Err::UnsupportedGroup, "group is not on the SO(3) subgroup list");
}

OrthoClassification classify(const MatrixGroup3& G) {
  CycNum one(1), minus(-1);
  bool all_plus = true;
  for (const auto& m : G.elements()) {
    CycNum d = m.det();
    check(d == one || d == minus, Err::NotOrthogonal, "element with determinant not +-1");
    if (d == minus) all_plus = false;
  }
  OrthoClassification out;
  out.in_so3 = all_plus;
  out.contains_minus_one = G.contains(Matrix3::scalar(minus));
  auto [tr, dt] = trace_and_det_characters(G);
  out.irreducible = inner_product(tr, tr) == one;
  if (out.in_so3) {
    out.abstract_type = recognize_so3_type(G.abstract_group());
  } else if (!out.contains_minus_one) {
    IsoclinicLift lift = isoclinic_lift(G);
    std::string t = recognize_so3_type(lift.lifted.abstract_group());
    out.abstract_type = (t == "S4") ? "S4-isoclinic" : t;
  } else {
    std::vector<Matrix3> plus;
    for (const auto& m : G.elements())
      if (m.det() == one) plus.push_back(m);
    MatrixGroup3 H = MatrixGroup3::close(plus);
    check(2 * H.order() == G.order(), Err::Internal, "SO(3) part is not index two");
    out.abstract_type = recognize_so3_type(H.abstract_group()) + "xC2";
    out.split_h = std::move(H);
  }
  return out;
}

IsoclinicLift isoclinic_lift(const MatrixGroup3& G) {
  CycNum one(1), minus(-1);
  bool has_minus_det = false;
  for (const auto& m : G.elements())
    if (m.det() == minus) has_minus_det = true;
  check(has_minus_det, Err::PreconditionFailed, "group lies inside SO(3)");
  check(!G.contains(Matrix3::scalar(minus)), Err::PreconditionFailed, "-1 is in the group");

  // g -> det(g) g is a homomorphism into SO(3), injective since -1 is absent.
  std::vector<Matrix3> lifted_gens;
  for (const auto& g : G.generators()) lifted_gens.push_back(g.det() == one ? g : -g);
  IsoclinicLift out{MatrixGroup3::close(std::move(lifted_gens)), {}};
  check(out.lifted.order() == G.order(), Err::Internal, "lift changed the order");
  out.map.resize(G.order());
  for (size_t i = 0; i < G.order(); ++i) {
    const Matrix3& m = G.elements()[i];
    out.map[i] = out.lifted.index_of(m.det() == one ? m : -m);
  }
  // Verify the map is an isomorphism, element by element, on the abstract
  // multiplication tables.
  const GroupPtr& A = G.abstract_group();
  const GroupPtr& B = out.lifted.abstract_group();
  for (size_t i = 0; i < G.order(); ++i)
    for (size_t j = 0; j < G.order(); ++j) {
      size_t prod = G.from_abstract(A->mul(G.to_abstract(i), G.to_abstract(j)));
      size_t img = out.lifted.from_abstract(
          B->mul(out.lifted.to_abstract(out.map[i]), out.lifted.to_abstract(out.map[j])));
      check(out.map[prod] == img, Err::Internal, "lift map is not multiplicative");
    }
  return out;
}

std::string classification_to_json(const OrthoClassification& c, const MatrixGroup3& G) {
  nlohmann::json j;
  j["order"] = G.order();
  j["in_so3"] = c.in_so3;
  j["contains_minus_one"] = c.contains_minus_one;
  j["irreducible"] = c.irreducible;
  j["abstract_type"] = c.abstract_type;
  if (c.split_h) j["so3_part_order"] = c.split_h->order();
  return j.dump(2);
}

namespace {

Matrix3 mat_rat(std::array<int, 9> v) {
  Matrix3 m;
  for (int i = 0; i < 9; ++i) m.a[i] = CycNum(v[i]);
  return m;
}

}  // namespace

std::vector<Matrix3> tetrahedral_gens() {
  return {mat_rat({0, 0, 1, 1, 0, 0, 0, 1, 0}), mat_rat({1, 0, 0, 0, -1, 0, 0, 0, -1})};
}

std::vector<Matrix3> octahedral_gens() {
  return {mat_rat({0, 0, 1, 1, 0, 0, 0, 1, 0}), mat_rat({0, -1, 0, 1, 0, 0, 0, 0, 1})};
}

std::vector<Matrix3> icosahedral_gens() {
  // Golden rotation by 2 pi / 5: rows ((phi-1)/2, -phi, 1)/2 etc., with
  // sqrt5 = z - z^2 - z^3 + z^4 in conductor 5.
  CycNum z = CycNum::root_of_unity(5);
  CycNum sqrt5 = z - z.galois(2) + (-z.galois(3)) + z.galois(4);
  CycNum q = Rat(1, 4) * (sqrt5 - CycNum(1));  // cos(2 pi / 5)
  CycNum h = Rat(1, 4) * (sqrt5 + CycNum(1));  // phi / 2
  CycNum half(Rat(1, 2));
  Matrix3 r5;
  r5.at(0, 0) = q;
  r5.at(0, 1) = -h;
  r5.at(0, 2) = half;
  r5.at(1, 0) = h;
  r5.at(1, 1) = half;
  r5.at(1, 2) = q;
  r5.at(2, 0) = -half;
  r5.at(2, 1) = q;
  r5.at(2, 2) = h;
  return {mat_rat({0, 0, 1, 1, 0, 0, 0, 1, 0}), r5};
}

std::vector<Matrix3> s4_standard_gens() {
  // Standard representation on the sum-zero hyperplane of Q^4, basis
  // e1-e2, e2-e3, e3-e4. Determinant realizes the sign character.
  return {mat_rat({-1, 1, 0, 0, 1, 0, 0, 0, 1}),     // transposition (1 2)
          mat_rat({0, 0, -1, 1, 0, -1, 0, 1, -1})};  // 4-cycle (1 2 3 4)
}

Matrix3 rotation_z(int k) {
  check(k >= 1, Err::InvalidArgument, "rotation order must be positive");
  CycNum z = CycNum::root_of_unity(k);
  CycNum zb = CycNum::root_of_unity(k, -1);
  CycNum c = Rat(1, 2) * (z + zb);
  CycNum i4 = CycNum::root_of_unity(4);
  CycNum s = Rat(-1, 2) * (i4 * (z - zb));
  Matrix3 m = Matrix3::identity();
  m.at(0, 0) = c;
  m.at(0, 1) = -s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

Matrix3 flip_x() { return mat_rat({1, 0, 0, 0, -1, 0, 0, 0, -1}); }

}  // namespace artin3

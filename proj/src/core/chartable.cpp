#include "core/chartable.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace artin3 {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  return a->degree() == b->degree() && a->elements() == b->elements();
}

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  check(same_group(a, b), Err::GroupMismatch, "class functions live on different groups");
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr g, std::vector<CycNum> v)
    : group(std::move(g)), values(std::move(v)) {
  check(values.size() == group->class_count(), Err::InvalidArgument,
        "one value per conjugacy class required");
}

ClassFunction ClassFunction::trivial(GroupPtr g) {
  std::vector<CycNum> v(g->class_count(), CycNum(1));
  return ClassFunction(std::move(g), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr g) {
  std::vector<CycNum> v(g->class_count(), CycNum(0));
  v[0] = CycNum(static_cast<int64_t>(g->order()));
  return ClassFunction(std::move(g), std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (!same_group(group, o.group)) return false;
  return values == o.values;
}

CycNum inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  require_same_group(phi.group, psi.group);
  const auto& G = *phi.group;
  CycNum sum(0);
  for (size_t c = 0; c < G.class_count(); ++c)
    sum += Rat(static_cast<int64_t>(G.class_sizes()[c])) * (phi.values[c] * psi.values[c].conjugate());
  return Rat(1, static_cast<int64_t>(G.order())) * sum;
}

ClassFunction tensor(const ClassFunction& phi, const ClassFunction& psi) {
  require_same_group(phi.group, psi.group);
  std::vector<CycNum> v(phi.values.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = phi.values[c] * psi.values[c];
  return ClassFunction(phi.group, std::move(v));
}

ClassFunction restrict_along(const ClassFunction& chi, const SubgroupEmbedding& H) {
  require_same_group(chi.group, H.parent);
  const auto& S = *H.sub;
  std::vector<CycNum> v(S.class_count());
  for (size_t c = 0; c < S.class_count(); ++c)
    v[c] = chi.at_element(H.incl[S.class_reps()[c]]);
  return ClassFunction(H.sub, std::move(v));
}

ClassFunction induce(const ClassFunction& lam, const SubgroupEmbedding& H) {
  require_same_group(lam.group, H.sub);
  const auto& G = *H.parent;
  std::vector<size_t> back = H.parent_to_sub();
  std::vector<CycNum> v(G.class_count(), CycNum(0));
  Rat scale(1, static_cast<int64_t>(H.sub->order()));
  for (size_t c = 0; c < G.class_count(); ++c) {
    size_t r = G.class_reps()[c];
    CycNum sum(0);
    for (size_t x = 0; x < G.order(); ++x) {
      size_t t = G.conj(x, r);
      if (back[t] != SubgroupEmbedding::npos) sum += lam.at_element(back[t]);
    }
    v[c] = scale * sum;
  }
  return ClassFunction(H.parent, std::move(v));
}

Int trivial_multiplicity(const ClassFunction& chi, const SubgroupEmbedding& I) {
  ClassFunction res = restrict_along(chi, I);
  CycNum m = inner_product(res, ClassFunction::trivial(I.sub));
  Int v = m.to_integer();  // NonIntegerResult when chi was not a character
  check(v >= 0, Err::NonIntegerResult, "negative multiplicity: not a character");
  return v;
}

ClassFunction det_character(const ClassFunction& chi) {
  Int d = chi.degree().to_integer();
  check(d >= 1 && d <= 3, Err::UnsupportedDegree, "determinant supported for degree <= 3");
  const auto& G = *chi.group;
  std::vector<CycNum> v(G.class_count());
  for (size_t c = 0; c < G.class_count(); ++c) {
    size_t g = G.class_reps()[c];
    const CycNum& p1 = chi.at_element(g);
    if (d == 1) {
      v[c] = p1;
      continue;
    }
    size_t g2 = G.mul(g, g);
    const CycNum& p2 = chi.at_element(g2);
    if (d == 2) {
      v[c] = Rat(1, 2) * (p1 * p1 - p2);
      continue;
    }
    const CycNum& p3 = chi.at_element(G.mul(g2, g));
    v[c] = Rat(1, 6) * (p1 * p1 * p1 - Rat(3) * p1 * p2 + Rat(2) * p3);
  }
  return ClassFunction(chi.group, std::move(v));
}

std::vector<ClassFunction> linear_characters(const GroupPtr& G) {
  // Work in Q = G/[G,G]; a linear character is a homomorphism Q -> roots of
  // unity. Cosets are labeled by their minimal element index.
  const auto& D = G->derived_indices();
  std::vector<size_t> coset_rep(G->order());
  {
    std::vector<bool> seen(G->order(), false);
    for (size_t e = 0; e < G->order(); ++e) {
      if (seen[e]) continue;
      std::vector<size_t> coset;
      for (size_t d : D) coset.push_back(G->mul(e, d));
      size_t rep = *std::min_element(coset.begin(), coset.end());
      for (size_t m : coset) {
        coset_rep[m] = rep;
        seen[m] = true;
      }
    }
  }
  std::vector<size_t> q_elems;
  for (size_t e = 0; e < G->order(); ++e)
    if (coset_rep[e] == e) q_elems.push_back(e);
  size_t qn = q_elems.size();
  std::map<size_t, size_t> q_index;
  for (size_t i = 0; i < qn; ++i) q_index[q_elems[i]] = i;
  auto qmul = [&](size_t a, size_t b) {  // indices into q_elems
    return q_index.at(coset_rep[G->mul(q_elems[a], q_elems[b])]);
  };

  // Greedy generating sequence for the abelian quotient.
  std::vector<size_t> gens;     // q indices
  std::vector<int> gen_orders;  // order in Q
  std::vector<bool> in_span(qn, false);
  in_span[q_index.at(coset_rep[0])] = true;
  size_t span_size = 1;
  for (size_t i = 0; i < qn && span_size < qn; ++i) {
    if (in_span[i]) continue;
    gens.push_back(i);
    int ord = 1;  // smallest t with i^t trivial; i is not the identity here
    for (size_t cur = qmul(i, i); cur != i; cur = qmul(cur, i)) ++ord;
    gen_orders.push_back(ord);
    // Extend span: multiply existing span by powers of the new generator.
    std::vector<size_t> snapshot;
    for (size_t s = 0; s < qn; ++s)
      if (in_span[s]) snapshot.push_back(s);
    for (size_t s : snapshot) {
      size_t cur = s;
      for (int t = 1; t < ord; ++t) {
        cur = qmul(cur, i);
        if (!in_span[cur]) {
          in_span[cur] = true;
          ++span_size;
        }
      }
    }
  }

  // Enumerate candidate generator images and keep the consistent ones.
  std::vector<ClassFunction> out;
  std::vector<int> expo(gens.size(), 0);
  size_t id = q_index.at(coset_rep[0]);
  while (true) {
    std::vector<CycNum> omega;
    for (size_t t = 0; t < gens.size(); ++t)
      omega.push_back(CycNum::root_of_unity(gen_orders[t], expo[t]));
    // BFS assignment over the quotient Cayley graph with consistency check.
    std::vector<CycNum> val(qn);
    std::vector<bool> done(qn, false);
    val[id] = CycNum(1);
    done[id] = true;
    std::vector<size_t> queue = {id};
    bool ok = true;
    for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
      for (size_t t = 0; t < gens.size() && ok; ++t) {
        size_t nxt = qmul(queue[qi], gens[t]);
        CycNum w = val[queue[qi]] * omega[t];
        if (!done[nxt]) {
          val[nxt] = w;
          done[nxt] = true;
          queue.push_back(nxt);
        } else if (val[nxt] != w) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<CycNum> v(G->class_count());
      for (size_t c = 0; c < G->class_count(); ++c)
        v[c] = val[q_index.at(coset_rep[G->class_reps()[c]])];
      out.emplace_back(G, std::move(v));
    }
    // Odometer.
    size_t t = 0;
    for (; t < expo.size(); ++t) {
      if (++expo[t] < gen_orders[t]) break;
      expo[t] = 0;
    }
    if (t == expo.size()) break;
  }
  check(out.size() == qn, Err::Internal, "linear character count != abelianization order");
  return out;
}

std::optional<std::pair<SubgroupEmbedding, ClassFunction>> monomial_witness(
    const ClassFunction& chi, const GroupPtr& G) {
  require_same_group(chi.group, G);
  check(inner_product(chi, chi) == CycNum(1), Err::PreconditionFailed,
        "monomial witness requires an irreducible character");
  Int d = chi.degree().to_integer();
  if (d == 1) {
    auto self = SubgroupEmbedding::inclusion(G, G);
    return std::make_pair(std::move(self), chi);
  }
  for (auto& H : subgroups(G)) {
    if (Int(static_cast<int64_t>(H.sub->order())) * d != Int(static_cast<int64_t>(G->order())))
      continue;
    for (auto& lam : linear_characters(H.sub)) {
      if (induce(lam, H) == chi) return std::make_pair(std::move(H), std::move(lam));
    }
  }
  return std::nullopt;
}

void verify_table(const GroupPtr& G, const std::vector<ClassFunction>& table) {
  size_t k = G->class_count();
  check(table.size() == k, Err::NotOrthogonal, "table row count != class count");
  Int degsq(0);
  for (const auto& row : table) {
    check(same_group(row.group, G), Err::GroupMismatch, "table row on wrong group");
    Int d = row.degree().to_integer();
    check(d >= 1, Err::NotOrthogonal, "character degree not positive");
    degsq += d * d;
  }
  check(degsq == Int(static_cast<int64_t>(G->order())), Err::NotOrthogonal,
        "degree squares do not sum to group order");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      CycNum ip = inner_product(table[i], table[j]);
      check(ip == CycNum(i == j ? 1 : 0), Err::NotOrthogonal, "row orthogonality fails");
    }
  for (size_t c = 0; c < k; ++c)
    for (size_t c2 = 0; c2 < k; ++c2) {
      CycNum sum(0);
      for (size_t i = 0; i < k; ++i) sum += table[i].values[c] * table[i].values[c2].conjugate();
      CycNum expect(0);
      if (c == c2)
        expect = CycNum(Rat(static_cast<int64_t>(G->order()),
                            static_cast<int64_t>(G->class_sizes()[c])));
      check(sum == expect, Err::NotOrthogonal, "column orthogonality fails");
    }
}

namespace {

// Discrete log of parent element x in the cyclic group generated by g.
int dlog(const PermGroup& G, size_t g, size_t x) {
  size_t cur = 0;
  for (int j = 0; j < static_cast<int>(G.order()) + 1; ++j) {
    if (cur == x) return j;
    cur = G.mul(cur, g);
  }
  fail(Err::Internal, "element not a power of the generator");
}

std::vector<ClassFunction> cyclic_table(const GroupPtr& G, int k) {
  size_t g = k == 1 ? 0 : G->index_of([&] {
    Perm c(k);
    for (int i = 0; i < k; ++i) c[i] = static_cast<uint16_t>((i + 1) % k);
    return c;
  }());
  std::vector<ClassFunction> rows;
  for (int i = 0; i < k; ++i) {
    std::vector<CycNum> v(G->class_count());
    for (size_t c = 0; c < G->class_count(); ++c) {
      int j = dlog(*G, g, G->class_reps()[c]);
      v[c] = CycNum::root_of_unity(k, static_cast<int64_t>(i) * j);
    }
    rows.emplace_back(G, std::move(v));
  }
  return rows;
}

std::vector<ClassFunction> dihedral_table(const GroupPtr& G, int k) {
  // Locate the rotation generator r and a reflection s in the realization.
  Perm rp, sp;
  if (k == 1) {
    rp = perm_identity(2);
    sp = perm_parse("(1,2)", 2);
  } else if (k == 2) {
    rp = perm_parse("(1,2)", 4);
    sp = perm_parse("(3,4)", 4);
  } else {
    rp.resize(k);
    sp.resize(k);
    for (int i = 0; i < k; ++i) {
      rp[i] = static_cast<uint16_t>((i + 1) % k);
      sp[i] = static_cast<uint16_t>((k - i) % k);
    }
  }
  size_t r = G->index_of(rp), s = G->index_of(sp);
  // Class rep decomposition: rotation r^j or reflection s r^j.
  size_t nc = G->class_count();
  std::vector<bool> is_rot(nc);
  std::vector<int> rot_pow(nc);
  for (size_t c = 0; c < nc; ++c) {
    size_t x = G->class_reps()[c];
    bool rot = false;
    size_t cur = 0;
    for (int j = 0; j < k; ++j) {
      if (cur == x) {
        rot = true;
        rot_pow[c] = j;
        break;
      }
      cur = G->mul(cur, r);
    }
    is_rot[c] = rot;
    if (!rot) rot_pow[c] = dlog(*G, r, G->mul(s, x));  // s * (s r^j) = r^j
  }
  std::vector<ClassFunction> rows;
  auto linear = [&](int er, int es) {
    std::vector<CycNum> v(nc);
    for (size_t c = 0; c < nc; ++c) {
      int sign = (rot_pow[c] % 2 == 0) ? 1 : er;
      v[c] = CycNum(is_rot[c] ? sign : es * sign);
    }
    rows.emplace_back(G, std::move(v));
  };
  if (k % 2 == 1) {
    linear(1, 1);
    linear(1, -1);
  } else {
    linear(1, 1);
    linear(1, -1);
    linear(-1, 1);
    linear(-1, -1);
  }
  int two_dims = (k % 2 == 1) ? (k - 1) / 2 : k / 2 - 1;
  for (int m = 1; m <= two_dims; ++m) {
    std::vector<CycNum> v(nc);
    for (size_t c = 0; c < nc; ++c) {
      if (is_rot[c])
        v[c] = CycNum::root_of_unity(k, static_cast<int64_t>(m) * rot_pow[c]) +
               CycNum::root_of_unity(k, -static_cast<int64_t>(m) * rot_pow[c]);
      else
        v[c] = CycNum(0);
    }
    rows.emplace_back(G, std::move(v));
  }
  return rows;
}

// Class index with the given representative order and class size; the two
// order-3 / order-5 pairs are returned in canonical class order.
std::vector<size_t> classes_with(const GroupPtr& G, int ord, size_t size) {
  std::vector<size_t> out;
  for (size_t c = 0; c < G->class_count(); ++c)
    if (G->element_order(G->class_reps()[c]) == ord && G->class_sizes()[c] == size)
      out.push_back(c);
  return out;
}

std::vector<ClassFunction> a4_table(const GroupPtr& G) {
  size_t e = classes_with(G, 1, 1).at(0);
  size_t c2 = classes_with(G, 2, 3).at(0);
  auto c3 = classes_with(G, 3, 4);
  check(c3.size() == 2, Err::Internal, "A4 class layout");
  auto row = [&](CycNum ve, CycNum v2, CycNum v3a, CycNum v3b) {
    std::vector<CycNum> v(4);
    v[e] = ve;
    v[c2] = v2;
    v[c3[0]] = v3a;
    v[c3[1]] = v3b;
    return ClassFunction(G, std::move(v));
  };
  CycNum w = CycNum::root_of_unity(3), w2 = CycNum::root_of_unity(3, 2);
  return {
      row(CycNum(1), CycNum(1), CycNum(1), CycNum(1)),
      row(CycNum(1), CycNum(1), w, w2),
      row(CycNum(1), CycNum(1), w2, w),
      row(CycNum(3), CycNum(-1), CycNum(0), CycNum(0)),
  };
}

std::vector<ClassFunction> s4_table(const GroupPtr& G) {
  size_t e = classes_with(G, 1, 1).at(0);
  size_t tr = classes_with(G, 2, 6).at(0);   // transpositions
  size_t dt = classes_with(G, 2, 3).at(0);   // double transpositions
  size_t c3 = classes_with(G, 3, 8).at(0);
  size_t c4 = classes_with(G, 4, 6).at(0);
  auto row = [&](int a, int b, int c, int d, int f) {
    std::vector<CycNum> v(5);
    v[e] = CycNum(a);
    v[tr] = CycNum(b);
    v[dt] = CycNum(c);
    v[c3] = CycNum(d);
    v[c4] = CycNum(f);
    return ClassFunction(G, std::move(v));
  };
  return {
      row(1, 1, 1, 1, 1),      // trivial
      row(1, -1, 1, 1, -1),    // sign
      row(2, 0, 2, -1, 0),     // two-dimensional
      row(3, 1, -1, 0, -1),    // standard
      row(3, -1, -1, 0, 1),    // standard tensor sign
  };
}

std::vector<ClassFunction> a5_table(const GroupPtr& G) {
  size_t e = classes_with(G, 1, 1).at(0);
  size_t c2 = classes_with(G, 2, 15).at(0);
  size_t c3 = classes_with(G, 3, 20).at(0);
  auto c5 = classes_with(G, 5, 12);
  check(c5.size() == 2, Err::Internal, "A5 class layout");
  // 1 + 2cos(2 pi / 5) and 1 + 2cos(4 pi / 5): the golden pair.
  CycNum z5 = CycNum::root_of_unity(5);
  CycNum phi_p = CycNum(1) + z5 + z5.galois(4);
  CycNum phi_m = CycNum(1) + z5.galois(2) + z5.galois(3);
  auto row = [&](CycNum a, CycNum b, CycNum c, CycNum d, CycNum f) {
    std::vector<CycNum> v(5);
    v[e] = a;
    v[c2] = b;
    v[c3] = c;
    v[c5[0]] = d;
    v[c5[1]] = f;
    return ClassFunction(G, std::move(v));
  };
  return {
      row(CycNum(1), CycNum(1), CycNum(1), CycNum(1), CycNum(1)),
      row(CycNum(3), CycNum(-1), CycNum(0), phi_p, phi_m),
      row(CycNum(3), CycNum(-1), CycNum(0), phi_m, phi_p),
      row(CycNum(4), CycNum(0), CycNum(1), CycNum(-1), CycNum(-1)),
      row(CycNum(5), CycNum(1), CycNum(-1), CycNum(0), CycNum(0)),
  };
}

std::vector<ClassFunction> product_c2_table(const GroupPtr& G, const std::string& base) {
  GroupPtr X = builtin_group(base);
  std::vector<ClassFunction> base_rows = builtin_table(base);
  int d = X->degree();
  size_t nc = G->class_count();
  // Decompose each class representative into (element of X, central bit).
  std::vector<size_t> xclass(nc);
  std::vector<int> bit(nc);
  for (size_t c = 0; c < nc; ++c) {
    const Perm& p = G->elements()[G->class_reps()[c]];
    Perm xpart(p.begin(), p.begin() + d);
    xclass[c] = X->class_of(X->index_of(xpart));
    bit[c] = p[d] == static_cast<uint16_t>(d) ? 0 : 1;
  }
  std::vector<ClassFunction> rows;
  for (const auto& chi : base_rows) {
    for (int eps : {1, -1}) {
      std::vector<CycNum> v(nc);
      for (size_t c = 0; c < nc; ++c)
        v[c] = (bit[c] == 1 && eps == -1) ? -chi.values[xclass[c]] : chi.values[xclass[c]];
      rows.emplace_back(G, std::move(v));
    }
  }
  return rows;
}

}  // namespace

std::vector<ClassFunction> builtin_table(const std::string& label) {
  GroupPtr G = builtin_group(label);
  std::vector<ClassFunction> rows;
  if (label == "A4")
    rows = a4_table(G);
  else if (label == "S4")
    rows = s4_table(G);
  else if (label == "A5")
    rows = a5_table(G);
  else if (label.size() > 3 && label.substr(label.size() - 3) == "xC2")
    rows = product_c2_table(G, label.substr(0, label.size() - 3));
  else if (label[0] == 'C')
    rows = cyclic_table(G, static_cast<int>(G->order()));
  else
    rows = dihedral_table(G, static_cast<int>(G->order() / 2));
  verify_table(G, rows);
  return rows;
}

std::string table_to_json(const std::string& label, const GroupPtr& G,
                          const std::vector<ClassFunction>& table) {
  nlohmann::json j;
  j["label"] = label;
  j["order"] = G->order();
  nlohmann::json classes = nlohmann::json::array();
  for (size_t c = 0; c < G->class_count(); ++c) {
    nlohmann::json cls;
    cls["rep"] = perm_str(G->elements()[G->class_reps()[c]]);
    cls["size"] = G->class_sizes()[c];
    cls["element_order"] = G->element_order(G->class_reps()[c]);
    classes.push_back(cls);
  }
  j["classes"] = classes;
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& row : table) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : row.values) {
      CycNum m = v.minimal_form();
      nlohmann::json cv;
      cv["n"] = m.conductor();
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& co : m.coeffs()) coeffs.push_back(to_string(co));
      cv["coeffs"] = coeffs;
      values.push_back(cv);
    }
    nlohmann::json row_j;
    row_j["degree"] = to_string(row.degree().to_rational());
    row_j["values"] = values;
    chars.push_back(row_j);
  }
  j["characters"] = chars;
  return j.dump(2);
}

}  // namespace artin3

#include "core/permgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace artin3 {

std::shared_ptr<const PermGroup> PermGroup::close(int degree, std::vector<Perm> gens,
                                                  std::string label) {
  check(degree >= 1 && degree <= 960, Err::InvalidArgument, "unsupported degree");
  for (const auto& g : gens) {
    check(g.size() == static_cast<size_t>(degree), Err::InvalidArgument,
          "generator degree mismatch");
    check(perm_valid(g), Err::InvalidArgument, "generator is not a permutation");
  }

  std::set<Perm> seen;
  std::vector<Perm> queue;
  Perm id = perm_identity(degree);
  seen.insert(id);
  queue.push_back(id);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (const auto& g : gens) {
      Perm nxt = perm_compose(cur, g);
      if (seen.insert(nxt).second) {
        check(seen.size() <= kMaxOrder, Err::GroupTooLarge, "closure exceeds 960 elements");
        queue.push_back(std::move(nxt));
      }
    }
  }

  auto G = std::shared_ptr<PermGroup>(new PermGroup());
  G->degree_ = degree;
  G->label_ = std::move(label);
  G->gens_ = std::move(gens);
  G->elems_.assign(seen.begin(), seen.end());  // set iteration = lex order
  size_t n = G->elems_.size();

  std::map<Perm, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(G->elems_[i], i);

  G->table_.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      G->table_[i * n + j] =
          static_cast<uint16_t>(index.at(perm_compose(G->elems_[i], G->elems_[j])));

  G->inverse_.resize(n);
  G->orders_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    G->inverse_[i] = index.at(perm_inverse(G->elems_[i]));
    G->orders_[i] = perm_order(G->elems_[i]);
  }

  // Conjugacy classes, canonical order: (rep order, lex-min member). The
  // identity sorts first since it is the unique order-1 element.
  G->class_of_.assign(n, static_cast<size_t>(-1));
  struct Cls {
    size_t min_elem;
    std::vector<size_t> members;
  };
  std::vector<Cls> classes;
  for (size_t i = 0; i < n; ++i) {
    if (G->class_of_[i] != static_cast<size_t>(-1)) continue;
    std::set<size_t> orbit;
    for (size_t x = 0; x < n; ++x) orbit.insert(G->conj(x, i));
    Cls c;
    c.min_elem = *orbit.begin();
    c.members.assign(orbit.begin(), orbit.end());
    for (size_t m : c.members) G->class_of_[m] = 0;  // mark visited
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [&](const Cls& a, const Cls& b) {
    int oa = G->orders_[a.min_elem], ob = G->orders_[b.min_elem];
    if (oa != ob) return oa < ob;
    return G->elems_[a.min_elem] < G->elems_[b.min_elem];
  });
  for (size_t c = 0; c < classes.size(); ++c) {
    G->class_reps_.push_back(classes[c].min_elem);
    G->class_sizes_.push_back(classes[c].members.size());
    for (size_t m : classes[c].members) G->class_of_[m] = c;
  }

  // Derived subgroup: closure of all commutators (closure under the group
  // multiplication of the commutator set, which contains the identity).
  std::set<size_t> comm;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      comm.insert(G->mul(G->mul(a, b), G->inv(G->mul(b, a))));
  std::vector<size_t> work(comm.begin(), comm.end());
  for (size_t qi = 0; qi < work.size(); ++qi)
    for (size_t gi : std::vector<size_t>(comm.begin(), comm.end())) {
      size_t prod = G->mul(work[qi], gi);
      if (comm.insert(prod).second) work.push_back(prod);
    }
  G->derived_.assign(comm.begin(), comm.end());

  return G;
}

size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  check(it != elems_.end() && *it == p, Err::InvalidArgument, "element not in group");
  return static_cast<size_t>(it - elems_.begin());
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::is_abelian() const {
  size_t n = elems_.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  for (size_t i = 0; i < elems_.size(); ++i)
    if (orders_[i] == static_cast<int>(elems_.size())) return true;
  return elems_.size() == 1;
}

SubgroupEmbedding SubgroupEmbedding::inclusion(GroupPtr sub, GroupPtr parent) {
  check(sub->degree() == parent->degree(), Err::GroupMismatch,
        "inclusion requires equal degree");
  SubgroupEmbedding e;
  e.incl.reserve(sub->order());
  for (const auto& p : sub->elements()) e.incl.push_back(parent->index_of(p));
  e.sub = std::move(sub);
  e.parent = std::move(parent);
  return e;
}

namespace {

GroupPtr make_cyclic(int k) {
  if (k == 1) return PermGroup::close(1, {}, "C1");
  Perm c(k);
  for (int i = 0; i < k; ++i) c[i] = static_cast<uint16_t>((i + 1) % k);
  return PermGroup::close(k, {c}, "C" + std::to_string(k));
}

}  // namespace

SubgroupEmbedding SubgroupEmbedding::cyclic(GroupPtr parent, size_t g) {
  int k = parent->element_order(g);
  GroupPtr ck = make_cyclic(k);
  // Map generator-cycle powers to powers of g.
  Perm cyc(k <= 1 ? 1 : k);
  if (k > 1) {
    for (int i = 0; i < k; ++i) cyc[i] = static_cast<uint16_t>((i + 1) % k);
  } else {
    cyc[0] = 0;
  }
  SubgroupEmbedding e;
  e.incl.assign(ck->order(), npos);
  size_t cur_sub = ck->index_of(perm_identity(ck->degree()));
  size_t sub_gen = k > 1 ? ck->index_of(cyc) : cur_sub;
  size_t cur_par = 0;  // identity
  for (int j = 0; j < k; ++j) {
    e.incl[cur_sub] = cur_par;
    cur_sub = ck->mul(cur_sub, sub_gen);
    cur_par = parent->mul(cur_par, g);
  }
  e.sub = std::move(ck);
  e.parent = std::move(parent);
  return e;
}

SubgroupEmbedding SubgroupEmbedding::from_gen_images(GroupPtr sub, GroupPtr parent,
                                                     const std::vector<size_t>& gen_images) {
  check(gen_images.size() == sub->generators().size(), Err::InvalidArgument,
        "one image per generator required");
  // Extend multiplicatively by BFS from the identity, checking consistency.
  SubgroupEmbedding e;
  e.incl.assign(sub->order(), npos);
  e.incl[0] = 0;
  std::vector<size_t> gi;
  for (const auto& g : sub->generators()) gi.push_back(sub->index_of(g));
  std::vector<size_t> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    size_t h = queue[qi];
    for (size_t t = 0; t < gi.size(); ++t) {
      size_t h2 = sub->mul(h, gi[t]);
      size_t img = parent->mul(e.incl[h], gen_images[t]);
      if (e.incl[h2] == npos) {
        e.incl[h2] = img;
        queue.push_back(h2);
      } else {
        check(e.incl[h2] == img, Err::GroupMismatch, "generator images are not a homomorphism");
      }
    }
  }
  std::set<size_t> distinct(e.incl.begin(), e.incl.end());
  check(!distinct.count(npos), Err::GroupMismatch, "generators do not generate the subgroup");
  check(distinct.size() == e.incl.size(), Err::GroupMismatch, "embedding not injective");
  e.sub = std::move(sub);
  e.parent = std::move(parent);
  return e;
}

std::vector<size_t> SubgroupEmbedding::parent_to_sub() const {
  std::vector<size_t> back(parent->order(), npos);
  for (size_t h = 0; h < incl.size(); ++h) back[incl[h]] = h;
  return back;
}

namespace {

// Closure of a set of parent element indices under the parent's table.
std::vector<size_t> close_indices(const PermGroup& G, std::vector<size_t> seed) {
  std::set<size_t> s(seed.begin(), seed.end());
  s.insert(0);
  std::vector<size_t> queue(s.begin(), s.end());
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (size_t b : std::vector<size_t>(s.begin(), s.end())) {
      size_t p = G.mul(queue[qi], b);
      if (s.insert(p).second) queue.push_back(p);
    }
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<SubgroupEmbedding> subgroups(const GroupPtr& G) {
  check(G->order() <= 240, Err::GroupTooLarge, "subgroup lattice capped at order 240");
  // Cyclic subgroups, then join pairs to a fixpoint.
  std::set<std::vector<size_t>> subs;
  for (size_t g = 0; g < G->order(); ++g) {
    std::vector<size_t> cyc;
    size_t cur = 0;
    do {
      cyc.push_back(cur);
      cur = G->mul(cur, g);
    } while (cur != 0);
    std::sort(cyc.begin(), cyc.end());
    subs.insert(cyc);
  }
  // Join pairs; the worklist grows, and each unordered pair is joined once.
  std::vector<std::vector<size_t>> list(subs.begin(), subs.end());
  for (size_t i = 1; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      if (std::includes(list[i].begin(), list[i].end(), list[j].begin(), list[j].end()) ||
          std::includes(list[j].begin(), list[j].end(), list[i].begin(), list[i].end()))
        continue;
      std::vector<size_t> seed = list[i];
      seed.insert(seed.end(), list[j].begin(), list[j].end());
      std::vector<size_t> joined = close_indices(*G, std::move(seed));
      if (subs.insert(joined).second) list.push_back(std::move(joined));
    }

  std::vector<std::vector<size_t>> ordered(subs.begin(), subs.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<SubgroupEmbedding> out;
  out.reserve(ordered.size());
  for (const auto& idxs : ordered) {
    std::vector<Perm> members;
    members.reserve(idxs.size());
    for (size_t i : idxs) members.push_back(G->elements()[i]);
    GroupPtr H = PermGroup::close(G->degree(), members);
    check(H->order() == idxs.size(), Err::Internal, "subgroup closure mismatch");
    out.push_back(SubgroupEmbedding::inclusion(std::move(H), G));
  }
  return out;
}

namespace {

GroupPtr make_dihedral(int k) {
  std::string label = "D" + std::to_string(k);
  if (k == 1) return PermGroup::close(2, {perm_parse("(1,2)", 2)}, label);
  if (k == 2) return PermGroup::close(4, {perm_parse("(1,2)", 4), perm_parse("(3,4)", 4)}, label);
  Perm r(k), s(k);
  for (int i = 0; i < k; ++i) {
    r[i] = static_cast<uint16_t>((i + 1) % k);
    s[i] = static_cast<uint16_t>((k - i) % k);
  }
  return PermGroup::close(k, {r, s}, label);
}

GroupPtr make_product_with_c2(const GroupPtr& X, const std::string& label) {
  int d = X->degree();
  std::vector<Perm> gens;
  for (const auto& g : X->generators()) {
    Perm lift(d + 2);
    for (int i = 0; i < d; ++i) lift[i] = g[i];
    lift[d] = static_cast<uint16_t>(d);
    lift[d + 1] = static_cast<uint16_t>(d + 1);
    gens.push_back(std::move(lift));
  }
  Perm sw = perm_identity(d + 2);
  std::swap(sw[d], sw[d + 1]);
  gens.push_back(std::move(sw));
  return PermGroup::close(d + 2, gens, label);
}

}  // namespace

GroupPtr builtin_group(const std::string& label) {
  if (label == "A4") return PermGroup::close(4, {perm_parse("(1,2)(3,4)", 4), perm_parse("(1,2,3)", 4)}, "A4");
  if (label == "S4") return PermGroup::close(4, {perm_parse("(1,2)", 4), perm_parse("(1,2,3,4)", 4)}, "S4");
  if (label == "A5") return PermGroup::close(5, {perm_parse("(1,2,3,4,5)", 5), perm_parse("(1,2)(3,4)", 5)}, "A5");
  if (label.size() > 3 && label.substr(label.size() - 3) == "xC2") {
    std::string base = label.substr(0, label.size() - 3);
    check(base == "A4" || base == "S4" || base == "A5", Err::UnsupportedGroup,
          "no built-in group named " + label);
    return make_product_with_c2(builtin_group(base), label);
  }
  if (!label.empty() && (label[0] == 'C' || label[0] == 'D')) {
    int k = 0;
    for (size_t i = 1; i < label.size(); ++i) {
      if (label[i] < '0' || label[i] > '9') { k = -1; break; }
      k = k * 10 + (label[i] - '0');
    }
    if (k >= 1 && k <= 12) return label[0] == 'C' ? make_cyclic(k) : make_dihedral(k);
  }
  fail(Err::UnsupportedGroup, "no built-in group named " + label);
}

}  // namespace artin3

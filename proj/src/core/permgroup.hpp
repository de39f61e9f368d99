#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/perm.hpp"

namespace artin3 {

// Finite permutation group, fully materialized: element list in lexicographic
// order (identity is always index 0), multiplication table, and conjugacy
// classes. Immutable after construction.
class PermGroup {
public:
  static constexpr size_t kMaxOrder = 960;

  // Closure of the generators; GroupTooLarge above kMaxOrder elements.
  static std::shared_ptr<const PermGroup> close(int degree, std::vector<Perm> gens,
                                                std::string label = "");

  int degree() const { return degree_; }
  size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& label() const { return label_; }

  // Index of a permutation in the element list; InvalidArgument if absent.
  size_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const;

  size_t mul(size_t a, size_t b) const { return table_[a * elems_.size() + b]; }
  size_t inv(size_t a) const { return inverse_[a]; }
  size_t conj(size_t x, size_t g) const { return mul(mul(x, g), inv(x)); }  // x g x^-1
  int element_order(size_t a) const { return orders_[a]; }

  // Conjugacy classes in canonical order: identity class first, then by
  // (element order of representative, lexicographically smallest member).
  size_t class_count() const { return class_reps_.size(); }
  size_t class_of(size_t elem) const { return class_of_[elem]; }
  const std::vector<size_t>& class_reps() const { return class_reps_; }
  const std::vector<size_t>& class_sizes() const { return class_sizes_; }

  // Derived subgroup [G,G] as a sorted list of element indices.
  const std::vector<size_t>& derived_indices() const { return derived_; }

  bool is_abelian() const;
  bool is_cyclic() const;
  bool is_perfect() const { return derived_.size() == elems_.size(); }

private:
  PermGroup() = default;

  int degree_ = 0;
  std::string label_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::vector<uint16_t> table_;
  std::vector<size_t> inverse_;
  std::vector<int> orders_;
  std::vector<size_t> class_of_;
  std::vector<size_t> class_reps_;
  std::vector<size_t> class_sizes_;
  std::vector<size_t> derived_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

// H embedded in G by an injective homomorphism, stored as the image of each
// subgroup element index in the parent's element indices.
struct SubgroupEmbedding {
  GroupPtr sub;
  GroupPtr parent;
  std::vector<size_t> incl;

  // Literal inclusion: every element of H is an element of G (same degree).
  static SubgroupEmbedding inclusion(GroupPtr sub, GroupPtr parent);
  // The cyclic subgroup generated by parent element g, as a canonical cycle
  // group C_k with its generator mapped to g.
  static SubgroupEmbedding cyclic(GroupPtr parent, size_t g);
  // General form: image of each subgroup generator; extended and checked.
  static SubgroupEmbedding from_gen_images(GroupPtr sub, GroupPtr parent,
                                           const std::vector<size_t>& gen_images);

  size_t index() const { return parent->order() / sub->order(); }
  // Parent element index -> subgroup element index, or npos if outside.
  std::vector<size_t> parent_to_sub() const;

  static constexpr size_t npos = static_cast<size_t>(-1);
};

// All subgroups of G up to equality (not conjugacy), each with its literal
// inclusion, ordered by (order, element index set). Requires |G| <= 240.
std::vector<SubgroupEmbedding> subgroups(const GroupPtr& G);

// Canonical realizations of the built-in families. Labels: C1..C12, D1..D12,
// A4, S4, A5, A4xC2, S4xC2, A5xC2. UnsupportedGroup otherwise.
GroupPtr builtin_group(const std::string& label);

}  // namespace artin3

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/exactnum.hpp"
#include "core/permgroup.hpp"

namespace artin3 {

// Class function on a permutation group: one exact cyclotomic value per
// conjugacy class, in the group's canonical class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<CycNum> values;

  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<CycNum> v);

  const CycNum& at_class(size_t c) const { return values[c]; }
  const CycNum& at_element(size_t elem) const { return values[group->class_of(elem)]; }
  const CycNum& degree() const { return values[0]; }

  static ClassFunction trivial(GroupPtr g);
  static ClassFunction regular(GroupPtr g);

  bool operator==(const ClassFunction& o) const;
};

// (1/|G|) sum_g phi(g) conj(psi(g)). GroupMismatch on different groups.
// Same underlying group, by pointer or by literal element list.
bool same_group(const GroupPtr& a, const GroupPtr& b);

CycNum inner_product(const ClassFunction& phi, const ClassFunction& psi);

// Pointwise product.
ClassFunction tensor(const ClassFunction& phi, const ClassFunction& psi);

// Values transported along the embedding to the subgroup's classes.
ClassFunction restrict_along(const ClassFunction& chi, const SubgroupEmbedding& H);

// Frobenius induction from the embedded subgroup to its parent.
ClassFunction induce(const ClassFunction& lam, const SubgroupEmbedding& H);

// dim V^I = <Res_I chi, 1>, certified to be a rational integer.
Int trivial_multiplicity(const ClassFunction& chi, const SubgroupEmbedding& I);

// Determinant character from power-sum bookkeeping; degree 1, 2 or 3 only.
ClassFunction det_character(const ClassFunction& chi);

// All degree-1 characters (characters of G/[G,G]).
std::vector<ClassFunction> linear_characters(const GroupPtr& G);

// A proper subgroup H and linear lambda with Ind lambda = chi, or nullopt if
// chi is primitive. Linear chi returns the degenerate witness (G, chi).
std::optional<std::pair<SubgroupEmbedding, ClassFunction>> monomial_witness(
    const ClassFunction& chi, const GroupPtr& G);

// Full irreducible character table for a built-in label; rows satisfy exact
// row and column orthogonality (checked on construction).
std::vector<ClassFunction> builtin_table(const std::string& label);

// Orthogonality audit: Internal error details if the rows are not an exact
// irreducible character table of the group. Returns normally on success.
void verify_table(const GroupPtr& G, const std::vector<ClassFunction>& table);

// Table serialized as JSON: label, class data, and per-character cyclotomic
// coefficient vectors.
std::string table_to_json(const std::string& label, const GroupPtr& G,
                          const std::vector<ClassFunction>& table);

}  // namespace artin3

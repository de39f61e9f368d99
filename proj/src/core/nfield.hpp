#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core/zpoly.hpp"

namespace artin3 {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Number field Q(theta) defined by a monic irreducible integer polynomial of
// degree 1..6. Construction certifies irreducibility, then computes the
// maximal order by Dedekind enlargement at every prime whose square divides
// disc(f), the true field discriminant, and the index [O_K : Z[theta]].
// Instances are immutable after construction and safe to share.
class NumberField {
public:
  static FieldPtr make(ZPoly f);
  // Same construction with the factorization of |disc(f)| supplied by a
  // caller that already factored it. The hint is validated before use: every
  // entry must be prime and the product must equal |disc(f)|, so a wrong
  // hint cannot skew the certified discriminant.
  static FieldPtr make(ZPoly f, const std::map<Int, int>& disc_factors);

  const ZPoly& poly() const { return f_; }
  int degree() const { return f_.degree(); }
  // Field discriminant d_K; disc(f) = index^2 * d_K.
  const Int& disc() const { return disc_; }
  const Int& index() const { return index_; }
  const Int& defining_disc() const { return poly_disc_; }
  // Valuation of the index at every prime whose square divides disc(f).
  // A zero entry certifies that Z[theta] is already maximal at that prime.
  const std::map<Int, int>& index_valuations() const { return index_val_; }
  // Integral basis of the maximal order: rows are power-basis coordinates,
  // in Hermite form over a common denominator; the first row is 1.
  const std::vector<std::vector<Rat>>& integral_basis() const { return basis_; }
  // Trace of theta^k for 0 <= k < degree.
  const std::vector<Int>& power_traces() const { return traces_; }
  // {"d_K": "...", "index": "...", "poly": ["c0", ...]}; integers as strings.
  std::string to_json() const;

private:
  NumberField() = default;
  static FieldPtr make_impl(ZPoly f, const std::map<Int, int>* disc_factors);

  ZPoly f_;
  Int poly_disc_, disc_, index_;
  std::map<Int, int> index_val_;
  std::vector<std::vector<Rat>> basis_;
  std::vector<Int> traces_;
};

// Same field: pointer equality or an identical defining polynomial.
bool same_field(const FieldPtr& a, const FieldPtr& b);

// a_0 + a_1*theta + ... + a_{d-1}*theta^{d-1} in the parent's power basis.
struct FieldElement {
  FieldPtr parent;
  std::vector<Rat> co;  // exactly degree entries
};

// Constructors pad or reject coordinate vectors longer than the degree.
FieldElement elem(const FieldPtr& k, std::vector<Rat> coords);
FieldElement elem_int(const FieldPtr& k, const std::vector<int64_t>& coords);
FieldElement elem_rat(const FieldPtr& k, const Rat& r);
FieldElement elem_theta(const FieldPtr& k);

bool elem_is_zero(const FieldElement& a);
bool elem_is_rational(const FieldElement& a);
bool elem_eq(const FieldElement& a, const FieldElement& b);
FieldElement elem_add(const FieldElement& a, const FieldElement& b);
FieldElement elem_sub(const FieldElement& a, const FieldElement& b);
FieldElement elem_neg(const FieldElement& a);
FieldElement elem_mul(const FieldElement& a, const FieldElement& b);
// Multiplicative inverse; ZeroElement on zero.
FieldElement elem_inverse(const FieldElement& a);
FieldElement elem_div(const FieldElement& a, const FieldElement& b);
// Integer power; negative exponents invert first.
FieldElement elem_pow(const FieldElement& a, int k);
// Evaluation of an integer polynomial at a field element.
FieldElement elem_eval(const ZPoly& g, const FieldElement& a);

Rat elem_norm(const FieldElement& a);
Rat elem_trace(const FieldElement& a);
// Monic characteristic polynomial of a, coefficients low to high,
// length degree + 1.
std::vector<Rat> elem_charpoly(const FieldElement& a);
// Monic minimal polynomial over the rationals, coefficients low to high.
std::vector<Rat> elem_minpoly(const FieldElement& a);

// True iff a*b is a square in the parent field, decided exactly: after the
// rational and norm filters, x^2 - a*b has a root in K iff a shifted norm
// resultant of certified squarefree reduction is reducible over Z.
bool sqrt_class_equal(const FieldElement& a, const FieldElement& b);

struct DedekindResult {
  bool maximal;
  // When not maximal: monic W with W(theta)/p integral but outside Z[theta].
  ZPoly witness;
};

// Dedekind p-maximality criterion for Z[theta]; f monic, p prime < 2^31.
DedekindResult dedekind_test(const ZPoly& f, const Int& p);

// (field discriminant, index) for the field defined by monic f.
// IrreducibilityFailure if f factors.
std::pair<Int, Int> field_disc(const ZPoly& f);

// Splitting shape of p in K: (residue degree, ramification index) pairs,
// sorted ascending, summing to the degree. IndexDivisor when p divides the
// index, where the polynomial shape does not certify the splitting.
std::vector<std::pair<int, int>> prime_splitting(const FieldPtr& k, const Int& p);

// The degree-6 field M(sqrt(alpha)) for cubic M and alpha not a square.
// The defining polynomial is a resultant certified irreducible, retrying
// with alpha*c^2 over a fixed multiplier list when the candidate square
// root generates only a subfield; IsSquare / ReducibleResultant otherwise.
FieldPtr sextic_from_sqrt(const FieldPtr& m_field, const FieldElement& alpha);

}  // namespace artin3

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/ints.hpp"
#include "core/nfield.hpp"
#include "core/zpoly.hpp"

namespace artin3 {

// Integral binary cubic form  a x^3 + b x^2 y + c x y^2 + d y^3.
//
// GL2(Z) acts by substitution on (x, y); equivalence classes of irreducible
// forms whose ring of integral matrices is maximal correspond to cubic fields,
// with disc(form) = d_M. The library convention for "reduced":
//
//   disc > 0 (totally real): the Hessian (P, Q, R) = (b^2 - 3ac, bc - 9ad,
//   c^2 - 3bd) is a positive definite quadratic form with discriminant
//   Q^2 - 4PR = -3 disc(f); the form is reduced when |Q| <= P <= R.
//
//   disc < 0 (one real embedding): normalize the sign so a > 0, write rho for
//   the real root and z for the upper complex root of f(x, 1); the form is
//   reduced when z lies in the classical fundamental domain |Re z| <= 1/2,
//   |z| >= 1. Because f has a single real root, both conditions reduce to
//   signs of f at rational test points and are evaluated exactly:
//     Re z <= 1/2   <=>  (a+b)^2 + c(a+b) - ad >= 0
//     Re z >= -1/2  <=>  (a-b)^2 + c(a-b) + ad >= 0
//     |z| >= 1      <=>  d^2 - bd + ac - a^2 >= 0
//   (The flag is meaningful for irreducible forms; reducible forms may make
//   the root-geometry reading vacuous but the inequalities are still well
//   defined.)
struct BinaryCubicForm {
  Int a, b, c, d;
  Int disc;      // 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
  bool reduced;  // the convention above, evaluated on (a>0 ? f : -f)
};

// Computes the discriminant and the reduced flag.
BinaryCubicForm make_form(const Int& a, const Int& b, const Int& c, const Int& d);

struct FormHessian {
  Int P, Q, R;
};
FormHessian hessian_of(const BinaryCubicForm& f);

// f(e00*x + e01*y, e10*x + e11*y) for m = {e00, e01, e10, e11}; the caller is
// responsible for det m = +-1 when a class-preserving substitution is meant.
BinaryCubicForm apply_gl2(const BinaryCubicForm& f, const std::array<int64_t, 4>& m);

// A reduced representative of the class of f, with positive leading
// coefficient. Requires disc != 0 and a nonzero leading coefficient (a form
// with a = 0 has the rational root [1:0] and belongs to no field).
BinaryCubicForm reduce_form(const BinaryCubicForm& f);

// The lexicographically least (by (a, b, c, d)) reduced form in the class of
// f, a > 0. This is a class invariant: it is found by closing the set of
// reduced forms in the orbit under all substitutions with entries in
// {-1, 0, 1}, which suffices because automorphisms of a reduced Hessian and
// the boundary identifications of both fundamental domains are realized by
// such matrices.
BinaryCubicForm canonical_form(const BinaryCubicForm& f);

enum class CubicGalois { Cyclic, Generic };

// "C3" for cyclic, "S3" for generic.
const char* galois_label(CubicGalois g);

// One cubic field: canonical defining polynomial (monic, x^2-coefficient in
// {0, 1, 2}, obtained from the canonical form of the index form), field
// discriminant, and Galois type of the closure (cyclic iff d is a square).
struct CubicFieldRecord {
  ZPoly poly;
  Int d;
  CubicGalois galois;
};

bool operator==(const CubicFieldRecord& x, const CubicFieldRecord& y);
bool operator!=(const CubicFieldRecord& x, const CubicFieldRecord& y);

// Enumeration order: |d| ascending, negative d before positive at equal |d|,
// then the polynomial order (degree, then coefficients from the constant up).
bool record_less(const CubicFieldRecord& x, const CubicFieldRecord& y);

// The index form of the maximal order of a cubic field: with integral basis
// (1, w1, w2) normalized so that w1*w2 is rational, the multiplication table
//   w1^2 = -ac + b*w1 - a*w2,   w2^2 = -bd + d*w1 - c*w2,   w1*w2 = -ad
// determines (a, b, c, d) uniquely; disc(form) = d_M. The normalization
// subtracts integer constants from the basis elements, so the form depends
// only on the field, up to the translation part of GL2(Z).
BinaryCubicForm index_form(const FieldPtr& k);

// The canonical defining polynomial of the field generated by a root of f
// (monic cubic, irreducible): the canonical form of the index form,
// monicized via y = a*x, translated so the x^2-coefficient lies in {0, 1, 2}.
// Presentations of the same field give identical output.
ZPoly cubic_canonical_poly(const ZPoly& f);

// Record for an already constructed cubic field.
CubicFieldRecord cubic_field_record(const FieldPtr& k);

// Every cubic field with |d_M| <= X, each exactly once, in record_less order.
// Requires X >= 1; bounds above 10^7 are rejected (the sweep runs in 64-bit
// coordinates whose overflow margins are proved only to that point).
std::vector<CubicFieldRecord> enumerate_cubic_fields(const Int& X);

// The slice of the enumeration whose covering sweep is restricted to leading
// coefficients a with a % strata == stratum. Slices are disjoint at the sweep
// level but a field may surface in several slices (reduced orbit members can
// differ in a); merge_cubic_records removes such duplicates.
std::vector<CubicFieldRecord> enumerate_cubic_fields_stratum(const Int& X, int strata,
                                                             int stratum);

// Sorted union of slices, deduplicated by canonical polynomial. Duplicate
// records must agree exactly.
std::vector<CubicFieldRecord> merge_cubic_records(
    const std::vector<std::vector<CubicFieldRecord>>& parts);

// Independent brute-force enumeration over a proven covering box of monic
// cubic polynomials (see the geometry-of-numbers bound in the implementation).
// Same output contract as enumerate_cubic_fields. Requires 1 <= X <= 10^5.
std::vector<CubicFieldRecord> oracle_enumerate(const Int& X);

// (cyclic count, generic count).
std::pair<int64_t, int64_t> galois_split(const std::vector<CubicFieldRecord>& recs);

// Table rows in the census ingestion schema. CSV columns: degree, coeffs
// (ascending, ';'-joined), disc, galois_label, source. JSON lines carry the
// same fields with integers as strings.
std::string record_csv_line(const CubicFieldRecord& r, const std::string& source = "cubicenum");
std::string record_json_line(const CubicFieldRecord& r, const std::string& source = "cubicenum");

}  // namespace artin3

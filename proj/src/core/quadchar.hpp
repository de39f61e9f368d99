#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/nfield.hpp"

namespace artin3 {

// Quadratic characters of a cubic field M, represented by Kummer generators:
// a nontrivial character chi of order 2 corresponds to the square class of
// some alpha in O_M \ (O_M)^2, and the fixed field of ker(chi) is the sextic
// K = M(sqrt(alpha)). The conductor is certified through the discriminant
// tower: q(chi) = N(d_{K/M}) = |d_K| / d_M^2, with d_K the certified field
// discriminant of K, so every reported conductor is backed by a maximal
// order computation rather than by local heuristics.

// One nontrivial quadratic character. coords are the coordinates of the
// stored square-class representative in the integral basis of O_M.
struct QuadCharRecord {
  FieldPtr m;              // parent cubic field
  FieldElement alpha;      // stored square-class representative
  std::vector<Int> coords; // alpha in integral-basis coordinates, size 3
  Int q;                   // conductor q(chi) = |d_K| / d_M^2
  Int d_k;                 // certified discriminant of the sextic K
  ZPoly sextic;            // certified defining polynomial of K
};

// Result of one box sweep. Completeness of the candidate box is a heuristic,
// never a theorem: the sweep certifies every record it returns, and the
// completeness field says "heuristic" to record that classes whose reduced
// representatives lie outside every tested box cannot be excluded. The value
// "claimed" is reserved for a future certified radius bound and is never
// produced here.
struct QuadCharSweep {
  std::vector<QuadCharRecord> records; // sorted by (q, d_k, coords)
  int64_t box = 0;                     // radius actually swept
  std::string completeness;            // "heuristic"
};

// Smallest box radius enumerate_quad_chars accepts for bound x over M.
// A class of conductor q <= x has a representative ideal of norm at most
// 64 x, and integral elements of norm N have a coordinate vector of size
// roughly (N sqrt|d_M|)^(1/3) in a reduced basis, so the radius grows as
// cbrt(4 x sqrt|d_M|) plus a safety margin. BoundTooLarge above radius 512:
// the sweep volume grows with the cube of the radius and larger boxes are
// outside what a single call is meant to do.
int64_t quadchar_min_radius(const FieldPtr& m, const Int& x);

// All nontrivial quadratic characters of M with conductor at most x whose
// canonical Kummer generator lies in the coordinate box [-box, box]^3.
// Candidates are pruned before any sextic is built: the heuristic norm cut
// |N(alpha)| <= 16 x (a class of conductor <= x is generated by an ideal of
// norm at most 8 x, the odd ramified part bounded by x times the dyadic
// divisor of (2); the factor 2 is slack for principal generators) and the
// sound splitting cut: an odd prime with odd valuation in N(alpha) ramifies
// in M(sqrt(alpha)) above a prime of M with odd residue degree f, so the
// product of these p^f must stay at most x. Each surviving square class is
// certified through sextic_from_sqrt and kept iff |d_K| / d_M^2 <= x.
//
// pre: m cubic, x >= 1, quadchar_min_radius(m, x) <= box <= 512.
// post: records pairwise not sqrt_class_equal; every record satisfies
//       d_M^2 * q == |d_k| exactly and alpha is not a square. A record's
//       canonical representative may lie outside the box when its strict
//       reduction chain escapes: the descent is finite, so the reported
//       coordinates stay deterministic and box-independent.
// errors: InvalidArgument on a box below the documented minimum.
QuadCharSweep enumerate_quad_chars(const FieldPtr& m, const Int& x, int64_t box);

// 1 + |enumerate_quad_chars(m, x, quadchar_min_radius(m, x))|: the number
// of quadratic characters of conductor at most x, counting the trivial one.
Int theta_M2(const FieldPtr& m, const Int& x);

// Certified rational enclosure lo <= sqrt(r) <= hi, width 1/(2^prec den(r)).
// pre: r >= 0, 1 <= prec <= 256.
std::pair<Rat, Rat> rat_sqrt_bounds(const Rat& r, int prec);

// Certified rational enclosure lo <= ln(r) <= hi with hi - lo <= 4^-prec
// plus the rounding of the power-of-two reduction. Alternating-free atanh
// series with an exact geometric tail bound; every step is rational, so the
// enclosure is a proof, not an approximation.
// pre: r > 0, 1 <= prec <= 256.
std::pair<Rat, Rat> rat_log_bounds(const Rat& r, int prec);

struct BoundCheck {
  Rat lhs;   // theta_{M,2}(x), exact
  Rat rhs;   // certified bound on the deciding side, see below
  bool pass; // lhs <= C sqrt|d_M| ln^2|d_M| x ln^2 x, decided exactly
};

// Decides theta_{M,2}(x) <= C sqrt|d_M| (ln|d_M|)^2 x (ln x)^2 using the
// certified enclosures above, refining precision until one side is proved.
// On pass, rhs is a certified lower bound of the true right side (so
// lhs <= rhs implies the inequality); on failure it is a certified upper
// bound (so lhs > rhs refutes it). Natural logarithms; any fixed base only
// rescales the calibrated constant.
// pre: |d_M| > 1, x > 1, C >= 0.
BoundCheck appendix_bound_check(const FieldPtr& m, const Int& x, const Rat& C);

// Census-style row for one character:
// 6,<sextic coeffs ; low to high>,<d_K>,<parent label>,quadchar,<alpha coords ;>,<q>
std::string quadchar_csv_line(const QuadCharRecord& r);
// Same data as one JSON object with keys alpha, coeffs, degree, disc,
// galois_label, q, source; integers as strings.
std::string quadchar_json_line(const QuadCharRecord& r);

}  // namespace artin3

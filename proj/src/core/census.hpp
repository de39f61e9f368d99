#pragma once

#include <string>
#include <vector>

#include "core/cubicenum.hpp"
#include "core/ints.hpp"
#include "core/zpoly.hpp"

namespace artin3 {

// One ingested number field row. Files carry degree, coefficients
// (ascending), signed field discriminant, Galois label, and a free-form
// source tag; extra columns are ignored so cubicenum and quadchar output
// round-trips.
struct FieldRow {
  int degree = 0;            // 3 to 6
  ZPoly poly;                // monic, degree matching
  Int disc;                  // signed field discriminant
  std::string galois_label;  // C3, S3, A4, S4, A5
  std::string source;
  bool disc_verified = false;  // true when recomputed at ingest
};

struct FieldTable {
  std::vector<FieldRow> rows;
};

// Parse a table from CSV or JSON lines (sniffed on the first nonblank
// character). Strict mode recomputes every discriminant through field_disc
// and canonicalizes degree-3 polynomials; lenient mode takes disc on faith.
// Checks always applied: schema shape, monic polynomial of the stated
// degree, label consistent with the discriminant square test (degree 3:
// C3 iff square; degree 4: A4 iff square; degree 5: square required),
// uniqueness by (degree, polynomial).
// Errors: SchemaError, DiscMismatch (strict), IoError (ingest only).
FieldTable ingest(const std::string& path, bool strict);
FieldTable ingest_text(const std::string& text, bool strict, const std::string& name);

// Rows with the label whose |disc| is at most the bound. Count is monotone
// in the bound for a fixed table.
Int count_rows_below(const FieldTable& t, const std::string& label, const Int& bound);

// One evaluated counting function at one bound.
struct CensusRecord {
  std::string function;  // theta1, ThetaS4, PsiA5, PhiA4, PhiS4, ab, absd
  Int x;
  Int count;
  std::string method;  // exact, upper-bound, heuristic-complete
  std::string notes;   // semicolon-joined key=value pairs, deterministic
};

// Field-count bound: A4 and S4 quartic rows with |d| <= cap4 * ceil(x^1.5)
// plus A5 quintic rows with |d| <= cap5 * x^2, caps from wild_cap. A label
// with no rows at all contributes zero (an explicit opt-out); a nonempty
// label whose largest |d| is below its threshold raises CoverageGap, since
// the upper bound would silently lose fields.
CensusRecord theta1_bound(const Int& x, const FieldTable& t);

// Pair censuses over cubic fields M and quadratic characters chi of M with
// q(chi) |d_M| <= x. theta_S4_monomial counts generic (S3) parents;
// phi_H counts cyclic parents for H = A4 and generic parents for H = S4,
// sharing the same kernel. Every pair's conductor is recomputed through
// induced_conductor; mismatches are counted in the notes. Cubic coverage
// comes from enumerate_cubic_fields; x above its certified range raises
// CoverageGap. Character sweeps are heuristic-complete, and the method tag
// propagates that. The raw pair count is reported; notes carry raw/3 for
// the conjugate-pair overcount.
CensusRecord theta_S4_monomial(const Int& x);
CensusRecord phi_H(const Int& x, const std::string& H);

// Twisted quintic census: for each A5 row, ramified primes above 5 are
// classified by tame inertia order (2, 3, 5) through prime_splitting; each
// subset choice of character-ramified primes plus the wild exponent menu
// 2^a 3^b 5^c (a in {0,2,3}; b, c in {0,1}) forms a twisted conductor
// q1 via twist_tame_exponents, and quadratic characters chi' with
// q1 q(chi')^3 <= x and support disjoint from q1 are counted. Every pair is
// double-checked through twist_conductor. skip_index_divisors skips rows
// whose splitting is uncertified (noted); otherwise IndexDivisor
// propagates. Inertia orders outside {2,3,5} contradict the label:
// InvalidArgument.
CensusRecord psi_A5(const Int& x, const FieldTable& quintics, bool skip_index_divisors);

// CSV report over an ascending grid: per x the columns ab, absd,
// one_plus_two (always the out-of-scope marker), theta1, theta_s4, psi_a5,
// phi_a4, phi_s4, sd_upper = absd + the five component bounds, and rounded
// six-decimal ratios absd/ab and sd_upper/ab, followed by one method column
// per value column. A component failure becomes a cell marker
// "error:<name>" (method "error"), the dependent cells inherit it, and the
// report is still emitted. Identical inputs give byte-identical output.
std::string density_report(const std::vector<Int>& grid, const FieldTable& t);

// JSON mirror of the same cells: {"rows": [{"x": ..., "cells": {name:
// {"value": ..., "method": ..., "notes": ...}}}]}.
std::string density_report_json(const std::vector<Int>& grid, const FieldTable& t);

}  // namespace artin3

#include "core/cubicenum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"
#include "core/primes.hpp"

namespace artin3 {

namespace {

using i64 = int64_t;

// Largest bound the 64-bit sweeps accept; every intermediate in the covering
// loops below stays under 2^60 for X up to this value.
constexpr i64 kSweepCap = 10'000'000;
constexpr i64 kOracleCap = 100'000;

i64 isqrt_i64(i64 v) {
  if (v <= 0) return 0;
  auto r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

i64 icbrt_i64(i64 v) {
  if (v <= 0) return 0;
  auto r = static_cast<i64>(std::cbrt(static_cast<double>(v)));
  while (r > 0 && r * r * r > v) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= v) ++r;
  return r;
}

i64 fdiv(i64 x, i64 y) {  // floor, y > 0
  return (x >= 0) ? x / y : -((-x + y - 1) / y);
}

i64 cdiv(i64 x, i64 y) {  // ceil, y > 0
  return (x >= 0) ? (x + y - 1) / y : -((-x) / y);
}

Int form_disc(const Int& a, const Int& b, const Int& c, const Int& d) {
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

// Fundamental-domain inequalities for a > 0, disc < 0 (single real root rho,
// complex root z = u + iv, v > 0). Each is a * f(q) for a rational point q
// chosen so that the sign reads off the position of z:
//   u <= 1/2  <=>  f(-(a+b)/a) <= 0  <=>  C1a >= 0
//   u >= -1/2 <=>  f((b... mirror)   <=>  C1b >= 0
//   |z| >= 1  <=>  rho-side sign of the reciprocal comparison  <=>  C2 >= 0
Int neg_c1a(const Int& a, const Int& b, const Int& c, const Int& d) {
  return (a + b) * (a + b) + c * (a + b) - a * d;
}
Int neg_c1b(const Int& a, const Int& b, const Int& c, const Int& d) {
  return (a - b) * (a - b) + c * (a - b) + a * d;
}
Int neg_c2(const Int& a, const Int& b, const Int& c, const Int& d) {
  return d * d - b * d + a * c - a * a;
}

bool reduced_flag(Int a, Int b, Int c, Int d, const Int& disc) {
  if (disc == 0) return false;
  if (a < 0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  if (a == 0) return false;
  if (disc > 0) {
    Int P = b * b - 3 * a * c;
    Int Q = b * c - 9 * a * d;
    Int R = c * c - 3 * b * d;
    return abs(Q) <= P && P <= R;
  }
  return neg_c1a(a, b, c, d) >= 0 && neg_c1b(a, b, c, d) >= 0 && neg_c2(a, b, c, d) >= 0;
}

BinaryCubicForm negate_form(const BinaryCubicForm& f) {
  return make_form(-f.a, -f.b, -f.c, -f.d);
}

BinaryCubicForm sign_normalized(const BinaryCubicForm& f) {
  return (f.a < 0 || (f.a == 0 && f.d < 0)) ? negate_form(f) : f;
}

// f(x + k*y, y).
BinaryCubicForm translate_form(const BinaryCubicForm& f, const Int& k) {
  Int b2 = f.b + 3 * f.a * k;
  Int c2 = f.c + 2 * f.b * k + 3 * f.a * k * k;
  Int d2 = f.d + f.c * k + f.b * k * k + f.a * k * k * k;
  return make_form(f.a, b2, c2, d2);
}

// f(-y, x): swaps the roles of the two Hessian outer coefficients.
BinaryCubicForm invert_form(const BinaryCubicForm& f) {
  return make_form(f.d, -f.c, f.b, -f.a);
}

// Minimal integer k with C1a(f(x + k*y, y)) >= 0. For a > 0 and a single
// real root this predicate is monotone in k (it is the statement
// Re z - k <= 1/2), so an exponential bracket plus bisection is exact.
Int minimal_c1a_shift(const BinaryCubicForm& f) {
  auto ok = [&](const Int& k) {
    Int b2 = f.b + 3 * f.a * k;
    Int c2 = f.c + 2 * f.b * k + 3 * f.a * k * k;
    Int d2 = f.d + f.c * k + f.b * k * k + f.a * k * k * k;
    return neg_c1a(f.a, b2, c2, d2) >= 0;
  };
  Int lo, hi;  // ok(lo) false, ok(hi) true
  if (ok(0)) {
    Int prev = 0, step = 1;
    while (true) {
      Int probe = prev - step;
      if (!ok(probe)) {
        lo = probe;
        hi = prev;
        break;
      }
      prev = probe;
      step *= 2;
      check(step < (Int(1) << 62), Err::Internal, "translation bracket runaway");
    }
  } else {
    lo = 0;
    Int step = 1;
    while (true) {
      Int probe = lo + step;
      if (ok(probe)) {
        hi = probe;
        break;
      }
      lo = probe;
      step *= 2;
      check(step < (Int(1) << 62), Err::Internal, "translation bracket runaway");
    }
  }
  while (hi - lo > 1) {
    Int mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

// All GL2(Z) substitutions with entries in {-1, 0, 1}. Automorphisms of
// reduced forms and the boundary identifications of both fundamental domains
// are realized within this set, so closing the reduced orbit under it finds
// every reduced form of the class.
const std::vector<std::array<int64_t, 4>>& unimodular_moves() {
  static const std::vector<std::array<int64_t, 4>> moves = [] {
    std::vector<std::array<int64_t, 4>> out;
    for (int64_t p = -1; p <= 1; ++p)
      for (int64_t q = -1; q <= 1; ++q)
        for (int64_t r = -1; r <= 1; ++r)
          for (int64_t s = -1; s <= 1; ++s) {
            int64_t det = p * s - q * r;
            if (det == 1 || det == -1) out.push_back({p, q, r, s});
          }
    return out;
  }();
  return moves;
}

std::array<Int, 4> form_key(const BinaryCubicForm& f) { return {f.a, f.b, f.c, f.d}; }

}  // namespace

BinaryCubicForm make_form(const Int& a, const Int& b, const Int& c, const Int& d) {
  BinaryCubicForm f;
  f.a = a;
  f.b = b;
  f.c = c;
  f.d = d;
  f.disc = form_disc(a, b, c, d);
  f.reduced = reduced_flag(a, b, c, d, f.disc);
  return f;
}

FormHessian hessian_of(const BinaryCubicForm& f) {
  return {f.b * f.b - 3 * f.a * f.c, f.b * f.c - 9 * f.a * f.d, f.c * f.c - 3 * f.b * f.d};
}

BinaryCubicForm apply_gl2(const BinaryCubicForm& f, const std::array<int64_t, 4>& m) {
  Int p = m[0], q = m[1], r = m[2], s = m[3];
  Int a2 = f.a * p * p * p + f.b * p * p * r + f.c * p * r * r + f.d * r * r * r;
  Int b2 = 3 * f.a * p * p * q + f.b * (p * p * s + 2 * p * q * r) + f.c * (2 * p * r * s + q * r * r) +
           3 * f.d * r * r * s;
  Int c2 = 3 * f.a * p * q * q + f.b * (2 * p * q * s + q * q * r) + f.c * (p * s * s + 2 * q * r * s) +
           3 * f.d * r * s * s;
  Int d2 = f.a * q * q * q + f.b * q * q * s + f.c * q * s * s + f.d * s * s * s;
  return make_form(a2, b2, c2, d2);
}

BinaryCubicForm reduce_form(const BinaryCubicForm& f) {
  check(f.disc != 0, Err::InvalidArgument, "form has zero discriminant");
  check(f.a != 0, Err::InvalidArgument, "form has the rational root [1:0]");
  BinaryCubicForm g = sign_normalized(f);
  if (g.disc > 0) {
    // Gauss reduction of the positive definite Hessian: translation recenters
    // Q at fixed P, inversion swaps P and R and strictly decreases P, so the
    // loop terminates.
    for (int iter = 0; iter < 10000; ++iter) {
      if (g.reduced) return g;
      FormHessian h = hessian_of(g);
      check(h.P > 0, Err::Internal, "totally real form with degenerate Hessian");
      if (abs(h.Q) > h.P) {
        Int k = floor_div(h.P - h.Q, 2 * h.P);  // round(-Q / 2P)
        check(k != 0, Err::Internal, "null translation in Hessian reduction");
        g = translate_form(g, k);
        continue;
      }
      g = sign_normalized(invert_form(g));
      check(g.a != 0, Err::InvalidArgument, "form has a rational root");
    }
    fail(Err::Internal, "Hessian reduction did not terminate");
  }
  // disc < 0: drive the complex root into the fundamental domain. Inversion
  // strictly increases its imaginary part when |z| < 1; the translation made
  // afterwards restores |Re z| <= 1/2 without changing it.
  for (int iter = 0; iter < 10000; ++iter) {
    if (g.reduced) return g;
    if (neg_c2(g.a, g.b, g.c, g.d) < 0) {
      g = sign_normalized(invert_form(g));
      check(g.a != 0, Err::InvalidArgument, "form has a rational root");
      continue;
    }
    if (neg_c1a(g.a, g.b, g.c, g.d) < 0 || neg_c1b(g.a, g.b, g.c, g.d) < 0) {
      g = translate_form(g, minimal_c1a_shift(g));
      check(neg_c1b(g.a, g.b, g.c, g.d) >= 0, Err::Internal,
            "minimal admissible translation overshot");
    }
  }
  fail(Err::Internal, "fundamental domain reduction did not terminate");
}

BinaryCubicForm canonical_form(const BinaryCubicForm& f) {
  BinaryCubicForm start = reduce_form(f);
  std::set<std::array<Int, 4>> seen;
  std::queue<BinaryCubicForm> work;
  seen.insert(form_key(start));
  work.push(start);
  BinaryCubicForm best = start;
  int pops = 0;
  while (!work.empty()) {
    check(++pops <= 64, Err::Internal, "reduced orbit closure is unexpectedly large");
    BinaryCubicForm g = work.front();
    work.pop();
    if (form_key(g) < form_key(best)) best = g;
    for (const auto& m : unimodular_moves()) {
      BinaryCubicForm h = apply_gl2(g, m);
      if (h.a == 0) continue;
      h = sign_normalized(h);
      if (!h.reduced) continue;
      if (seen.insert(form_key(h)).second) work.push(h);
    }
  }
  return best;
}

const char* galois_label(CubicGalois g) { return g == CubicGalois::Cyclic ? "C3" : "S3"; }

bool operator==(const CubicFieldRecord& x, const CubicFieldRecord& y) {
  return x.poly == y.poly && x.d == y.d && x.galois == y.galois;
}
bool operator!=(const CubicFieldRecord& x, const CubicFieldRecord& y) { return !(x == y); }

bool record_less(const CubicFieldRecord& x, const CubicFieldRecord& y) {
  Int ax = abs(x.d), ay = abs(y.d);
  if (ax != ay) return ax < ay;
  if (x.d != y.d) return x.d < y.d;
  return x.poly < y.poly;
}

namespace {

// Coordinates of an element in the (lower triangular) integral basis.
std::array<Int, 3> basis_coords(const FieldPtr& k, const FieldElement& x) {
  const auto& B = k->integral_basis();
  check(B[1][2] == 0, Err::Internal, "integral basis is not triangular");
  check(B[1][1] != 0 && B[2][2] != 0, Err::Internal, "integral basis is singular");
  Rat y2 = x.co[2] / B[2][2];
  Rat y1 = (x.co[1] - y2 * B[2][1]) / B[1][1];
  Rat y0 = x.co[0] - y1 * B[1][0] - y2 * B[2][0];
  std::array<Int, 3> out;
  const Rat* ys[3] = {&y0, &y1, &y2};
  for (int i = 0; i < 3; ++i) {
    check(den(*ys[i]) == 1, Err::Internal, "product left the maximal order");
    out[static_cast<size_t>(i)] = num(*ys[i]);
  }
  return out;
}

}  // namespace

BinaryCubicForm index_form(const FieldPtr& k) {
  check(k != nullptr, Err::InvalidArgument, "missing field");
  check(k->degree() == 3, Err::InvalidArgument, "index form requires a cubic field");
  const auto& B = k->integral_basis();
  FieldElement w1 = elem(k, B[1]);
  FieldElement w2 = elem(k, B[2]);
  std::array<Int, 3> n = basis_coords(k, elem_mul(w1, w2));
  // Subtract integer constants so the mixed product becomes rational:
  // (w1 - n2)(w2 - n1) = n0 + n1*n2.
  FieldElement om = elem_sub(w1, elem_rat(k, Rat(n[2])));
  FieldElement ph = elem_sub(w2, elem_rat(k, Rat(n[1])));
  auto coords = [&](const FieldElement& e) {
    std::array<Int, 3> z = basis_coords(k, e);
    return std::array<Int, 3>{z[0] + z[1] * n[2] + z[2] * n[1], z[1], z[2]};
  };
  std::array<Int, 3> o2 = coords(elem_mul(om, om));
  std::array<Int, 3> p2 = coords(elem_mul(ph, ph));
  std::array<Int, 3> op = coords(elem_mul(om, ph));
  Int bF = o2[1], aF = -o2[2];
  Int dF = p2[1], cF = -p2[2];
  // The multiplication table of a normalized basis is forced into the shape
  //   om^2 = -ac + b*om - a*ph,  ph^2 = -bd + d*om - c*ph,  om*ph = -ad;
  // associativity pins every constant term.
  check(op[1] == 0 && op[2] == 0, Err::Internal, "normalized mixed product is not rational");
  check(op[0] == -aF * dF, Err::Internal, "multiplication table violates om*ph = -ad");
  check(o2[0] == -aF * cF, Err::Internal, "multiplication table violates om^2 constant");
  check(p2[0] == -bF * dF, Err::Internal, "multiplication table violates ph^2 constant");
  check(aF != 0, Err::Internal, "index form is degenerate");
  BinaryCubicForm F = make_form(aF, bF, cF, dF);
  check(F.disc == k->disc(), Err::Internal, "index form discriminant mismatch");
  return F;
}

CubicFieldRecord cubic_field_record(const FieldPtr& k) {
  check(k != nullptr, Err::InvalidArgument, "missing field");
  check(k->degree() == 3, Err::InvalidArgument, "cubic field record requires a cubic field");
  BinaryCubicForm F = canonical_form(index_form(k));
  check(F.a > 0, Err::Internal, "canonical form is not sign normalized");
  // Minimal polynomial of a*theta for theta a root of F(x, 1): monic with
  // discriminant a^2 * disc(F).
  ZPoly g;
  g.c = {F.a * F.a * F.d, F.a * F.c, F.b, Int(1)};
  // Translate so the x^2 coefficient lands in {0, 1, 2}; the residue class
  // mod 3 is translation invariant.
  Int r = ((g.c[2] % 3) + 3) % 3;
  g = g.shift((r - g.c[2]) / 3);
  check(g.is_monic() && g.degree() == 3 && g.c[2] >= 0 && g.c[2] <= 2, Err::Internal,
        "canonical polynomial normalization failed");
  check(poly_disc(g) == F.a * F.a * F.disc, Err::Internal,
        "canonical polynomial discriminant mismatch");
  CubicFieldRecord rec;
  rec.poly = g;
  rec.d = k->disc();
  rec.galois = is_square(rec.d) ? CubicGalois::Cyclic : CubicGalois::Generic;
  return rec;
}

ZPoly cubic_canonical_poly(const ZPoly& f) {
  check(f.degree() == 3, Err::InvalidArgument, "canonical polynomial requires a cubic");
  return cubic_field_record(NumberField::make(f)).poly;
}

namespace {

// Accumulates certified fields, deduplicated by canonical polynomial.
class FieldCollector {
 public:
  explicit FieldCollector(Int bound) : bound_(std::move(bound)) {}

  void add(const CubicFieldRecord& rec) {
    auto [it, fresh] = found_.emplace(rec.poly, rec);
    if (!fresh)
      check(it->second == rec, Err::Internal, "conflicting records for one canonical polynomial");
  }

  void add_field(const FieldPtr& k) {
    if (abs(k->disc()) > bound_) return;
    add(cubic_field_record(k));
  }

  std::vector<CubicFieldRecord> finish() {
    std::vector<CubicFieldRecord> out;
    out.reserve(found_.size());
    for (auto& [poly, rec] : found_) out.push_back(rec);
    std::sort(out.begin(), out.end(), record_less);
    return out;
  }

 private:
  Int bound_;
  std::map<ZPoly, CubicFieldRecord> found_;
};

// Maximality sieve at p, p^2 | disc. Sound in one direction only: a true
// return exhibits a ring strictly above the one attached to the form (a
// double root r of f mod p with p^2 | f(r), or the same condition at the
// root at infinity, yields the enlargement by om/p after translating r to
// 0), so maximal rings are never discarded. False keeps are eliminated by
// the field certification step.
bool nonmaximal_at(i64 a, i64 b, i64 c, i64 d, i64 p) {
  const i64 p2 = p * p;
  auto md = [](i64 v, i64 m) {
    v %= m;
    return v < 0 ? v + m : v;
  };
  const i64 am = md(a, p), bm = md(b, p), cm = md(c, p), dm = md(d, p);
  for (i64 r = 0; r < p; ++r) {
    i64 v = am;
    v = (v * r + bm) % p;
    v = (v * r + cm) % p;
    v = (v * r + dm) % p;
    if (v != 0) continue;
    i64 w = (3 * am) % p;
    w = (w * r + (2 * bm) % p) % p;
    w = (w * r + cm) % p;
    if (w != 0) continue;
    i64 u = md(a, p2);
    u = (u * r + md(b, p2)) % p2;
    u = (u * r + md(c, p2)) % p2;
    u = (u * r + md(d, p2)) % p2;
    if (u == 0) return true;
  }
  if (am == 0 && bm == 0 && md(a, p2) == 0) return true;
  return false;
}

// Factor n (0 < n <= 10^14) over the prime list; the list covers sqrt(n).
void factor_i64(i64 n, const std::vector<uint32_t>& plist, std::map<Int, int>& out) {
  for (uint32_t p : plist) {
    i64 pl = p;
    if (pl * pl > n) break;
    if (n % pl) continue;
    int e = 0;
    while (n % pl == 0) {
      n /= pl;
      ++e;
    }
    out[Int(pl)] += e;
  }
  if (n > 1) out[Int(n)] += 1;
}

// Certify one sweep candidate: discard imprimitive and sieve-visible
// non-maximal forms cheaply, then let the field construction decide. The
// form is the index form of its field exactly when d_M equals its
// discriminant.
void offer_candidate(i64 a, i64 b, i64 c, i64 d, i64 D, const std::vector<uint32_t>& plist,
                     FieldCollector& sink) {
  i64 g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::gcd(std::abs(c), std::abs(d)));
  if (g > 1) return;  // content m scales disc by m^4 and the ring has index m^2
  std::map<Int, int> disc_factors;
  factor_i64(D < 0 ? -D : D, plist, disc_factors);
  for (const auto& [p, e] : disc_factors) {
    if (e < 2) continue;
    if (nonmaximal_at(a, b, c, d, to_i64(p))) return;
  }
  // disc of the monicized polynomial is a^2 * D.
  std::map<Int, int> hint = disc_factors;
  std::map<Int, int> afac;
  factor_i64(std::abs(a), plist, afac);
  for (const auto& [p, e] : afac) hint[p] += 2 * e;
  ZPoly gp;
  gp.c = {Int(a) * a * d, Int(a) * c, Int(b), Int(1)};
  FieldPtr k;
  try {
    k = NumberField::make(gp, hint);
  } catch (const Error& err) {
    if (err.code() == Err::IrreducibilityFailure) return;
    throw;
  }
  if (k->disc() != D) return;
  sink.add(cubic_field_record(k));
}

// Totally real sweep. Every class with 0 < disc <= X contains a form with
// a > 0 whose Hessian (P, Q, R) satisfies 0 <= Q <= P <= R: Hessian
// reduction gives |Q| <= P <= R, negation fixes the sign of a, and the
// mirror (a, -b, c, -d) of a reduced form is reduced with Q negated and
// defines the same field. Bounds, writing D = disc and S = floor(sqrt(X)):
//   4PR - Q^2 = 3D and |Q| <= P <= R give 3P^2 <= 3D, so 1 <= P <= S.
//   (2b^3 + 27a^2*d - 9abc)^2 + 27 a^2 D = 4P^3 (the covariant syzygy), so
//   27 a^2 D <= 4 P^3 <= 4 D sqrt(D) and a^2 <= (4/27) S.
//   P b^2 <= 3aQb + P^2 - 9a^2 P <= 3aP|b| + P^2 (from R >= P expanded via
//   9 a^2 R = 3abQ - P b^2 + P^2), so |b| <= (3a + sqrt(9a^2 + 4S)) / 2.
//   P = b^2 - 3ac in [1, S] pins c; Q = bc - 9ad in [0, P] pins d.
// Every divided bound below is rounded outward; R >= P and the exact D are
// rechecked per candidate.
void sweep_positive(i64 X, int strata, int stratum, const std::vector<uint32_t>& plist,
                    FieldCollector& sink) {
  const i64 S = isqrt_i64(X);
  const i64 amax = isqrt_i64((4 * (S + 1)) / 27 + 2) + 1;
  for (i64 a = 1; a <= amax; ++a) {
    if (a % strata != stratum) continue;
    const i64 bmax = (3 * a + isqrt_i64(9 * a * a + 4 * S) + 1) / 2 + 1;
    for (i64 b = -bmax; b <= bmax; ++b) {
      const i64 clo = cdiv(b * b - S, 3 * a);
      const i64 chi = fdiv(b * b - 1, 3 * a);
      for (i64 c = clo; c <= chi; ++c) {
        const i64 P = b * b - 3 * a * c;
        const i64 dlo = cdiv(b * c - P, 9 * a);
        const i64 dhi = fdiv(b * c, 9 * a);
        for (i64 d = dlo; d <= dhi; ++d) {
          const i64 Q = b * c - 9 * a * d;
          const i64 R = c * c - 3 * b * d;
          if (R < P) continue;
          const i64 D = (4 * P * R - Q * Q) / 3;
          if (D < 1 || D > X) continue;
          offer_candidate(a, b, c, d, D, plist, sink);
        }
      }
    }
  }
}

// Complex sweep. A class with -X <= disc < 0 contains a form with a > 0
// whose complex upper root z = u + iv lies in the fundamental domain
// |u| <= 1/2, |z| >= 1, and u >= 0 after possibly passing to the mirror
// (a, -b, c, -d) (which flips u and preserves the domain and the field).
// Domain membership is exact integer arithmetic: C1a, C1b, C2 as in
// reduced_flag, and u >= 0 <=> ad - bc >= 0 (the sign of f at -b/a).
// Bounds, writing rho for the real root and N = |disc| <= X:
//   N = 4 a^4 v^2 ((rho - u)^2 + v^2)^2. On the domain v^2 >= 3/4, so
//   27 a^4 / 16 <= N  and  v^2 <= (X / (4a^4))^{1/3}  and
//   (rho - u)^2 <= sqrt(N / (4 a^4 v^2)) <= sqrt(X / (3 a^4)).
//   b = -a(rho + 2u) = -a((rho - u) + 3u):  |b| <= (X/3)^{1/4} + 3a/2.
//   c = a(2 rho u + u^2 + v^2):  |c| <= a v^2 + a|rho - u| + a.
//   For fixed (a, b, c) the discriminant -27a^2 d^2 + (18abc - 4b^3) d +
//   (b^2 c^2 - 4ac^3) is a downward parabola in d; the d ranges for
//   -X <= disc <= -1 are two integer segments around its roots.
// All thresholds are rounded outward; the domain cuts and the exact
// discriminant are rechecked per candidate.
void sweep_negative(i64 X, int strata, int stratum, const std::vector<uint32_t>& plist,
                    FieldCollector& sink) {
  const i64 t2 = isqrt_i64(isqrt_i64(X / 3) + 1) + 1;  // > (X/3)^{1/4}
  i64 amax = 1;
  while (27 * (amax + 1) * (amax + 1) * (amax + 1) * (amax + 1) <= 16 * X) ++amax;
  for (i64 a = 1; a <= amax; ++a) {
    if (a % strata != stratum) continue;
    const i64 v2m = icbrt_i64(X / (4 * a * a * a * a)) + 1;  // >= v^2 on the domain
    const i64 bmax = t2 + (3 * a) / 2 + 2;
    const i64 cmax = a * v2m + t2 + 2 * a + 3;
    const i64 A2 = 27 * a * a;
    for (i64 b = -bmax; b <= bmax; ++b) {
      for (i64 c = -cmax; c <= cmax; ++c) {
        const i64 B1 = 18 * a * b * c - 4 * b * b * b;
        const i64 C0 = b * b * c * c - 4 * a * c * c * c;
        const i64 rad1 = B1 * B1 + 4 * A2 * (C0 + X);
        if (rad1 < 0) continue;  // disc < -X for every d
        const i64 r1 = isqrt_i64(rad1);
        i64 dlo = fdiv(B1 - r1, 2 * A2) - 1;
        i64 dhi = fdiv(B1 + r1, 2 * A2) + 1;
        // u >= 0, u <= 1/2, u >= -1/2 are linear cuts in d.
        dlo = std::max(dlo, cdiv(b * c, a));
        dhi = std::min(dhi, fdiv((a + b) * (a + b) + c * (a + b), a));
        dlo = std::max(dlo, cdiv(-((a - b) * (a - b) + c * (a - b)), a));
        if (dlo > dhi) continue;
        // Exclude the middle where disc >= 0.
        i64 seg1hi = dhi, seg2lo = dhi + 1;
        const i64 rad2 = B1 * B1 + 4 * A2 * C0;
        if (rad2 >= 0) {
          const i64 r2 = isqrt_i64(rad2);
          seg1hi = std::min(dhi, fdiv(B1 - r2, 2 * A2) + 1);
          seg2lo = std::max(dlo, fdiv(B1 + r2, 2 * A2) - 1);
          seg2lo = std::max(seg2lo, seg1hi + 1);
        }
        auto run = [&](i64 from, i64 to) {
          for (i64 d = from; d <= to; ++d) {
            const i64 D = -A2 * d * d + B1 * d + C0;
            if (D > -1 || D < -X) continue;
            if (a * d - b * c < 0) continue;
            const i64 ab = a + b, amb = a - b;
            if (ab * ab + c * ab - a * d < 0) continue;
            if (amb * amb + c * amb + a * d < 0) continue;
            if (d * d - b * d + a * c - a * a < 0) continue;
            offer_candidate(a, b, c, d, D, plist, sink);
          }
        };
        run(dlo, seg1hi);
        run(seg2lo, dhi);
      }
    }
  }
}

std::vector<CubicFieldRecord> enumerate_impl(const Int& X, int strata, int stratum) {
  check(X >= 1, Err::InvalidArgument, "enumeration bound must be at least 1");
  check(X <= kSweepCap, Err::BoundTooLarge, "enumeration bound exceeds the 64-bit sweep range");
  check(strata >= 1 && stratum >= 0 && stratum < strata, Err::InvalidArgument,
        "invalid stratum specification");
  const i64 x = to_i64(X);
  const auto plist = primes_up_to(static_cast<uint32_t>(isqrt_i64(x) + 2));
  FieldCollector sink(X);
  sweep_positive(x, strata, stratum, plist, sink);
  sweep_negative(x, strata, stratum, plist, sink);
  return sink.finish();
}

}  // namespace

std::vector<CubicFieldRecord> enumerate_cubic_fields(const Int& X) {
  return enumerate_impl(X, 1, 0);
}

std::vector<CubicFieldRecord> enumerate_cubic_fields_stratum(const Int& X, int strata,
                                                             int stratum) {
  return enumerate_impl(X, strata, stratum);
}

std::vector<CubicFieldRecord> merge_cubic_records(
    const std::vector<std::vector<CubicFieldRecord>>& parts) {
  std::map<ZPoly, CubicFieldRecord> found;
  for (const auto& part : parts)
    for (const auto& rec : part) {
      auto [it, fresh] = found.emplace(rec.poly, rec);
      if (!fresh)
        check(it->second == rec, Err::Internal,
              "conflicting records for one canonical polynomial");
    }
  std::vector<CubicFieldRecord> out;
  out.reserve(found.size());
  for (auto& [poly, rec] : found) out.push_back(rec);
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

// Brute-force covering box. The rank-2 lattice O_M / Z carries the positive
// quadratic form q(theta) = sum_i |theta_i|^2 - Tr(theta)^2 / 3 (squared
// distance of the archimedean vector from its trace average); its Gram
// determinant is |d_M| / 3, so Hermite's bound for rank 2 (constant
// 2/sqrt(3)) yields theta in O_M, not in Z, with
//   q(theta) <= (2/sqrt 3) sqrt(|d_M| / 3) = (2/3) sqrt(|d_M|).
// q is invariant under integer translation and negation, so theta can be
// normalized to t = Tr(theta) in {0, 1}; it generates M because the degree
// is prime. Writing its characteristic polynomial x^3 - t x^2 + e2 x - e3:
//   T2 := sum |theta_i|^2 = q + t^2/3 <= t^2/3 + (2/3) sqrt(X),
//   |e2| <= (t^2 + T2) / 2   (e2 = (t^2 - T2 +- cross terms)/2, triangle
//                             inequality across the three embeddings),
//   |e3| <= (T2 / 3)^{3/2}   (AM-GM on |theta_1 theta_2 theta_3|^2).
// Every cubic field with |d_M| <= X therefore shows up among these monic
// cubics; each candidate is certified and filtered by its exact d_M. All
// box edges are rounded outward in integers.
std::vector<CubicFieldRecord> oracle_enumerate(const Int& X) {
  check(X >= 1, Err::InvalidArgument, "enumeration bound must be at least 1");
  check(X <= kOracleCap, Err::BoundTooLarge, "oracle bound exceeds the brute-force range");
  const i64 x = to_i64(X);
  const i64 S = isqrt_i64(x) + 1;  // >= sqrt(X)
  FieldCollector sink(X);
  for (i64 t = 0; t <= 1; ++t) {
    const i64 T2 = (t * t + 2 * S + 2) / 3 + 1;  // >= t^2/3 + (2/3) sqrt(X)
    const i64 E2 = (t * t + T2) / 2 + 1;
    const i64 q3 = T2 / 3 + 1;
    const i64 E3 = isqrt_i64(q3 * q3 * q3) + 1;
    for (i64 e2 = -E2; e2 <= E2; ++e2) {
      for (i64 e3 = -E3; e3 <= E3; ++e3) {
        if (e3 == 0) continue;  // rational root 0
        ZPoly g;
        g.c = {Int(-e3), Int(e2), Int(-t), Int(1)};
        FieldPtr k;
        try {
          k = NumberField::make(g);
        } catch (const Error& err) {
          if (err.code() == Err::IrreducibilityFailure) continue;
          throw;
        }
        sink.add_field(k);
      }
    }
  }
  return sink.finish();
}

std::pair<int64_t, int64_t> galois_split(const std::vector<CubicFieldRecord>& recs) {
  int64_t cyc = 0, gen = 0;
  for (const auto& r : recs) (r.galois == CubicGalois::Cyclic ? cyc : gen) += 1;
  return {cyc, gen};
}

std::string record_csv_line(const CubicFieldRecord& r, const std::string& source) {
  std::string coeffs;
  for (size_t i = 0; i < r.poly.c.size(); ++i) {
    if (i) coeffs += ';';
    coeffs += to_string(r.poly.c[i]);
  }
  return "3," + coeffs + "," + to_string(r.d) + "," + galois_label(r.galois) + "," + source;
}

std::string record_json_line(const CubicFieldRecord& r, const std::string& source) {
  nlohmann::json j;
  j["degree"] = 3;
  std::vector<std::string> coeffs;
  for (const Int& v : r.poly.c) coeffs.push_back(v.str());
  j["coeffs"] = coeffs;
  j["disc"] = to_string(r.d);
  j["galois_label"] = galois_label(r.galois);
  j["source"] = source;
  return j.dump();
}

}  // namespace artin3

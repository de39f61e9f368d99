#include "core/quadchar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "json.hpp"

#include "core/primes.hpp"

namespace artin3 {

namespace {

Int icbrt_int(const Int& n) {
  if (n <= 0) return 0;
  Int r(static_cast<int64_t>(std::cbrt(n.convert_to<double>())));
  if (r < 0) r = 0;
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  while (r * r * r > n) --r;
  return r;
}

// Norm of x0*b0 + x1*b1 + x2*b2 as an integer cubic form in the integral
// basis coordinates, interpolated from ten exact norm evaluations. Monomial
// order: x^3, y^3, z^3, x^2 y, x^2 z, x y^2, y^2 z, x z^2, y z^2, x y z.
struct NormForm {
  std::array<Int, 10> c;
  bool fits64 = false;
  std::array<int64_t, 10> c64{};

  Int eval(const Int& x, const Int& y, const Int& z) const {
    return c[0] * x * x * x + c[1] * y * y * y + c[2] * z * z * z + c[3] * x * x * y +
           c[4] * x * x * z + c[5] * x * y * y + c[6] * y * y * z + c[7] * x * z * z +
           c[8] * y * z * z + c[9] * x * y * z;
  }
  int64_t eval64(int64_t x, int64_t y, int64_t z) const {
    return c64[0] * x * x * x + c64[1] * y * y * y + c64[2] * z * z * z + c64[3] * x * x * y +
           c64[4] * x * x * z + c64[5] * x * y * y + c64[6] * y * y * z + c64[7] * x * z * z +
           c64[8] * y * z * z + c64[9] * x * y * z;
  }
};

// Shared per-sweep state: the integral basis as a power-basis matrix, its
// inverse data for coordinate recovery, the generator powers used by the
// square-class reduction, and the interpolated norm form.
struct SweepCtx {
  FieldPtr m;
  std::array<std::array<Rat, 3>, 3> B;     // row i = basis element i
  std::array<std::array<Rat, 3>, 3> Binv;  // inverse of A[j][i] = B[i][j]
  FieldElement theta2, theta_m2;           // theta^2 and, when a unit, theta^-2
  bool theta_unit = false;
  NormForm F;
  Int dm2;

  FieldElement from_coords(const std::vector<Int>& v) const {
    std::vector<Rat> co(3, Rat(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) co[j] += Rat(v[i]) * B[i][j];
    return elem(m, std::move(co));
  }

  // Integral-basis coordinates of e; false when e is not in O_M.
  bool to_coords(const FieldElement& e, std::vector<Int>& out) const {
    out.assign(3, Int(0));
    for (int i = 0; i < 3; ++i) {
      Rat vi = Binv[i][0] * e.co[0] + Binv[i][1] * e.co[1] + Binv[i][2] * e.co[2];
      if (den(vi) != 1) return false;
      out[i] = num(vi);
    }
    return true;
  }
};

SweepCtx make_ctx(const FieldPtr& m) {
  check(m != nullptr && m->degree() == 3, Err::InvalidArgument, "parent field must be cubic");
  SweepCtx ctx;
  ctx.m = m;
  const auto& basis = m->integral_basis();
  check(basis.size() == 3, Err::Internal, "cubic integral basis has three rows");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ctx.B[i][j] = basis[i][j];
  {
    // Invert A[j][i] = B[i][j] once; to_coords is the sweep's inner loop.
    std::array<std::array<Rat, 3>, 3> A;
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) A[j][i] = ctx.B[i][j];
    Rat det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
              A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
              A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    check(det != 0, Err::Internal, "integral basis matrix is singular");
    auto cof = [&](int r, int c) {
      int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      if (r1 > r2) std::swap(r1, r2);
      if (c1 > c2) std::swap(c1, c2);
      Rat minor = A[r1][c1] * A[r2][c2] - A[r1][c2] * A[r2][c1];
      return ((r + c) % 2 == 0 ? minor : -minor) / det;
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ctx.Binv[i][j] = cof(j, i);
  }
  FieldElement theta = elem_theta(m);
  ctx.theta2 = elem_mul(theta, theta);
  Rat nt = elem_norm(theta);
  check(den(nt) == 1, Err::Internal, "norm of the generator is not an integer");
  ctx.theta_unit = abs(num(nt)) == 1;
  if (ctx.theta_unit) ctx.theta_m2 = elem_pow(theta, -2);
  ctx.dm2 = m->disc() * m->disc();

  // Interpolate the norm form from exact evaluations, then verify it at two
  // points that are not interpolation nodes.
  auto nrm = [&](int64_t x, int64_t y, int64_t z) {
    Rat n = elem_norm(ctx.from_coords({Int(x), Int(y), Int(z)}));
    check(den(n) == 1, Err::Internal, "norm of an integral element is not an integer");
    return num(n);
  };
  Int A = nrm(1, 0, 0), Bc = nrm(0, 1, 0), C = nrm(0, 0, 1);
  Int pxy = nrm(1, 1, 0), mxy = nrm(1, -1, 0);
  Int pxz = nrm(1, 0, 1), mxz = nrm(1, 0, -1);
  Int pyz = nrm(0, 1, 1), myz = nrm(0, 1, -1);
  Int all = nrm(1, 1, 1);
  NormForm& F = ctx.F;
  F.c[0] = A;
  F.c[1] = Bc;
  F.c[2] = C;
  F.c[5] = (pxy + mxy) / 2 - A;   // x y^2
  F.c[3] = (pxy - mxy) / 2 - Bc;  // x^2 y
  F.c[7] = (pxz + mxz) / 2 - A;   // x z^2
  F.c[4] = (pxz - mxz) / 2 - C;   // x^2 z
  F.c[8] = (pyz + myz) / 2 - Bc;  // y z^2
  F.c[6] = (pyz - myz) / 2 - C;   // y^2 z
  F.c[9] = all - (A + Bc + C + F.c[3] + F.c[4] + F.c[5] + F.c[6] + F.c[7] + F.c[8]);
  check(F.eval(2, 3, 5) == nrm(2, 3, 5) && F.eval(-1, 4, -2) == nrm(-1, 4, -2), Err::Internal,
        "norm form interpolation failed verification");
  std::vector<Int> rt;
  check(ctx.to_coords(ctx.from_coords({7, -5, 3}), rt) && rt == std::vector<Int>{7, -5, 3},
        Err::Internal, "coordinate roundtrip failed");
  return ctx;
}

Int inf_norm(const std::vector<Int>& v) {
  Int m = 0;
  for (const Int& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

// Every same-class representative reachable from v by square reductions:
// division by p^2 for primes p with p^2 dividing all coordinates, division
// by theta^2 while it stays integral (a strict norm reduction when theta is
// not a unit), and one layer of theta^{+-2} adjustments when theta is a unit
// (norm-preserving, used for dedupe only). canonical is the lexicographically
// least member inside the box; when a strict reduction escapes the box the
// whole finite closure competes instead, so the choice never depends on the
// box radius.
struct ClassPool {
  std::vector<std::vector<Int>> all;
  std::vector<Int> canonical;
  bool reduction_escaped = false;
};

ClassPool build_pool(const SweepCtx& ctx, const std::vector<Int>& v, int64_t box) {
  std::set<std::vector<Int>> seen{v};
  std::vector<std::vector<Int>> queue{v}, closure;
  auto push = [&](std::vector<Int> w, std::vector<std::vector<Int>>& dst) {
    if (seen.insert(w).second) dst.push_back(std::move(w));
  };
  while (!queue.empty()) {
    check(closure.size() < 64, Err::Internal, "square reduction closure did not stabilize");
    std::vector<Int> u = queue.back();
    queue.pop_back();
    closure.push_back(u);
    // Prime-square division: p^2 | alpha in O_M iff p^2 divides every
    // integral-basis coordinate.
    Int g = gcd(abs(u[0]), gcd(abs(u[1]), abs(u[2])));
    for (Int p = 2; p * p <= g; ++p) {
      if (g % (p * p) != 0) continue;
      if (u[0] % (p * p) == 0 && u[1] % (p * p) == 0 && u[2] % (p * p) == 0)
        push({u[0] / (p * p), u[1] / (p * p), u[2] / (p * p)}, queue);
      while (g % p == 0) g /= p;
    }
    if (!ctx.theta_unit) {
      FieldElement w = elem_div(ctx.from_coords(u), ctx.theta2);
      std::vector<Int> wc;
      if (ctx.to_coords(w, wc)) push(std::move(wc), queue);
    }
  }
  ClassPool pool;
  pool.all = closure;
  for (const auto& u : closure)
    if (inf_norm(u) > box) pool.reduction_escaped = true;
  if (ctx.theta_unit) {
    for (const auto& u : closure) {
      for (const FieldElement* t : {&ctx.theta2, &ctx.theta_m2}) {
        FieldElement w = elem_mul(ctx.from_coords(u), *t);
        std::vector<Int> wc;
        if (ctx.to_coords(w, wc) && seen.insert(wc).second) pool.all.push_back(std::move(wc));
      }
    }
  }
  bool have = false;
  for (const auto& u : pool.all) {
    if (!pool.reduction_escaped && inf_norm(u) > box) continue;
    if (!have || u < pool.canonical) {
      pool.canonical = u;
      have = true;
    }
  }
  check(have, Err::Internal, "class pool lost its in-box seed");
  return pool;
}

bool record_order(const QuadCharRecord& a, const QuadCharRecord& b) {
  if (a.q != b.q) return a.q < b.q;
  if (a.d_k != b.d_k) return a.d_k < b.d_k;
  return a.coords < b.coords;
}

}  // namespace

int64_t quadchar_min_radius(const FieldPtr& m, const Int& x) {
  check(m != nullptr && m->degree() == 3, Err::InvalidArgument, "parent field must be cubic");
  check(x >= 1, Err::InvalidArgument, "conductor bound must be positive");
  Int r = icbrt_int(4 * x * (isqrt_floor(abs(m->disc())) + 1)) + 2;
  if (r < 3) r = 3;
  check(r <= 512, Err::BoundTooLarge, "candidate box radius exceeds the supported sweep size");
  return r.convert_to<int64_t>();
}

QuadCharSweep enumerate_quad_chars(const FieldPtr& m, const Int& x, int64_t box) {
  int64_t rmin = quadchar_min_radius(m, x);
  check(box >= rmin, Err::InvalidArgument, "candidate box is below the documented minimum radius");
  check(box <= 512, Err::BoundTooLarge, "candidate box radius exceeds the supported sweep size");

  SweepCtx ctx = make_ctx(m);
  const Int norm_cap = 16 * x;

  // Trial-division primes for the candidate norms, |N| <= 16 x.
  std::vector<uint32_t> plist =
      primes_up_to(static_cast<uint32_t>(isqrt_floor(norm_cap).convert_to<uint64_t>()) + 1);

  // Least odd residue degree of p in M, cached per sweep. An odd prime with
  // odd valuation in N(alpha) sits under a ramified prime of M whose residue
  // degree is odd, so p^f divides q(chi) for one of these f.
  std::map<int64_t, int> minf_cache;
  auto min_odd_f = [&](int64_t p) -> int {
    auto it = minf_cache.find(p);
    if (it != minf_cache.end()) return it->second;
    int best = 4;
    try {
      for (auto [f, e] : prime_splitting(m, Int(p)))
        if (f & 1) best = std::min(best, f);
    } catch (const Error&) {
      best = 4;  // shape not certified: fall back to the weakest bound
    }
    int v = best == 4 ? 1 : best;
    minf_cache[p] = v;
    return v;
  };

  // Integer norm evaluation overflow guard for the fast path.
  {
    Int bound = 0;
    for (const Int& c : ctx.F.c) bound += abs(c);
    bound *= Int(box) * Int(box) * Int(box);
    if (bound < Int("4000000000000000000")) {
      ctx.F.fits64 = true;
      for (int i = 0; i < 10; ++i) ctx.F.c64[i] = ctx.F.c[i].convert_to<int64_t>();
    }
  }

  FieldElement one = elem_rat(m, 1);
  std::set<std::vector<Int>> seen;  // every pool member of every processed class
  std::map<std::pair<Int, Int>, std::vector<QuadCharRecord>> buckets;

  std::vector<Int> v(3);
  for (int64_t c2 = -box; c2 <= box; ++c2) {
    for (int64_t c1 = -box; c1 <= box; ++c1) {
      for (int64_t c0 = -box; c0 <= box; ++c0) {
        if (c0 == 0 && c1 == 0 && c2 == 0) continue;
        Int n = ctx.F.fits64 ? Int(ctx.F.eval64(c0, c1, c2))
                             : ctx.F.eval(Int(c0), Int(c1), Int(c2));
        check(n != 0, Err::Internal, "nonzero element with zero norm");
        Int an = abs(n);
        if (an > norm_cap) continue;

        // Sound squarefree cut: an odd prime p with odd valuation in N(alpha)
        // has a prime of M over it with odd valuation in alpha, which
        // ramifies in M(sqrt(alpha)), so p^f | q(chi) with f odd.
        int64_t rem = an.convert_to<int64_t>();
        Int s_min = 1;
        for (uint32_t p : plist) {
          if (s_min > x) break;
          if (int64_t(p) * int64_t(p) > rem) break;
          if (rem % p) continue;
          int e = 0;
          do {
            rem /= p;
            ++e;
          } while (rem % p == 0);
          if (e & 1) {
            // Odd valuation at an odd p forces a ramified prime of odd
            // residue degree f above p, contributing p^f to q. At p = 2 the
            // ramification is wild, so the contribution is at least 2^(2f).
            if (p == 2)
              s_min *= pow_int(Int(4), min_odd_f(2));
            else
              s_min *= pow_int(Int(p), min_odd_f(p));
          }
        }
        if (s_min <= x && rem > 2) {
          // prime cofactor with valuation 1
          if (rem > x)
            s_min *= rem;
          else
            s_min *= pow_int(Int(rem), min_odd_f(rem));
        }
        if (s_min > x) continue;

        v[0] = c0;
        v[1] = c1;
        v[2] = c2;
        if (seen.count(v)) continue;

        // Pool members are same-class representatives, and distinct classes
        // are disjoint as element sets, so meeting the seen set means this
        // class was already handled (as a record or as discarded junk).
        ClassPool pool = build_pool(ctx, v, box);
        bool dup = false;
        for (const auto& u : pool.all)
          if (seen.count(u)) {
            dup = true;
            break;
          }
        for (auto& u : pool.all) seen.insert(std::move(u));
        if (dup) continue;

        FieldElement alpha = ctx.from_coords(pool.canonical);
        if (sqrt_class_equal(alpha, one)) continue;  // trivial class

        // Cheap rejection before full certification: with c the
        // characteristic polynomial of alpha, c(t^2) defines the quadratic
        // extension whenever it is squarefree, so its discriminant is d_K
        // times a square and its squarefree part equals that of q.
        {
          std::vector<Rat> cp = elem_charpoly(alpha);
          std::vector<Int> c6(7, Int(0));
          for (size_t i = 0; i < cp.size(); ++i) {
            check(den(cp[i]) == 1, Err::Internal,
                  "integral element has a non-integral characteristic polynomial");
            c6[2 * i] = num(cp[i]);
          }
          Int pd = poly_disc(ZPoly::from_coeffs(c6));
          if (pd != 0) {
            Int sqf = 1;
            for (const auto& [fp, fe] : factorize(abs(pd)))
              if (fe & 1) sqf *= fp;
            if (sqf > x) continue;
          }
        }

        FieldPtr k = sextic_from_sqrt(m, alpha);
        Int d_k = k->disc();
        check(d_k % ctx.dm2 == 0, Err::Internal, "sextic discriminant is not a tower multiple");
        Int q = abs(d_k) / ctx.dm2;
        if (q > x) continue;

        QuadCharRecord rec;
        rec.m = m;
        rec.alpha = alpha;
        rec.coords = pool.canonical;
        rec.q = q;
        rec.d_k = d_k;
        rec.sextic = k->poly();
        buckets[{q, d_k}].push_back(std::move(rec));
      }
    }
  }

  QuadCharSweep out;
  out.box = box;
  out.completeness = "heuristic";
  for (auto& [key, recs] : buckets) {
    std::sort(recs.begin(), recs.end(),
              [](const QuadCharRecord& a, const QuadCharRecord& b) { return a.coords < b.coords; });
    std::vector<QuadCharRecord> kept;
    for (auto& r : recs) {
      bool same = false;
      for (const auto& kr : kept)
        if (sqrt_class_equal(r.alpha, kr.alpha)) {
          same = true;
          break;
        }
      if (!same) kept.push_back(std::move(r));
    }
    for (auto& r : kept) out.records.push_back(std::move(r));
  }
  std::sort(out.records.begin(), out.records.end(), record_order);
  return out;
}

Int theta_M2(const FieldPtr& m, const Int& x) {
  QuadCharSweep s = enumerate_quad_chars(m, x, quadchar_min_radius(m, x));
  return Int(s.records.size()) + 1;
}

std::pair<Rat, Rat> rat_sqrt_bounds(const Rat& r, int prec) {
  check(r >= 0, Err::InvalidArgument, "square root of a negative value");
  check(prec >= 1 && prec <= 256, Err::InvalidArgument, "precision out of range");
  // sqrt(p/q) = sqrt(p q) / q; floor integer square root at scale 2^prec.
  Int scale = pow_int(2, static_cast<uint64_t>(prec));
  Int s = isqrt_floor(num(r) * den(r) * scale * scale);
  Rat lo(s, den(r) * scale), hi(s + 1, den(r) * scale);
  return {lo, hi};
}

namespace {

// atanh(t) = sum t^(2j+1) / (2j+1) for 0 <= t < 1; partial sums increase, and
// the tail after n terms is at most t^(2n+1) / ((2n+1)(1 - t^2)).
std::pair<Rat, Rat> atanh_bounds(const Rat& t, int terms) {
  Rat t2 = t * t, pw = t, s = 0;
  for (int j = 0; j < terms; ++j) {
    s += pw / Rat(2 * j + 1);
    pw *= t2;
  }
  Rat tail = pw / (Rat(2 * terms + 1) * (Rat(1) - t2));
  return {s, s + tail};
}

}  // namespace

std::pair<Rat, Rat> rat_log_bounds(const Rat& r, int prec) {
  check(r > 0, Err::InvalidArgument, "logarithm of a nonpositive value");
  check(prec >= 1 && prec <= 256, Err::InvalidArgument, "precision out of range");
  if (r == 1) return {Rat(0), Rat(0)};
  if (r < 1) {
    auto [lo, hi] = rat_log_bounds(Rat(1) / r, prec);
    return {-hi, -lo};
  }
  // r = 2^k s with s in [1, 2); ln r = k ln 2 + 2 atanh((s-1)/(s+1)).
  Rat s = r;
  long k = 0;
  while (s >= 2) {
    s /= 2;
    ++k;
  }
  int terms = (2 * prec) / 3 + 2;  // (1/3)^(2n+1) <= 4^-prec at this count
  auto [slo, shi] = atanh_bounds((s - 1) / (s + 1), terms);
  auto [l2lo, l2hi] = atanh_bounds(Rat(1, 3), terms);  // ln 2 = 2 atanh(1/3)
  return {Rat(2 * k) * l2lo + 2 * slo, Rat(2 * k) * l2hi + 2 * shi};
}

BoundCheck appendix_bound_check(const FieldPtr& m, const Int& x, const Rat& C) {
  check(m != nullptr && m->degree() == 3, Err::InvalidArgument, "parent field must be cubic");
  Int ad = abs(m->disc());
  check(ad > 1, Err::InvalidArgument, "discriminant must exceed 1");
  check(x > 1, Err::InvalidArgument, "conductor bound must exceed 1");
  check(C >= 0, Err::InvalidArgument, "constant must be nonnegative");

  Rat lhs(theta_M2(m, x));
  Rat rhs_lo = 0, rhs_hi = 0;
  for (int prec : {16, 24, 32, 48, 64}) {
    auto [sq_lo, sq_hi] = rat_sqrt_bounds(Rat(ad), prec);
    auto [ld_lo, ld_hi] = rat_log_bounds(Rat(ad), prec);
    auto [lx_lo, lx_hi] = rat_log_bounds(Rat(x), prec);
    rhs_lo = C * sq_lo * ld_lo * ld_lo * Rat(x) * lx_lo * lx_lo;
    rhs_hi = C * sq_hi * ld_hi * ld_hi * Rat(x) * lx_hi * lx_hi;
    if (lhs <= rhs_lo) return {lhs, rhs_lo, true};
    if (lhs > rhs_hi) return {lhs, rhs_hi, false};
  }
  // Interval narrower than 4^-64 still straddles the integer lhs; report the
  // conservative verdict with the certified lower bound.
  return {lhs, rhs_lo, false};
}

std::string quadchar_csv_line(const QuadCharRecord& r) {
  std::string coeffs, alpha;
  for (size_t i = 0; i < r.sextic.c.size(); ++i) {
    if (i) coeffs += ';';
    coeffs += to_string(r.sextic.c[i]);
  }
  for (size_t i = 0; i < r.coords.size(); ++i) {
    if (i) alpha += ';';
    alpha += to_string(r.coords[i]);
  }
  std::string label = is_square(r.m->disc()) ? "C3" : "S3";
  return "6," + coeffs + "," + to_string(r.d_k) + "," + label + ",quadchar," + alpha + "," +
         to_string(r.q);
}

std::string quadchar_json_line(const QuadCharRecord& r) {
  nlohmann::json j;
  std::vector<std::string> coeffs, alpha;
  for (const Int& c : r.sextic.c) coeffs.push_back(to_string(c));
  for (const Int& c : r.coords) alpha.push_back(to_string(c));
  j["alpha"] = alpha;
  j["coeffs"] = coeffs;
  j["degree"] = 6;
  j["disc"] = to_string(r.d_k);
  j["galois_label"] = is_square(r.m->disc()) ? "C3" : "S3";
  j["q"] = to_string(r.q);
  j["source"] = "quadchar";
  return j.dump();
}

}  // namespace artin3

#include "core/zpoly.hpp"

#include <algorithm>
#include <cstdint>

#include "core/primes.hpp"

namespace artin3 {

namespace {

void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

ZPoly::ZPoly(std::initializer_list<int64_t> lo_to_hi) {
  for (int64_t v : lo_to_hi) c.emplace_back(v);
  trim(c);
}

ZPoly ZPoly::from_coeffs(std::vector<Int> lo_to_hi) {
  ZPoly f;
  f.c = std::move(lo_to_hi);
  trim(f.c);
  return f;
}

ZPoly ZPoly::constant(const Int& v) {
  ZPoly f;
  if (v != 0) f.c.push_back(v);
  return f;
}

ZPoly ZPoly::monomial(const Int& v, int k) {
  check(k >= 0, Err::InvalidArgument, "monomial exponent must be nonnegative");
  ZPoly f;
  if (v != 0) {
    f.c.assign(static_cast<size_t>(k) + 1, Int(0));
    f.c.back() = v;
  }
  return f;
}

const Int& ZPoly::lc() const {
  check(!c.empty(), Err::InvalidArgument, "zero polynomial has no leading coefficient");
  return c.back();
}

Int ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return 0;
  return c[static_cast<size_t>(i)];
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return from_coeffs(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return from_coeffs(std::move(r));
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (Int& v : r.c) v = -v;
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (c.empty() || o.c.empty()) return ZPoly();
  std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return from_coeffs(std::move(r));
}

ZPoly ZPoly::operator*(const Int& k) const {
  std::vector<Int> r = c;
  for (Int& v : r) v *= k;
  return from_coeffs(std::move(r));
}

bool ZPoly::operator<(const ZPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != o.c[i]) return c[i] < o.c[i];
  }
  return false;
}

Int ZPoly::eval(const Int& x) const {
  Int r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Rat ZPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + Rat(c[i]);
  return r;
}

ZPoly ZPoly::derivative() const {
  if (c.size() <= 1) return ZPoly();
  std::vector<Int> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Int(i);
  return from_coeffs(std::move(r));
}

Int ZPoly::content() const {
  Int g = 0;
  for (const Int& v : c) g = gcd(g, v);
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (c.empty()) return ZPoly();
  Int g = content();
  if (c.back() < 0) g = -g;
  ZPoly r;
  r.c.reserve(c.size());
  for (const Int& v : c) r.c.push_back(v / g);
  return r;
}

ZPoly ZPoly::shift(const Int& a) const {
  ZPoly lin{0, 1};
  lin.c[0] = a;
  ZPoly res;
  for (size_t i = c.size(); i-- > 0;) res = res * lin + constant(c[i]);
  return res;
}

std::string ZPoly::str() const {
  if (c.empty()) return "0";
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    const Int& v = c[i];
    if (v == 0) continue;
    Int a = abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += (v < 0) ? " - " : " + ";
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) out += a.str();
    if (i > 0) {
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool try_divide_exact(const ZPoly& f, const ZPoly& g, ZPoly* quotient) {
  check(!g.is_zero(), Err::InvalidArgument, "division by the zero polynomial");
  if (f.is_zero()) {
    if (quotient) *quotient = ZPoly();
    return true;
  }
  if (f.degree() < g.degree()) return false;
  std::vector<Int> r = f.c;
  std::vector<Int> q(static_cast<size_t>(f.degree() - g.degree()) + 1, Int(0));
  const Int& glc = g.lc();
  int rd = f.degree();
  while (rd >= g.degree()) {
    const Int& top = r[static_cast<size_t>(rd)];
    if (top != 0) {
      if (top % glc != 0) return false;
      Int t = top / glc;
      int shiftk = rd - g.degree();
      q[static_cast<size_t>(shiftk)] = t;
      for (int i = 0; i <= g.degree(); ++i)
        r[static_cast<size_t>(shiftk + i)] -= t * g.c[static_cast<size_t>(i)];
    }
    --rd;
  }
  for (const Int& v : r)
    if (v != 0) return false;
  if (quotient) *quotient = ZPoly::from_coeffs(std::move(q));
  return true;
}

namespace {

// Exact division helper for cases guaranteed by construction.
ZPoly must_divide(const ZPoly& f, const ZPoly& g) {
  ZPoly q;
  check(try_divide_exact(f, g, &q), Err::Internal, "expected exact polynomial division");
  return q;
}

// Pseudo-remainder prem(u, v) = lc(v)^(du-dv+1) * u mod v.
ZPoly prem(ZPoly u, const ZPoly& v) {
  int dv = v.degree();
  while (!u.is_zero() && u.degree() >= dv) {
    int k = u.degree() - dv;
    ZPoly t = ZPoly::monomial(u.lc(), k);
    u = u * v.lc() - t * v;
  }
  return u;
}

}  // namespace

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  ZPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    ZPoly r = prem(u, v).primitive_part();
    u = v;
    v = r;
  }
  return u.primitive_part();
}

namespace {

Int det_bareiss(std::vector<std::vector<Int>> m) {
  size_t n = m.size();
  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return n == 0 ? Int(1) : Int(sign) * m[n - 1][n - 1];
}

}  // namespace

Int resultant(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return pow_int(a.c[0], static_cast<uint64_t>(n));
  if (n == 0) return pow_int(b.c[0], static_cast<uint64_t>(m));
  size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = a.c[static_cast<size_t>(m - k)];
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + j)][static_cast<size_t>(j + k)] = b.c[static_cast<size_t>(n - k)];
  return det_bareiss(std::move(s));
}

Int poly_disc(const ZPoly& f) {
  check(f.is_monic(), Err::InvalidArgument, "discriminant requires a monic polynomial");
  check(f.degree() >= 2, Err::InvalidArgument, "discriminant requires degree at least 2");
  Int r = resultant(f, f.derivative());
  int d = f.degree();
  return (d * (d - 1) / 2) % 2 ? -r : r;
}

// ---------------------------------------------------------------------------
// Arithmetic mod a prime p < 2^31. Polynomials are int64 vectors with values
// in [0, p) and no trailing zeros.

namespace {

using FpPoly = std::vector<int64_t>;

int64_t mulmod(int64_t a, int64_t b, int64_t p) {
  return static_cast<int64_t>((static_cast<__int128>(a) * b) % p);
}

int64_t powmod_i(int64_t a, int64_t e, int64_t p) {
  int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

int64_t invmod(int64_t a, int64_t p) { return powmod_i(a, p - 2, p); }

void trim_fp(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg_fp(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly reduce_mod_p(const ZPoly& f, int64_t p) {
  FpPoly r(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    Int v = f.c[i] % p;
    if (v < 0) v += p;
    r[i] = static_cast<int64_t>(v);
  }
  trim_fp(r);
  return r;
}

FpPoly add_fp(const FpPoly& a, const FpPoly& b, int64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim_fp(r);
  return r;
}

FpPoly sub_fp(const FpPoly& a, const FpPoly& b, int64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
  trim_fp(r);
  return r;
}

FpPoly mul_fp(const FpPoly& a, const FpPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int64_t>((static_cast<__int128>(a[i]) * b[j] + r[i + j]) % p);
  trim_fp(r);
  return r;
}

FpPoly scale_fp(const FpPoly& a, int64_t k, int64_t p) {
  FpPoly r = a;
  for (int64_t& v : r) v = mulmod(v, k % p, p);
  trim_fp(r);
  return r;
}

// Division with remainder; den must be nonzero.
void divrem_fp(const FpPoly& num, const FpPoly& den, int64_t p, FpPoly* q, FpPoly* rem) {
  check(!den.empty(), Err::Internal, "mod-p division by zero polynomial");
  FpPoly r = num;
  int dn = deg_fp(den);
  FpPoly quo;
  if (deg_fp(r) >= dn) quo.assign(static_cast<size_t>(deg_fp(r) - dn) + 1, 0);
  int64_t inv = invmod(den.back(), p);
  while (deg_fp(r) >= dn) {
    int k = deg_fp(r) - dn;
    int64_t t = mulmod(r.back(), inv, p);
    quo[static_cast<size_t>(k)] = t;
    for (int i = 0; i <= dn; ++i) {
      size_t idx = static_cast<size_t>(k + i);
      r[idx] = (r[idx] - mulmod(t, den[static_cast<size_t>(i)], p) % p + p) % p;
    }
    trim_fp(r);
  }
  if (q) {
    trim_fp(quo);
    *q = std::move(quo);
  }
  if (rem) *rem = std::move(r);
}

FpPoly mod_fp(const FpPoly& num, const FpPoly& den, int64_t p) {
  FpPoly r;
  divrem_fp(num, den, p, nullptr, &r);
  return r;
}

FpPoly monic_fp(const FpPoly& f, int64_t p) {
  if (f.empty() || f.back() == 1) return f;
  return scale_fp(f, invmod(f.back(), p), p);
}

FpPoly gcd_fp(FpPoly a, FpPoly b, int64_t p) {
  while (!b.empty()) {
    FpPoly r = mod_fp(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic_fp(a, p);
}

FpPoly derivative_fp(const FpPoly& f, int64_t p) {
  if (f.size() <= 1) return {};
  FpPoly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], static_cast<int64_t>(i % static_cast<size_t>(p)), p);
  trim_fp(r);
  return r;
}

FpPoly mulmod_fp(const FpPoly& a, const FpPoly& b, const FpPoly& f, int64_t p) {
  return mod_fp(mul_fp(a, b, p), f, p);
}

FpPoly powmod_fp(FpPoly base, Int e, const FpPoly& f, int64_t p) {
  FpPoly r{1};
  base = mod_fp(base, f, p);
  while (e > 0) {
    if ((e & 1) != 0) r = mulmod_fp(r, base, f, p);
    base = mulmod_fp(base, base, f, p);
    e >>= 1;
  }
  return r;
}

struct SplitMix {
  uint64_t s;
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Equal-degree splitting of a monic squarefree product of irreducibles of
// degree d. Deterministically seeded, so output order is reproducible.
void edf(const FpPoly& f, int d, int64_t p, SplitMix& rng, std::vector<FpPoly>* out) {
  if (deg_fp(f) == d) {
    out->push_back(monic_fp(f, p));
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    FpPoly r(static_cast<size_t>(deg_fp(f)), 0);
    for (int64_t& v : r) v = static_cast<int64_t>(rng.next() % static_cast<uint64_t>(p));
    trim_fp(r);
    if (r.empty() || deg_fp(r) == 0) continue;
    FpPoly g = gcd_fp(r, f, p);
    if (deg_fp(g) <= 0 || deg_fp(g) >= deg_fp(f)) {
      FpPoly t;
      if (p == 2) {
        // Trace map over F_{2^d}.
        t = r;
        FpPoly acc = r;
        for (int j = 1; j < d; ++j) {
          acc = mulmod_fp(acc, acc, f, p);
          t = add_fp(t, acc, p);
        }
      } else {
        Int e = (pow_int(Int(p), static_cast<uint64_t>(d)) - 1) / 2;
        t = powmod_fp(r, e, f, p);
        t = sub_fp(t, FpPoly{1}, p);
      }
      g = gcd_fp(t, f, p);
      if (deg_fp(g) <= 0 || deg_fp(g) >= deg_fp(f)) continue;
    }
    FpPoly q;
    divrem_fp(f, g, p, &q, nullptr);
    edf(g, d, p, rng, out);
    edf(q, d, p, rng, out);
    return;
  }
  fail(Err::Internal, "equal-degree splitting did not converge");
}

// Factors a monic squarefree polynomial mod p into monic irreducibles.
std::vector<FpPoly> factor_squarefree_fp(FpPoly f, int64_t p) {
  std::vector<FpPoly> out;
  SplitMix rng{0x517cc1b727220a95ull ^ static_cast<uint64_t>(p) ^ (static_cast<uint64_t>(deg_fp(f)) << 32)};
  FpPoly x{0, 1};
  FpPoly h = mod_fp(x, f, p);
  int i = 1;
  while (deg_fp(f) >= 2 * i) {
    h = powmod_fp(h, Int(p), f, p);
    FpPoly g = gcd_fp(sub_fp(h, mod_fp(x, f, p), p), f, p);
    if (deg_fp(g) > 0) {
      edf(g, i, p, rng, &out);
      FpPoly q;
      divrem_fp(f, g, p, &q, nullptr);
      f = std::move(q);
      h = mod_fp(h, f, p);
    }
    ++i;
  }
  if (deg_fp(f) > 0) out.push_back(monic_fp(f, p));
  return out;
}

// All distinct monic irreducible factors of a monic f (any multiplicities).
std::vector<FpPoly> distinct_irreducible_fp(const FpPoly& f, int64_t p) {
  check(deg_fp(f) >= 1, Err::Internal, "expected nonconstant polynomial");
  FpPoly fp = derivative_fp(f, p);
  if (fp.empty()) {
    // f(x) = g(x^p); in characteristic p this has the same irreducible
    // factors as g.
    FpPoly g(static_cast<size_t>(deg_fp(f) / static_cast<int>(p)) + 1, 0);
    for (size_t i = 0; i < g.size(); ++i) g[i] = f[i * static_cast<size_t>(p)];
    trim_fp(g);
    return distinct_irreducible_fp(g, p);
  }
  FpPoly d = gcd_fp(f, fp, p);
  FpPoly s;
  divrem_fp(f, d, p, &s, nullptr);
  std::vector<FpPoly> out;
  if (deg_fp(s) > 0) out = factor_squarefree_fp(monic_fp(s, p), p);
  if (deg_fp(d) > 0) {
    for (FpPoly& q : distinct_irreducible_fp(d, p)) {
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    }
  }
  return out;
}

// Full factorization mod p of a nonzero polynomial: monic irreducible
// factors with multiplicities, deterministically ordered.
std::vector<std::pair<FpPoly, int>> factor_mod_p(FpPoly f, int64_t p) {
  check(!f.empty(), Err::Internal, "factoring zero mod p");
  f = monic_fp(f, p);
  if (deg_fp(f) == 0) return {};
  std::vector<FpPoly> irr = distinct_irreducible_fp(f, p);
  std::sort(irr.begin(), irr.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  std::vector<std::pair<FpPoly, int>> out;
  for (const FpPoly& q : irr) {
    int m = 0;
    for (;;) {
      FpPoly quo, rem;
      divrem_fp(f, q, p, &quo, &rem);
      if (!rem.empty()) break;
      f = std::move(quo);
      ++m;
    }
    check(m >= 1, Err::Internal, "claimed factor does not divide");
    out.emplace_back(q, m);
  }
  check(deg_fp(f) == 0, Err::Internal, "mod-p factorization is incomplete");
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting and recombination over Z.

ZPoly lift_fp(const FpPoly& f) {
  std::vector<Int> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = f[i];
  return ZPoly::from_coeffs(std::move(c));
}

// Extended Euclid over F_p: s*a + t*b = 1 for coprime a, b.
void bezout_fp(const FpPoly& a, const FpPoly& b, int64_t p, FpPoly* s, FpPoly* t) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    divrem_fp(r0, r1, p, &q, &r);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly ns = sub_fp(s0, mul_fp(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
    FpPoly nt = sub_fp(t0, mul_fp(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  check(deg_fp(r0) == 0, Err::Internal, "Bezout inputs are not coprime");
  int64_t inv = invmod(r0[0], p);
  *s = scale_fp(s0, inv, p);
  *t = scale_fp(t0, inv, p);
}

// Lifts the coprime monic factorization F = g0*h0 mod p to modulus
// M = p^k >= goal; returns monic G, H with coefficients in [0, M) and
// G*H = F mod M.
void lift_pair(const ZPoly& big_f, const FpPoly& g0, const FpPoly& h0, int64_t p, const Int& goal,
               ZPoly* out_g, ZPoly* out_h, Int* out_m) {
  FpPoly s, t;
  bezout_fp(g0, h0, p, &s, &t);
  ZPoly big_g = lift_fp(g0), big_h = lift_fp(h0);
  Int m = p;
  while (m < goal) {
    ZPoly err = big_f - big_g * big_h;
    FpPoly e(err.c.size());
    for (size_t i = 0; i < err.c.size(); ++i) {
      check(err.c[i] % m == 0, Err::Internal, "Hensel invariant breached");
      Int v = (err.c[i] / m) % p;
      if (v < 0) v += p;
      e[i] = static_cast<int64_t>(v);
    }
    trim_fp(e);
    FpPoly dg = mod_fp(mul_fp(t, e, p), g0, p);
    FpPoly dh = mod_fp(mul_fp(s, e, p), h0, p);
    big_g = big_g + lift_fp(dg) * m;
    big_h = big_h + lift_fp(dh) * m;
    m *= p;
  }
  *out_g = std::move(big_g);
  *out_h = std::move(big_h);
  *out_m = m;
}

// Lifts every local factor of F (monic, = prod locals mod p) to modulus m.
void hensel_tree(const ZPoly& big_f, const std::vector<FpPoly>& locals, size_t lo, size_t hi,
                 int64_t p, const Int& goal, std::vector<ZPoly>* out) {
  if (hi - lo == 1) {
    out->push_back(big_f);
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  FpPoly gp{1}, hp{1};
  for (size_t i = lo; i < mid; ++i) gp = mul_fp(gp, locals[i], p);
  for (size_t i = mid; i < hi; ++i) hp = mul_fp(hp, locals[i], p);
  ZPoly g, h;
  Int m;
  lift_pair(big_f, gp, hp, p, goal, &g, &h, &m);
  hensel_tree(g, locals, lo, mid, p, goal, out);
  hensel_tree(h, locals, mid, hi, p, goal, out);
}

ZPoly symmetric_mod(const ZPoly& f, const Int& m) {
  std::vector<Int> c(f.c.size());
  Int half = m / 2;
  for (size_t i = 0; i < f.c.size(); ++i) {
    Int v = f.c[i] % m;
    if (v < 0) v += m;
    if (v > half) v -= m;
    c[i] = v;
  }
  return ZPoly::from_coeffs(std::move(c));
}

ZPoly mul_mod_int(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r = a * b;
  for (Int& v : r.c) {
    v %= m;
    if (v < 0) v += m;
  }
  trim(r.c);
  return r;
}

// Searches subsets of the lifted local factors whose product (symmetric mod
// m) divides g over Z; every hit is a true irreducible factor.
std::vector<ZPoly> recombine(ZPoly g, std::vector<ZPoly> locals, const Int& m) {
  std::vector<ZPoly> out;
  std::vector<size_t> live(locals.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t take = 1; 2 * take <= live.size() && !progress; ++take) {
      std::vector<size_t> pick(take);
      for (size_t i = 0; i < take; ++i) pick[i] = i;
      for (;;) {
        ZPoly cand = ZPoly::constant(1);
        for (size_t i : pick) cand = mul_mod_int(cand, locals[live[i]], m);
        cand = symmetric_mod(cand, m);
        ZPoly quo;
        if (cand.is_monic() && try_divide_exact(g, cand, &quo)) {
          out.push_back(cand);
          g = quo;
          std::vector<size_t> next;
          for (size_t i = 0, j = 0; i < live.size(); ++i) {
            if (j < pick.size() && pick[j] == i) {
              ++j;
              continue;
            }
            next.push_back(live[i]);
          }
          live = std::move(next);
          progress = true;
          break;
        }
        // Advance the combination odometer.
        size_t pos = take;
        while (pos > 0) {
          --pos;
          if (pick[pos] + (take - pos) < live.size()) {
            ++pick[pos];
            for (size_t i = pos + 1; i < take; ++i) pick[i] = pick[i - 1] + 1;
            break;
          }
          if (pos == 0) {
            pos = take + 1;
            break;
          }
        }
        if (pos == take + 1 || take == 0) break;
      }
    }
  }
  if (g.degree() > 0) out.push_back(g);
  return out;
}

// Factors a primitive squarefree polynomial with positive leading
// coefficient into irreducibles.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& a) {
  if (a.degree() == 1) return {a};
  // Monicize: g(y) = lc^(deg-1) * a(y / lc) is monic with the same splitting.
  const Int& l = a.lc();
  int m = a.degree();
  std::vector<Int> gc(a.c.size());
  for (int j = 0; j < m; ++j)
    gc[static_cast<size_t>(j)] = a.c[static_cast<size_t>(j)] * pow_int(l, static_cast<uint64_t>(m - 1 - j));
  gc[static_cast<size_t>(m)] = 1;
  ZPoly g = ZPoly::from_coeffs(std::move(gc));

  // Prime with squarefree reduction; g squarefree over Z guarantees one.
  int64_t p = 0;
  for (int64_t cand = 3;; cand += 2) {
    check(cand < 100000, Err::Internal, "no prime with squarefree reduction found");
    if (!is_prime(Int(cand))) continue;
    FpPoly gp = reduce_mod_p(g, cand);
    if (deg_fp(gp) != g.degree()) continue;
    if (deg_fp(gcd_fp(gp, derivative_fp(gp, cand), cand)) == 0) {
      p = cand;
      break;
    }
  }

  FpPoly gp = monic_fp(reduce_mod_p(g, p), p);
  std::vector<FpPoly> locals = factor_squarefree_fp(gp, p);
  std::vector<ZPoly> monic_factors;
  if (locals.size() == 1) {
    monic_factors.push_back(g);
  } else {
    // Landau-Mignotte style bound on divisor coefficients.
    Int norm2 = 0;
    for (const Int& v : g.c) norm2 += v * v;
    Int bound = (Int(1) << static_cast<unsigned>(m + 1)) * (isqrt_floor(norm2) + 1);
    Int goal = 2 * bound + 1;
    Int mod = p;
    while (mod < goal) mod *= p;
    std::vector<ZPoly> lifted;
    hensel_tree(symmetric_mod(g, mod), locals, 0, locals.size(), p, goal, &lifted);
    for (ZPoly& f : lifted) {
      for (Int& v : f.c) {
        v %= mod;
        if (v < 0) v += mod;
      }
      trim(f.c);
    }
    monic_factors = recombine(g, std::move(lifted), mod);
  }

  std::vector<ZPoly> out;
  for (const ZPoly& h : monic_factors) {
    if (l == 1) {
      out.push_back(h);
      continue;
    }
    // Map back through y = lc * x and strip the content.
    std::vector<Int> hc(h.c.size());
    Int pw = 1;
    for (size_t j = 0; j < h.c.size(); ++j) {
      hc[j] = h.c[j] * pw;
      pw *= l;
    }
    out.push_back(ZPoly::from_coeffs(std::move(hc)).primitive_part());
  }
  return out;
}

// Yun squarefree decomposition of a primitive polynomial with positive
// leading coefficient: pairwise-coprime squarefree parts with multiplicity.
std::vector<std::pair<ZPoly, int>> yun(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  ZPoly b = must_divide(f, g);
  ZPoly c = must_divide(f.derivative(), g);
  ZPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    ZPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = must_divide(b, a);
    c = must_divide(d, a);
    d = c - b.derivative();
    ++i;
    check(i <= 64, Err::Internal, "squarefree decomposition did not terminate");
  }
  return out;
}

}  // namespace

std::pair<Int, std::vector<ZFactor>> factor_z(const ZPoly& f) {
  check(!f.is_zero(), Err::InvalidArgument, "cannot factor the zero polynomial");
  check(f.degree() <= 12, Err::BoundTooLarge, "factorization supported up to degree 12");
  ZPoly prim = f.primitive_part();
  Int cont = f.content();
  if (f.lc() < 0) cont = -cont;
  if (prim.degree() == 0) return {cont, {}};

  std::vector<ZFactor> factors;
  for (const auto& [part, mult] : yun(prim)) {
    for (const ZPoly& h : factor_squarefree_z(part)) factors.push_back({h, mult});
  }
  std::sort(factors.begin(), factors.end(), [](const ZFactor& a, const ZFactor& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.mult < b.mult;
  });
  return {cont, std::move(factors)};
}

bool irreducible_z(const ZPoly& f) {
  if (f.is_zero() || f.degree() < 1) return false;
  auto [cont, factors] = factor_z(f);
  return abs(cont) == 1 && factors.size() == 1 && factors[0].mult == 1;
}

namespace {

int64_t checked_prime(const Int& p) {
  check(is_prime(p), Err::InvalidArgument, "modulus must be prime");
  check(p < (Int(1) << 31), Err::BoundTooLarge, "modulus exceeds the supported factorization range");
  return to_i64(p);
}

}  // namespace

std::vector<std::pair<int, int>> factor_shape_mod_p(const ZPoly& f, const Int& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [q, mult] : factor_mod_p_lifted(f, p)) out.emplace_back(q.degree(), mult);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<ZPoly, int>> factor_mod_p_lifted(const ZPoly& f, const Int& p) {
  int64_t pp = checked_prime(p);
  check(!f.is_zero(), Err::InvalidArgument, "zero polynomial has no factorization mod p");
  check(f.lc() % p != 0, Err::InvalidArgument, "leading coefficient vanishes mod p");
  if (f.degree() == 0) return {};
  std::vector<std::pair<ZPoly, int>> out;
  for (const auto& [q, mult] : factor_mod_p(reduce_mod_p(f, pp), pp)) out.emplace_back(lift_fp(q), mult);
  return out;
}

ZPoly poly_gcd_mod_p(const ZPoly& a, const ZPoly& b, const Int& p) {
  int64_t pp = checked_prime(p);
  return lift_fp(gcd_fp(reduce_mod_p(a, pp), reduce_mod_p(b, pp), pp));
}

std::pair<ZPoly, ZPoly> poly_divrem_mod_p(const ZPoly& num, const ZPoly& den, const Int& p) {
  int64_t pp = checked_prime(p);
  FpPoly d = reduce_mod_p(den, pp);
  check(!d.empty(), Err::InvalidArgument, "divisor vanishes mod p");
  FpPoly q, r;
  divrem_fp(reduce_mod_p(num, pp), d, pp, &q, &r);
  return {lift_fp(q), lift_fp(r)};
}

}  // namespace artin3

#include "core/exactnum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "core/error.hpp"

namespace artin3 {

namespace {

// ---- small integer polynomial helpers (ascending coefficients) ----

void strip(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division q = a / b for monic-leading b dividing a exactly.
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
  strip(a);
  check(!b.empty() && b.back() == 1, Err::Internal, "divisor not monic");
  std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  while (a.size() >= b.size()) {
    Int lead = a.back();
    size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    strip(a);
  }
  check(a.empty(), Err::Internal, "inexact cyclotomic division");
  return q;
}

// ---- rational polynomial helpers for modular inversion ----

void stripq(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  stripq(a);
  while (a.size() >= b.size()) {
    Rat lead = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    a.pop_back();
    stripq(a);
  }
  return a;
}

std::vector<Rat> poly_quo(std::vector<Rat> a, const std::vector<Rat>& b) {
  stripq(a);
  std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size()) {
    Rat lead = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    a.pop_back();
    stripq(a);
  }
  return q;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Rat> poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  stripq(a);
  return a;
}

// Reduction rows for conductor n: row j is x^j mod Phi_n, j in [0, n).
const std::vector<std::vector<Int>>& reduction_rows(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<Int>>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const std::vector<Int>& phi = cyclotomic_poly(n);
  size_t deg = phi.size() - 1;
  std::vector<std::vector<Int>> rows;
  rows.reserve(n);
  std::vector<Int> cur(deg, Int(0));
  for (int j = 0; j < n; ++j) {
    if (static_cast<size_t>(j) < deg) {
      cur.assign(deg, Int(0));
      cur[j] = 1;
    } else {
      // cur = previous row * x, reduced: shift then subtract lead * Phi.
      Int lead = cur[deg - 1];
      std::vector<Int> next(deg, Int(0));
      for (size_t i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (lead != 0)
        for (size_t i = 0; i < deg; ++i) next[i] -= lead * phi[i];
      cur = next;
    }
    rows.push_back(cur);
  }
  return cache.emplace(n, std::move(rows)).first->second;
}

bool conductor_normalized(int n) { return n >= 1 && n % 4 != 2; }

void add_row(std::vector<Rat>& acc, const Rat& c, const std::vector<Int>& row) {
  for (size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) acc[i] += c * Rat(row[i]);
}

int rat_cmp(const Rat& a, const Rat& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int euler_phi(int n) {
  check(n >= 1, Err::InvalidArgument, "phi of nonpositive integer");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Int>& cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Int>> cache;
  check(n >= 1 && n <= CycNum::kMaxConductor, Err::BoundTooLarge,
        "cyclotomic conductor out of range");
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
  // within the lock (recursion only descends to proper divisors).
  std::function<const std::vector<Int>&(int)> get = [&](int k) -> const std::vector<Int>& {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    std::vector<Int> num(k + 1, Int(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d)
      if (k % d == 0) num = poly_div_exact(std::move(num), get(d));
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(n);
}

CycNum CycNum::from_coeffs(int n, std::vector<Rat> coeffs) {
  check(conductor_normalized(n), Err::InvalidArgument, "conductor is 2 mod 4");
  check(n <= kMaxConductor, Err::BoundTooLarge, "conductor above supported bound");
  check(coeffs.size() == static_cast<size_t>(euler_phi(n)), Err::InvalidArgument,
        "coefficient vector length != phi(n)");
  CycNum x;
  x.n_ = n;
  x.c_ = std::move(coeffs);
  return x;
}

CycNum CycNum::root_of_unity(int k, int64_t power) {
  check(k >= 1, Err::InvalidArgument, "root of unity order must be positive");
  int64_t e = power % k;
  if (e < 0) e += k;
  bool negate = false;
  // Normalize order 2 mod 4: zeta_{2m} = -zeta_m^{(m+1)/2} for odd m.
  if (k % 4 == 2) {
    int m = k / 2;
    negate = (e % 2) != 0;
    e = (e % m) * static_cast<int64_t>((m + 1) / 2) % m;
    k = m;
  }
  if (k == 1) {
    return CycNum(negate ? Rat(-1) : Rat(1));
  }
  check(k <= kMaxConductor, Err::BoundTooLarge, "conductor above supported bound");
  const auto& rows = reduction_rows(k);
  std::vector<Rat> c(euler_phi(k), Rat(0));
  add_row(c, negate ? Rat(-1) : Rat(1), rows[static_cast<size_t>(e)]);
  CycNum x;
  x.n_ = k;
  x.c_ = std::move(c);
  return x;
}

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  if (n_ == 1) return true;
  // A rational has a unique power-basis representation (r, 0, ..., 0).
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return minimal_form().conductor() == 1;
  return true;
}

Rat CycNum::to_rational() const {
  if (n_ == 1) return c_[0];
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) {
      CycNum m = minimal_form();
      check(m.conductor() == 1, Err::NonIntegerResult, "element is irrational");
      return m.c_[0];
    }
  return c_[0];
}

Int CycNum::to_integer() const {
  Rat r = to_rational();
  check(den(r) == 1, Err::NonIntegerResult, "element is not a rational integer");
  return num(r);
}

CycNum CycNum::embedded(int m) const {
  if (m == n_) return *this;
  check(m % n_ == 0 && conductor_normalized(m), Err::Internal, "bad embedding target");
  const auto& rows = reduction_rows(m);
  int step = m / n_;
  std::vector<Rat> c(euler_phi(m), Rat(0));
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) add_row(c, c_[j], rows[(j * step) % m]);
  CycNum x;
  x.n_ = m;
  x.c_ = std::move(c);
  return x;
}

void CycNum::align(CycNum& a, CycNum& b) {
  if (a.n_ == b.n_) return;
  int m = a.n_ / std::gcd(a.n_, b.n_) * b.n_;
  check(m <= kMaxConductor, Err::BoundTooLarge, "compositum conductor above supported bound");
  a = a.embedded(m);
  b = b.embedded(m);
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

CycNum CycNum::operator-() const {
  CycNum a = *this;
  for (auto& c : a.c_) c = -c;
  return a;
}

CycNum CycNum::operator*(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  size_t deg = a.c_.size();
  // Convolution, then exponent folding mod n (x^n = 1 mod Phi_n) and row
  // reduction to the power basis.
  std::vector<Rat> raw(2 * deg - 1, Rat(0));
  for (size_t i = 0; i < deg; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const auto& rows = reduction_rows(a.n_);
  std::vector<Rat> c(deg, Rat(0));
  for (size_t e = 0; e < raw.size(); ++e)
    if (raw[e] != 0) add_row(c, raw[e], rows[e % static_cast<size_t>(a.n_)]);
  CycNum r;
  r.n_ = a.n_;
  r.c_ = std::move(c);
  return r;
}

CycNum CycNum::inverse() const {
  check(!is_zero(), Err::ZeroElement, "inverse of zero");
  if (n_ == 1) {
    return CycNum(Rat(1) / c_[0]);
  }
  // Extended Euclid in Q[x] against Phi_n: u*a + v*Phi = g with g a nonzero
  // constant (Phi irreducible), so a^{-1} = u/g.
  const auto& phi_int = cyclotomic_poly(n_);
  std::vector<Rat> r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  std::vector<Rat> r1(c_);
  stripq(r1);
  std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // track coefficient of a only
  while (true) {
    check(!r1.empty(), Err::Internal, "cyclotomic gcd degenerated");
    if (r1.size() == 1) break;
    std::vector<Rat> q = poly_quo(r0, r1);
    std::vector<Rat> r2 = poly_mod(r0, r1);
    std::vector<Rat> s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Invariant r_i = s_i * a (mod Phi), so a^{-1} = s1 / r1[0]; deg s1 < phi.
  Rat g = r1[0];
  const auto& rows = reduction_rows(n_);
  std::vector<Rat> c(c_.size(), Rat(0));
  for (size_t e = 0; e < s1.size(); ++e)
    if (s1[e] != 0) add_row(c, s1[e] / g, rows[e % static_cast<size_t>(n_)]);
  CycNum r;
  r.n_ = n_;
  r.c_ = std::move(c);
  return r;
}

bool CycNum::operator==(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

CycNum CycNum::galois(int64_t a) const {
  if (n_ == 1) return *this;
  int64_t r = a % n_;
  if (r < 0) r += n_;
  check(std::gcd(static_cast<int64_t>(n_), r) == 1, Err::InvalidArgument,
        "galois exponent not coprime to conductor");
  const auto& rows = reduction_rows(n_);
  std::vector<Rat> c(c_.size(), Rat(0));
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) add_row(c, c_[j], rows[(j * static_cast<size_t>(r)) % n_]);
  CycNum x;
  x.n_ = n_;
  x.c_ = std::move(c);
  return x;
}

CycNum CycNum::minimal_form() const {
  if (n_ == 1) return *this;
  for (int d = 1; d < n_; ++d) {
    if (n_ % d != 0 || !conductor_normalized(d)) continue;
    // Element lies in Q(zeta_d) iff fixed by every sigma_a with a = 1 mod d.
    bool fixed = true;
    for (int a = 1 + d; a < n_ && fixed; a += d)
      if (std::gcd(a, n_) == 1 && galois(a) != *this) fixed = false;
    if (!fixed) continue;
    // Solve for coordinates over the subfield power basis: columns are the
    // embeddings of zeta_d^i into conductor n.
    int pd = euler_phi(d);
    int pn = euler_phi(n_);
    const auto& rows = reduction_rows(n_);
    int step = n_ / d;
    std::vector<std::vector<Rat>> m(pn, std::vector<Rat>(pd + 1, Rat(0)));
    for (int i = 0; i < pd; ++i) {
      const auto& row = rows[(static_cast<size_t>(i) * step) % n_];
      for (int r = 0; r < pn; ++r) m[r][i] = Rat(row[r]);
    }
    for (int r = 0; r < pn; ++r) m[r][pd] = c_[r];
    // Gaussian elimination; system is consistent with a unique solution.
    std::vector<Rat> sol(pd, Rat(0));
    int rank = 0;
    std::vector<int> pivot_col(pn, -1);
    for (int col = 0; col < pd && rank < pn; ++col) {
      int piv = -1;
      for (int r = rank; r < pn; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      Rat inv = Rat(1) / m[rank][col];
      for (int cc = col; cc <= pd; ++cc) m[rank][cc] *= inv;
      for (int r = 0; r < pn; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        Rat f = m[r][col];
        for (int cc = col; cc <= pd; ++cc) m[r][cc] -= f * m[rank][cc];
      }
      pivot_col[rank] = col;
      ++rank;
    }
    bool ok = true;
    for (int r = rank; r < pn && ok; ++r)
      if (m[r][pd] != 0) ok = false;
    check(ok, Err::Internal, "subfield descent inconsistent");
    for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = m[r][pd];
    return from_coeffs(d, std::move(sol));
  }
  return *this;
}

CycNum CycNum::to_conductor(int m) const {
  check(m >= 1 && m <= kMaxConductor && m % 4 != 2 && m % n_ == 0, Err::InvalidArgument,
        "invalid embedding conductor");
  return embedded(m);
}

int CycNum::compare_raw(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = rat_cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  CycNum ma = a.minimal_form(), mb = b.minimal_form();
  if (ma.n_ != mb.n_) return ma.n_ < mb.n_ ? -1 : 1;
  for (size_t i = 0; i < ma.c_.size(); ++i) {
    int c = rat_cmp(ma.c_[i], mb.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {

// pi to 50 decimal digits; next digit is 5, so truncation is a lower bound.
const char* kPiDigits = "314159265358979323846264338327950288419716939937510";

Rat pi_lower() {
  static Rat v = Rat(Int(kPiDigits)) / pow_int(Int(10), 50);
  return v;
}

Rat pi_upper() {
  static Rat v = (Rat(Int(kPiDigits)) + 1) / pow_int(Int(10), 50);
  return v;
}

// Dyadic floor/ceil of a rational at 2^-q resolution.
Rat dyadic_floor(const Rat& x, unsigned q) {
  Int scaled = num(x) * pow_int(Int(2), q);
  Int d = den(x);
  Int fl = scaled / d;
  if (scaled < 0 && fl * d != scaled) fl -= 1;
  return Rat(fl) / pow_int(Int(2), q);
}

Rat dyadic_ceil(const Rat& x, unsigned q) {
  Int scaled = num(x) * pow_int(Int(2), q);
  Int d = den(x);
  Int fl = scaled / d;
  if (scaled < 0 && fl * d != scaled) fl -= 1;
  if (fl * d != scaled) fl += 1;
  return Rat(fl) / pow_int(Int(2), q);
}

Rat pow2_inv(unsigned q) { return Rat(1) / pow_int(Int(2), q); }

// Certified enclosure of cos(2 pi t) for exact rational t, interval width
// <= 2^-prec. Folds t into [0, 1/4], then an alternating Taylor sum at a
// dyadic midpoint with a Lipschitz slack for the pi interval.
std::pair<Rat, Rat> cos_two_pi(Rat t, unsigned prec) {
  t -= Rat(floor_div(num(t), den(t)));  // t in [0, 1)
  bool negate = false;
  if (t > Rat(1, 2)) t = 1 - t;
  if (t > Rat(1, 4)) {
    t = Rat(1, 2) - t;
    negate = true;
  }
  unsigned q = prec + 12;
  Rat x_lo = 2 * t * pi_lower();
  Rat x_hi = 2 * t * pi_upper();
  Rat x0 = dyadic_floor((x_lo + x_hi) / 2, q);
  Rat slack = x_hi - x_lo + pow2_inv(q);  // covers |x - x0| over the interval

  // cos(x0) by alternating series: terms t_k = x0^{2k}/(2k)!, decreasing
  // from k = 1 since x0 <= pi/2 gives x0^2 < 12.
  Rat x2 = x0 * x0;
  Rat term(1), sum(1);
  Rat eps = pow2_inv(q);
  bool plus = false;
  Rat tail(0);
  for (int k = 1; k <= 200; ++k) {
    term = term * x2 / Rat((2 * k - 1) * 2 * k);
    if (plus)
      sum += term;
    else
      sum -= term;
    plus = !plus;
    if (term < eps) {
      tail = term;  // |remainder| <= first omitted term <= current term
      break;
    }
    check(k < 200, Err::Internal, "cosine series failed to converge");
  }
  Rat lo = sum - tail - slack;
  Rat hi = sum + tail + slack;
  if (negate) {
    Rat t2 = -hi;
    hi = -lo;
    lo = t2;
  }
  return {lo, hi};
}

}  // namespace

std::pair<Rat, Rat> CycNum::approx_real(unsigned bits) const {
  check(bits <= 140, Err::InvalidArgument, "precision above supported bound");
  check(is_real(), Err::NotRealValued, "enclosure of a non-real element");
  // Real element: value equals sum_j c_j cos(2 pi j / n).
  Rat abs_sum(0);
  size_t terms = 0;
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) {
      abs_sum += abs(c_[j]);
      ++terms;
    }
  unsigned extra = 4;
  {
    Rat s = abs_sum + Rat(static_cast<int64_t>(terms) + 1);
    Int bound = num(s) / den(s) + 1;
    while (bound > 1) {
      bound >>= 1;
      ++extra;
    }
  }
  unsigned prec = bits + extra;
  Rat lo = c_[0], hi = c_[0];
  for (size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    auto [clo, chi] = cos_two_pi(Rat(static_cast<int64_t>(j), n_), prec);
    if (c_[j] >= 0) {
      lo += c_[j] * clo;
      hi += c_[j] * chi;
    } else {
      lo += c_[j] * chi;
      hi += c_[j] * clo;
    }
  }
  Rat out_lo = dyadic_floor(lo, bits + 2);
  Rat out_hi = dyadic_ceil(hi, bits + 2);
  check(out_hi - out_lo <= pow2_inv(bits), Err::Internal, "enclosure width overflow");
  return {out_lo, out_hi};
}

std::string CycNum::str() const {
  CycNum m = minimal_form();
  if (m.n_ == 1) return to_string(m.c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < m.c_.size(); ++j) {
    if (m.c_[j] == 0) continue;
    Rat v = m.c_[j];
    if (!first) os << (v >= 0 ? " + " : " - ");
    else if (v < 0)
      os << "-";
    first = false;
    Rat a = abs(v);
    if (j == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << "z" << m.n_;
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace artin3

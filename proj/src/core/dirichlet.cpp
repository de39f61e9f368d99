#include "core/dirichlet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "core/primes.hpp"

namespace artin3 {

namespace {

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return int64_t((__int128)a * b % m);
}

int64_t powmod(int64_t g, int64_t e, int64_t m) {
  int64_t r = 1 % m;
  g %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, g, m);
    g = mulmod(g, g, m);
    e >>= 1;
  }
  return r;
}

// Smallest generator of the cyclic (Z/p^k)* for odd p.
int64_t primitive_root(int64_t p, int64_t pk) {
  int64_t phi = pk / p * (p - 1);
  std::vector<int64_t> qs;
  for (const auto& [q, e] : factorize(Int(phi))) qs.push_back(to_i64(q));
  for (int64_t g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (int64_t q : qs)
      if (powmod(g, phi / q, pk) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(Err::Internal, "no primitive root found");
}

// Discrete log of a in the cyclic group generated by g mod m, order ord.
int64_t bsgs(int64_t a, int64_t g, int64_t ord, int64_t m) {
  int64_t step = 1;
  while (step * step < ord) ++step;
  std::unordered_map<int64_t, int64_t> baby;
  int64_t cur = 1 % m;
  for (int64_t j = 0; j < step; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, g, m);
  }
  int64_t giant = powmod(g, ord - step % ord, m);  // g^{-step}
  cur = a % m;
  for (int64_t i = 0; i <= ord / step + 1; ++i) {
    auto it = baby.find(cur);
    if (it != baby.end()) {
      int64_t d = (i * step + it->second) % ord;
      return d;
    }
    cur = mulmod(cur, giant, m);
  }
  fail(Err::Internal, "discrete log not found");
}

int64_t extgcd_inv(int64_t a, int64_t m) {
  int64_t old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  check(old_r == 1 || old_r == -1, Err::Internal, "inverse of a non-unit");
  int64_t inv = old_s % m;
  if (old_r == -1) inv = -inv;
  if (inv < 0) inv += m;
  return inv;
}

std::mutex g_unit_mutex;
std::map<int64_t, std::shared_ptr<const UnitGroup>>& unit_cache() {
  static std::map<int64_t, std::shared_ptr<const UnitGroup>> c;
  return c;
}

}  // namespace

UnitGroup::UnitGroup(int64_t n) : n_(n) {
  check(n >= 1, Err::InvalidArgument, "modulus must be positive");
  for (const auto& [pp, e] : factorize(Int(n))) {
    Component c;
    c.prime = to_i64(pp);
    c.exp = e;
    c.pk = 1;
    for (int i = 0; i < e; ++i) c.pk *= c.prime;
    if (c.prime == 2) {
      if (e == 1) continue;  // trivial
      if (e == 2) {
        c.gens = {{3, 2}};
      } else {
        c.gens = {{c.pk - 1, 2}, {5, c.pk / 4}};
      }
    } else {
      int64_t phi = c.pk / c.prime * (c.prime - 1);
      c.gens = {{primitive_root(c.prime, c.pk), phi}};
    }
    comps_.push_back(std::move(c));
  }
  for (const auto& c : comps_) {
    int64_t m = n_ / c.pk;
    int64_t inv = extgcd_inv(m % c.pk, c.pk);
    for (const auto& [g, ord] : c.gens) {
      // x = 1 mod (n/pk), x = g mod pk.
      int64_t x = (1 + (__int128)m * mulmod(inv, (g - 1 + c.pk) % c.pk, c.pk)) % n_;
      gens_.push_back({x, ord});
    }
  }
}

std::shared_ptr<const UnitGroup> UnitGroup::of(int64_t n) {
  std::lock_guard<std::mutex> lock(g_unit_mutex);
  auto& cache = unit_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto g = std::shared_ptr<const UnitGroup>(new UnitGroup(n));
  if (cache.size() > 4096) cache.clear();
  cache.emplace(n, g);
  return g;
}

Int UnitGroup::size() const {
  Int s = 1;
  for (const auto& c : comps_)
    for (const auto& [g, ord] : c.gens) s *= ord;
  return s;
}

std::vector<int64_t> UnitGroup::dlog(int64_t a) const {
  a %= n_;
  if (a < 0) a += n_;
  check(std::gcd(a, n_) == 1, Err::InvalidArgument, "dlog of a non-unit");
  std::vector<int64_t> out;
  for (const auto& c : comps_) {
    int64_t r = a % c.pk;
    if (c.prime == 2) {
      if (c.exp == 2) {
        out.push_back(r == 1 ? 0 : 1);
      } else {
        int64_t s = (r % 4 == 1) ? 0 : 1;
        int64_t b = s ? (c.pk - r) % c.pk : r;  // now b = 5^e mod 2^k
        out.push_back(s);
        out.push_back(bsgs(b, 5, c.pk / 4, c.pk));
      }
    } else {
      out.push_back(bsgs(r, c.gens[0].first, c.gens[0].second, c.pk));
    }
  }
  return out;
}

DirichletCharacter::DirichletCharacter() : conductor_(1), group_(UnitGroup::of(1)) {}

DirichletCharacter DirichletCharacter::from_exponents(int64_t n, std::vector<int64_t> exps) {
  auto U = UnitGroup::of(n);
  check(exps.size() == U->generators().size(), Err::InvalidArgument,
        "one exponent per generator required");
  for (size_t i = 0; i < exps.size(); ++i) {
    int64_t m = U->generators()[i].second;
    exps[i] %= m;
    if (exps[i] < 0) exps[i] += m;
  }

  // Conductor: product of local conductors over the CRT components, read
  // from the exponent orders.
  int64_t cond = 1;
  {
    size_t idx = 0;
    for (const auto& [pp, e] : factorize(Int(n))) {
      int64_t p = to_i64(pp);
      if (p == 2 && e == 1) continue;
      if (p == 2 && e >= 3) {
        int64_t a = exps[idx], b = exps[idx + 1];
        int64_t m5 = U->generators()[idx + 1].second;  // 2^{e-2}
        idx += 2;
        if (b != 0) {
          int64_t v = 0, bb = std::gcd(b, m5);
          while (bb % 2 == 0) {
            bb /= 2;
            ++v;
          }
          int64_t c2 = 1;
          for (int i = 0; i < e - int(v); ++i) c2 *= 2;
          cond *= c2;
        } else if (a != 0) {
          cond *= 4;
        }
        continue;
      }
      // odd p^e, or 2^2 (cyclic of order 2: same formula with p = 2).
      int64_t m = U->generators()[idx].second;
      int64_t ex = exps[idx];
      ++idx;
      if (ex == 0) continue;
      int64_t d = m / std::gcd(ex, m);
      int s = 0;
      while (d % p == 0) {
        d /= p;
        ++s;
      }
      int64_t pc = p;
      for (int i = 0; i < s; ++i) pc *= p;
      cond *= pc;
    }
  }

  DirichletCharacter chi;
  if (cond == n) {
    chi.conductor_ = n;
    chi.exps_ = std::move(exps);
    chi.group_ = U;
    return chi;
  }

  // Restrict to the primitive core mod cond: evaluate at lifts of the small
  // group's generators.
  auto V = UnitGroup::of(cond);
  std::vector<int64_t> small;
  DirichletCharacter big;
  big.conductor_ = n;
  big.exps_ = std::move(exps);
  big.group_ = U;
  for (const auto& [g, mg] : V->generators()) {
    int64_t u = g;
    while (std::gcd(u, n) != 1) u += cond;
    auto [m, t] = big.value_at(u);
    check(mg % m == 0, Err::Internal, "restricted value order exceeds the generator order");
    small.push_back(t * (mg / m) % mg);
  }
  chi.conductor_ = cond;
  chi.exps_ = std::move(small);
  chi.group_ = V;
  return chi;
}

int64_t DirichletCharacter::order() const {
  int64_t o = 1;
  for (size_t i = 0; i < exps_.size(); ++i) {
    int64_t m = group_->generators()[i].second;
    o = std::lcm(o, m / std::gcd(exps_[i], m));
  }
  return o;
}

DirichletCharacter DirichletCharacter::inverse() const {
  DirichletCharacter r = *this;
  for (size_t i = 0; i < r.exps_.size(); ++i) {
    int64_t m = group_->generators()[i].second;
    r.exps_[i] = (m - r.exps_[i]) % m;
  }
  return r;
}

std::pair<int64_t, int64_t> DirichletCharacter::value_at(int64_t a) const {
  std::vector<int64_t> d = group_->dlog(a);
  int64_t den = 1;
  for (const auto& [g, m] : group_->generators()) den = std::lcm(den, m);
  int64_t num = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    int64_t m = group_->generators()[i].second;
    num = (num + (__int128)exps_[i] * d[i] % m * (den / m)) % den;
  }
  int64_t g = std::gcd(num, den);
  return {den / g, num / g};
}

CycNum DirichletCharacter::value_cyc(int64_t a) const {
  int64_t r = a % conductor_;
  if (r < 0) r += conductor_;
  if (std::gcd(r, conductor_) != 1) return CycNum(0);
  auto [m, t] = value_at(a);
  return CycNum::root_of_unity(int(m), int(t));
}

AbelianTriple::AbelianTriple(DirichletCharacter a, DirichletCharacter b, DirichletCharacter c)
    : chars{std::move(a), std::move(b), std::move(c)} {
  std::sort(chars.begin(), chars.end());
}

Int AbelianTriple::total_conductor() const {
  return Int(chars[0].conductor()) * chars[1].conductor() * chars[2].conductor();
}

bool AbelianTriple::self_dual() const {
  std::array<DirichletCharacter, 3> inv{chars[0].inverse(), chars[1].inverse(),
                                        chars[2].inverse()};
  std::sort(inv.begin(), inv.end());
  return inv == chars;
}

namespace {

constexpr int64_t kCountCap = 1000000;

// Primitive character counts q -> P[q] (all) and R[q] (real), multiplicative.
void primitive_count_tables(int64_t x, std::vector<int64_t>& P, std::vector<int64_t>& R) {
  std::vector<int32_t> spf(x + 1, 0);
  for (int64_t i = 2; i <= x; ++i)
    if (spf[i] == 0)
      for (int64_t j = i; j <= x; j += i)
        if (spf[j] == 0) spf[j] = int32_t(i);
  P.assign(x + 1, 0);
  R.assign(x + 1, 0);
  if (x >= 1) P[1] = R[1] = 1;
  for (int64_t q = 2; q <= x; ++q) {
    int64_t rest = q;
    int64_t p_cnt = 1, r_cnt = 1;
    while (rest > 1) {
      int64_t p = spf[rest];
      int e = 0;
      int64_t pk = 1;
      while (rest % p == 0) {
        rest /= p;
        ++e;
        pk *= p;
      }
      int64_t local_p, local_r;
      if (p == 2) {
        local_p = e == 1 ? 0 : e == 2 ? 1 : pk / 4;
        local_r = e == 2 ? 1 : e == 3 ? 2 : 0;
      } else {
        local_p = e == 1 ? p - 2 : (p - 1) * (p - 1) * (pk / (p * p));
        local_r = e == 1 ? 1 : 0;
      }
      p_cnt *= local_p;
      r_cnt *= local_r;
      if (p_cnt == 0 && r_cnt == 0) break;
    }
    P[q] = p_cnt;
    R[q] = r_cnt;
  }
}

// Multisets of size three over a weighted set: (T + 3 D + 2 E) / 6 by the
// orbit count of S3 on ordered triples.
Int multiset_triples(const std::vector<int64_t>& W, int64_t x) {
  std::vector<int64_t> S(x + 1, 0);
  for (int64_t q = 1; q <= x; ++q) S[q] = S[q - 1] + W[q];
  Int T = 0, D = 0, E = 0;
  for (int64_t a = 1; a <= x; ++a) {
    if (W[a] == 0) continue;
    for (int64_t b = 1; a * b <= x; ++b) {
      if (W[b] == 0) continue;
      T += Int(W[a]) * W[b] * S[x / (a * b)];
    }
  }
  for (int64_t a = 1; a * a <= x; ++a)
    if (W[a] != 0) D += Int(W[a]) * S[x / (a * a)];
  for (int64_t a = 1; a * a * a <= x; ++a) E += W[a];
  Int total = T + 3 * D + 2 * E;
  check(total % 6 == 0, Err::Internal, "triple count not divisible by 6");
  return total / 6;
}

}  // namespace

Int count_ab3(int64_t x) {
  check(x >= 1, Err::InvalidArgument, "bound must be positive");
  check(x <= kCountCap, Err::BoundTooLarge, "abelian count bound above 10^6");
  std::vector<int64_t> P, R;
  primitive_count_tables(x, P, R);
  return multiset_triples(P, x);
}

Int count_ab_sd3(int64_t x) {
  check(x >= 1, Err::InvalidArgument, "bound must be positive");
  check(x <= kCountCap, Err::BoundTooLarge, "abelian count bound above 10^6");
  std::vector<int64_t> P, R;
  primitive_count_tables(x, P, R);
  // All-real multisets, plus {real, psi, inverse(psi)} with psi non-real.
  Int total = multiset_triples(R, x);
  std::vector<int64_t> SR(x + 1, 0);
  for (int64_t q = 1; q <= x; ++q) SR[q] = SR[q - 1] + R[q];
  for (int64_t a = 1; a * a <= x; ++a) {
    int64_t nonreal = P[a] - R[a];
    check(nonreal % 2 == 0, Err::Internal, "non-real characters must pair up");
    total += Int(nonreal / 2) * SR[x / (a * a)];
  }
  return total;
}

std::vector<DirichletCharacter> enumerate_primitive(int64_t x) {
  check(x >= 1, Err::InvalidArgument, "bound must be positive");
  check(x <= 5000, Err::BoundTooLarge, "primitive enumeration bound above 5000");
  std::vector<DirichletCharacter> out;
  out.push_back(DirichletCharacter());
  for (int64_t q = 2; q <= x; ++q) {
    auto U = UnitGroup::of(q);
    const auto& gens = U->generators();
    if (gens.empty()) continue;  // q = 2
    std::vector<int64_t> e(gens.size(), 0);
    std::vector<DirichletCharacter> here;
    while (true) {
      DirichletCharacter chi = DirichletCharacter::from_exponents(q, e);
      if (chi.conductor() == q) here.push_back(std::move(chi));
      size_t i = 0;
      while (i < e.size()) {
        if (++e[i] < gens[i].second) break;
        e[i] = 0;
        ++i;
      }
      if (i == e.size()) break;
    }
    std::sort(here.begin(), here.end());
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::vector<DirichletCharacter> quadratic_characters(int64_t x) {
  check(x >= 1, Err::InvalidArgument, "bound must be positive");
  std::vector<DirichletCharacter> out;
  out.push_back(DirichletCharacter());
  for (int64_t q = 2; q <= x; ++q) {
    // Shape: odd squarefree part, 2-exponent 0, 2 or 3.
    int64_t rest = q;
    int v2 = 0;
    while (rest % 2 == 0) {
      rest /= 2;
      ++v2;
    }
    if (v2 == 1 || v2 > 3) continue;
    bool sf = true;
    for (const auto& [p, e] : factorize(Int(rest)))
      if (e > 1) sf = false;
    if (!sf) continue;
    auto U = UnitGroup::of(q);
    const auto& gens = U->generators();
    std::vector<std::vector<int64_t>> cands;
    cands.push_back({});
    for (const auto& [g, m] : gens) {
      std::vector<std::vector<int64_t>> next;
      for (const auto& base : cands)
        for (int64_t ev : {int64_t(0), m / 2}) {
          auto cp = base;
          cp.push_back(ev);
          next.push_back(std::move(cp));
        }
      cands = std::move(next);
    }
    std::vector<DirichletCharacter> here;
    for (const auto& e : cands) {
      DirichletCharacter chi = DirichletCharacter::from_exponents(q, e);
      if (chi.conductor() == q) here.push_back(std::move(chi));
    }
    std::sort(here.begin(), here.end());
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::string abelian_census_csv(const std::vector<int64_t>& xs) {
  std::string s = "x,count_ab3,count_ab_sd3,ratio\n";
  for (int64_t x : xs) {
    Int ab = count_ab3(x), sd = count_ab_sd3(x);
    Int scaled = (sd * 2000000 + ab) / (2 * ab);  // rounded 1e6 * sd / ab
    Int ip = scaled / 1000000, fp = scaled % 1000000;
    std::string frac = fp.str();
    frac.insert(frac.begin(), 6 - frac.size(), '0');
    s += std::to_string(x) + "," + ab.str() + "," + sd.str() + "," + ip.str() + "." + frac +
         "\n";
  }
  return s;
}

int kronecker(Int a, Int n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int k = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    int r = static_cast<int>(Int(a % 8));
    if (r < 0) r += 8;
    if (r == 3 || r == 5) k = -k;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    int va = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++va;
    }
    if (va % 2 == 1) {
      int r = static_cast<int>(Int(n % 8));
      if (r == 3 || r == 5) k = -k;
    }
    if (Int(a % 4) == 3 && Int(n % 4) == 3) k = -k;
    Int t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? k : 0;
}

bool is_fundamental_discriminant(const Int& d) {
  if (d == 1) return true;
  auto squarefree = [](const Int& m) {
    for (const auto& [p, e] : factorize(m))
      if (e > 1) return false;
    return true;
  };
  Int r4 = d % 4;
  if (r4 < 0) r4 += 4;
  if (r4 == 1) return squarefree(abs(d));
  if (r4 == 0) {
    Int m = d / 4;
    Int m4 = m % 4;
    if (m4 < 0) m4 += 4;
    if (m4 == 2 || m4 == 3) return squarefree(abs(m));
  }
  return false;
}

}  // namespace artin3

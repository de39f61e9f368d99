#include "core/nfield.hpp"

#include <algorithm>
#include <cstdint>

#include <json.hpp>

#include "core/primes.hpp"

namespace artin3 {

namespace {

bool is_rational_square(const Rat& r) {
  if (r < 0) return false;
  return is_square(num(r)) && is_square(den(r));
}

Int common_den(const std::vector<Rat>& v) {
  Int m = 1;
  for (const Rat& x : v) m = lcm(m, den(x));
  return m;
}

// Product of two integer coordinate vectors modulo the monic polynomial f.
std::vector<Int> polymul_mod_f(const std::vector<Int>& a, const std::vector<Int>& b, const ZPoly& f) {
  int d = f.degree();
  std::vector<Int> v(static_cast<size_t>(2 * d - 1), Int(0));
  for (int i = 0; i < d; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j) v[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (v[static_cast<size_t>(k)] == 0) continue;
    Int c = v[static_cast<size_t>(k)];
    v[static_cast<size_t>(k)] = 0;
    for (int j = 0; j < d; ++j) v[static_cast<size_t>(k - d + j)] -= c * f.c[static_cast<size_t>(j)];
  }
  v.resize(static_cast<size_t>(d));
  return v;
}

// Solve y * M = v for an upper-triangular M with nonzero diagonal.
std::vector<Rat> solve_upper(const std::vector<std::vector<Int>>& m, const std::vector<Rat>& v) {
  size_t d = m.size();
  std::vector<Rat> y(d);
  for (size_t j = 0; j < d; ++j) {
    Rat acc = v[j];
    for (size_t i = 0; i < j; ++i) acc -= y[i] * Rat(m[i][j]);
    y[j] = acc / Rat(m[j][j]);
  }
  return y;
}

std::vector<Int> to_int_vec(const std::vector<Rat>& v, const char* what) {
  std::vector<Int> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    check(den(v[i]) == 1, Err::Internal, what);
    r[i] = num(v[i]);
  }
  return r;
}

std::vector<Rat> to_rat_vec(const std::vector<Int>& v) {
  std::vector<Rat> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Hermite form of a full-rank row lattice in Z^d: d rows, upper triangular,
// positive diagonal, entries above each pivot reduced into [0, pivot).
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows, int d) {
  size_t r = 0;
  for (int col = 0; col < d; ++col) {
    for (;;) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][static_cast<size_t>(col)] == 0) continue;
        if (best == rows.size() ||
            abs(rows[i][static_cast<size_t>(col)]) < abs(rows[best][static_cast<size_t>(col)]))
          best = i;
      }
      check(best != rows.size(), Err::Internal, "lattice is not of full rank");
      std::swap(rows[r], rows[best]);
      bool again = false;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][static_cast<size_t>(col)] == 0) continue;
        Int q = rows[i][static_cast<size_t>(col)] / rows[r][static_cast<size_t>(col)];
        if (q != 0)
          for (int j = 0; j < d; ++j) rows[i][static_cast<size_t>(j)] -= q * rows[r][static_cast<size_t>(j)];
        if (rows[i][static_cast<size_t>(col)] != 0) again = true;
      }
      if (!again) break;
    }
    if (rows[r][static_cast<size_t>(col)] < 0)
      for (int j = 0; j < d; ++j) rows[r][static_cast<size_t>(j)] = -rows[r][static_cast<size_t>(j)];
    for (size_t i = 0; i < r; ++i) {
      Int q = floor_div(rows[i][static_cast<size_t>(col)], rows[r][static_cast<size_t>(col)]);
      if (q != 0)
        for (int j = 0; j < d; ++j) rows[i][static_cast<size_t>(j)] -= q * rows[r][static_cast<size_t>(j)];
    }
    ++r;
  }
  for (size_t i = r; i < rows.size(); ++i)
    for (int j = 0; j < d; ++j)
      check(rows[i][static_cast<size_t>(j)] == 0, Err::Internal, "Hermite reduction left residue");
  rows.resize(static_cast<size_t>(d));
  return rows;
}

int vp_of(Int n, const Int& p) {
  check(n != 0, Err::Internal, "valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// An order containing Z[theta]: rows are basis elements times den in power
// coordinates, kept in Hermite form.
struct Order {
  int d;
  Int den;
  std::vector<std::vector<Int>> m;
};

Order initial_order(int d) {
  Order o;
  o.d = d;
  o.den = 1;
  o.m.assign(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(d), Int(0)));
  for (int i = 0; i < d; ++i) o.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return o;
}

Int order_index(const Order& o) {
  Int det = 1;
  for (int i = 0; i < o.d; ++i) det *= o.m[static_cast<size_t>(i)][static_cast<size_t>(i)];
  Int dd = pow_int(o.den, static_cast<uint64_t>(o.d));
  check(dd % det == 0, Err::Internal, "order does not contain the power basis");
  return dd / det;
}

// Structure constants: m3[i][j] = basis coordinates of w_i * w_j.
std::vector<std::vector<std::vector<Int>>> mult_table(const Order& o, const ZPoly& f) {
  size_t d = static_cast<size_t>(o.d);
  std::vector<std::vector<std::vector<Int>>> m3(d, std::vector<std::vector<Int>>(d));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i; j < d; ++j) {
      std::vector<Int> prod = polymul_mod_f(o.m[i], o.m[j], f);
      std::vector<Rat> rhs(d);
      for (size_t k = 0; k < d; ++k) rhs[k] = Rat(prod[k]) / Rat(o.den);
      m3[i][j] = to_int_vec(solve_upper(o.m, rhs), "order multiplication leaves the lattice");
      if (j != i) m3[j][i] = m3[i][j];
    }
  }
  return m3;
}

using FpMat = std::vector<std::vector<int64_t>>;

FpMat transpose_fp(const FpMat& m) {
  if (m.empty()) return {};
  FpMat t(m[0].size(), std::vector<int64_t>(m.size(), 0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

int64_t invmod_fp(int64_t a, int64_t p) {
  int64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<int64_t>((static_cast<__int128>(r) * a) % p);
    a = static_cast<int64_t>((static_cast<__int128>(a) * a) % p);
    e >>= 1;
  }
  return r;
}

// Basis of {v : m v = 0} over F_p (column-vector kernel).
std::vector<std::vector<int64_t>> nullspace_fp(FpMat m, int64_t p) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  std::vector<int> pivot_row_of_col(cols, -1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rows;
    for (size_t i = rank; i < rows; ++i)
      if (m[i][col] % p != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    int64_t inv = invmod_fp(((m[rank][col] % p) + p) % p, p);
    for (size_t j = 0; j < cols; ++j)
      m[rank][j] = static_cast<int64_t>((static_cast<__int128>(((m[rank][j] % p) + p) % p) * inv) % p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      int64_t c = ((m[i][col] % p) + p) % p;
      if (c == 0) continue;
      for (size_t j = 0; j < cols; ++j) {
        int64_t sub = static_cast<int64_t>((static_cast<__int128>(c) * m[rank][j]) % p);
        m[i][j] = ((m[i][j] - sub) % p + p) % p;
      }
    }
    pivot_row_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<std::vector<int64_t>> basis;
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    std::vector<int64_t> v(cols, 0);
    v[col] = 1;
    for (size_t pc = 0; pc < cols; ++pc) {
      int pr = pivot_row_of_col[pc];
      if (pr >= 0) v[pc] = (p - m[static_cast<size_t>(pr)][col] % p) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of 1 in the order's basis.
std::vector<Int> one_coords(const Order& o) {
  std::vector<Rat> rhs(static_cast<size_t>(o.d), Rat(0));
  rhs[0] = Rat(o.den);
  return to_int_vec(solve_upper(o.m, rhs), "order does not contain 1");
}

// Radical of pO as a sublattice of O, rows in basis coordinates.
std::vector<std::vector<Int>> radical_lattice(const Order& o,
                                              const std::vector<std::vector<std::vector<Int>>>& m3,
                                              int64_t p) {
  size_t d = static_cast<size_t>(o.d);
  // Structure constants mod p.
  std::vector<std::vector<std::vector<int64_t>>> m3p(d, std::vector<std::vector<int64_t>>(d, std::vector<int64_t>(d, 0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        Int v = m3[i][j][k] % p;
        if (v < 0) v += p;
        m3p[i][j][k] = static_cast<int64_t>(v);
      }
  auto mulw = [&](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    std::vector<int64_t> z(d, 0);
    for (size_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < d; ++j) {
        if (b[j] == 0) continue;
        int64_t c = static_cast<int64_t>((static_cast<__int128>(a[i]) * b[j]) % p);
        for (size_t k = 0; k < d; ++k)
          z[k] = static_cast<int64_t>((z[k] + static_cast<__int128>(c) * m3p[i][j][k]) % p);
      }
    }
    return z;
  };
  std::vector<int64_t> onep(d);
  {
    std::vector<Int> one = one_coords(o);
    for (size_t i = 0; i < d; ++i) {
      Int v = one[i] % p;
      if (v < 0) v += p;
      onep[i] = static_cast<int64_t>(v);
    }
  }
  // Frobenius matrix: row i = coordinates of w_i^p.
  FpMat frob(d);
  for (size_t i = 0; i < d; ++i) {
    std::vector<int64_t> base(d, 0), r = onep;
    base[i] = 1;
    int64_t e = p;
    while (e > 0) {
      if (e & 1) r = mulw(r, base);
      base = mulw(base, base);
      e >>= 1;
    }
    frob[i] = std::move(r);
  }
  // Iterate to x -> x^(p^k) with p^k >= d.
  int k = 1;
  {
    int64_t pk = p;
    while (pk < static_cast<int64_t>(d)) {
      pk *= p;
      ++k;
    }
  }
  FpMat fk = frob;
  for (int step = 1; step < k; ++step) {
    FpMat next(d, std::vector<int64_t>(d, 0));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        __int128 acc = 0;
        for (size_t l = 0; l < d; ++l) acc += static_cast<__int128>(fk[i][l]) * fk[l][j];
        next[i][j] = static_cast<int64_t>(acc % p);
      }
    fk = std::move(next);
  }
  std::vector<std::vector<int64_t>> kernel = nullspace_fp(transpose_fp(fk), p);
  std::vector<std::vector<Int>> rows;
  for (const auto& v : kernel) {
    std::vector<Int> row(d);
    for (size_t i = 0; i < d; ++i) row[i] = v[i];
    rows.push_back(std::move(row));
  }
  for (size_t i = 0; i < d; ++i) {
    std::vector<Int> row(d, Int(0));
    row[i] = p;
    rows.push_back(std::move(row));
  }
  return hnf_rows(std::move(rows), o.d);
}

// Kernel of O/pO -> End(I_p / p I_p); nonzero vectors enlarge the order.
std::vector<std::vector<int64_t>> multiplier_kernel(const Order& o,
                                                    const std::vector<std::vector<std::vector<Int>>>& m3,
                                                    const std::vector<std::vector<Int>>& beta,
                                                    int64_t p) {
  size_t d = static_cast<size_t>(o.d);
  FpMat big(d, std::vector<int64_t>(d * d, 0));
  for (size_t i = 0; i < d; ++i) {
    for (size_t l = 0; l < d; ++l) {
      std::vector<Int> prod(d, Int(0));
      for (size_t j = 0; j < d; ++j) {
        if (beta[l][j] == 0) continue;
        for (size_t k = 0; k < d; ++k) prod[k] += beta[l][j] * m3[i][j][k];
      }
      std::vector<Int> z = to_int_vec(solve_upper(beta, to_rat_vec(prod)),
                                      "radical multiplication leaves the radical");
      for (size_t k = 0; k < d; ++k) {
        Int v = z[k] % p;
        if (v < 0) v += p;
        big[i][l * d + k] = static_cast<int64_t>(v);
      }
    }
  }
  return nullspace_fp(transpose_fp(big), p);
}

void round2_at(Order& o, const ZPoly& f, int64_t p) {
  for (int pass = 0;; ++pass) {
    check(pass < 64, Err::Internal, "maximal-order iteration did not terminate");
    auto m3 = mult_table(o, f);
    auto beta = radical_lattice(o, m3, p);
    auto kernel = multiplier_kernel(o, m3, beta, p);
    if (kernel.empty()) return;
    size_t d = static_cast<size_t>(o.d);
    std::vector<std::vector<Int>> rows;
    for (size_t i = 0; i < d; ++i) {
      std::vector<Int> row(d);
      for (size_t j = 0; j < d; ++j) row[j] = o.m[i][j] * p;
      rows.push_back(std::move(row));
    }
    for (const auto& u : kernel) {
      std::vector<Int> row(d, Int(0));
      for (size_t i = 0; i < d; ++i) {
        if (u[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) row[j] += Int(u[i]) * o.m[i][j];
      }
      rows.push_back(std::move(row));
    }
    o.m = hnf_rows(std::move(rows), o.d);
    o.den *= p;
    Int g = o.den;
    for (const auto& row : o.m)
      for (const Int& v : row) g = gcd(g, v);
    if (g > 1) {
      o.den /= g;
      for (auto& row : o.m)
        for (Int& v : row) v /= g;
    }
  }
}

// Traces of theta^k from Newton's identities.
std::vector<Int> newton_traces(const ZPoly& f) {
  int d = f.degree();
  std::vector<Int> s(static_cast<size_t>(d));
  s[0] = d;
  for (int k = 1; k < d; ++k) {
    Int acc = -Int(k) * f.coeff(d - k);
    for (int i = 1; i < k; ++i) acc -= f.coeff(d - i) * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = acc;
  }
  return s;
}

// Interpolation points 0, 1, -1, 2, -2, ...
std::vector<Int> sample_points(int n) {
  std::vector<Int> xs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int t = (i + 1) / 2;
    xs[static_cast<size_t>(i)] = (i % 2) ? Int(t) : Int(-t);
  }
  return xs;
}

// Unique polynomial of degree < xs.size() through the sample points.
std::vector<Rat> interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  size_t n = xs.size();
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rat> numer{Rat(1)};
    Rat denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(numer.size() + 1, Rat(0));
      for (size_t k = 0; k < numer.size(); ++k) {
        next[k + 1] += numer[k];
        next[k] -= numer[k] * Rat(xs[j]);
      }
      numer = std::move(next);
      denom *= Rat(xs[i] - xs[j]);
    }
    Rat w = Rat(ys[i]) / denom;
    for (size_t k = 0; k < numer.size(); ++k) out[k] += numer[k] * w;
  }
  return out;
}

// prod over conjugates of g(x, theta_i) for the monic defining polynomial:
// evaluate the resultant at sample x values and interpolate. The builder
// maps x0 to the ZPoly in t to feed the resultant.
template <typename Builder>
std::vector<Rat> conjugate_product(const ZPoly& f, int out_degree, Builder&& build) {
  std::vector<Int> xs = sample_points(out_degree + 1);
  std::vector<Int> ys(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) ys[i] = resultant(f, build(xs[i]));
  return interpolate(xs, ys);
}

void require_parent(const FieldElement& a) {
  check(a.parent != nullptr, Err::InvalidArgument, "element has no parent field");
  check(a.co.size() == static_cast<size_t>(a.parent->degree()), Err::Internal,
        "element coordinate size mismatch");
}

void require_same_parent(const FieldElement& a, const FieldElement& b) {
  require_parent(a);
  require_parent(b);
  check(same_field(a.parent, b.parent), Err::ParentMismatch, "elements live in different fields");
}

// Rational-coefficient reduction modulo the parent's monic polynomial.
std::vector<Rat> reduce_rat_mod_f(std::vector<Rat> v, const ZPoly& f) {
  int d = f.degree();
  for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
    if (v[static_cast<size_t>(k)] == 0) continue;
    Rat c = v[static_cast<size_t>(k)];
    v[static_cast<size_t>(k)] = 0;
    for (int j = 0; j < d; ++j) v[static_cast<size_t>(k - d + j)] -= c * Rat(f.c[static_cast<size_t>(j)]);
  }
  v.resize(static_cast<size_t>(d));
  return v;
}

// Integer-coordinate form of a scaled by den^2 (same square class).
std::vector<Int> square_class_integer_coords(const FieldElement& a) {
  Int m = common_den(a.co);
  std::vector<Int> b(a.co.size());
  for (size_t i = 0; i < a.co.size(); ++i) {
    Rat v = a.co[i] * Rat(m) * Rat(m);
    check(den(v) == 1, Err::Internal, "denominator clearing failed");
    b[i] = num(v);
  }
  return b;
}

}  // namespace

FieldPtr NumberField::make(ZPoly f) { return make_impl(std::move(f), nullptr); }

FieldPtr NumberField::make(ZPoly f, const std::map<Int, int>& disc_factors) {
  return make_impl(std::move(f), &disc_factors);
}

FieldPtr NumberField::make_impl(ZPoly f, const std::map<Int, int>* disc_factors) {
  check(!f.is_zero() && f.is_monic(), Err::InvalidArgument, "defining polynomial must be monic");
  check(f.degree() >= 1 && f.degree() <= 6, Err::UnsupportedDegree,
        "field degree must be between 1 and 6");
  check(irreducible_z(f), Err::IrreducibilityFailure, "defining polynomial is reducible");
  auto k = std::shared_ptr<NumberField>(new NumberField());
  k->f_ = std::move(f);
  int d = k->f_.degree();
  k->poly_disc_ = (d >= 2) ? poly_disc(k->f_) : Int(1);
  check(k->poly_disc_ != 0, Err::Internal, "irreducible polynomial with zero discriminant");

  std::map<Int, int> fac;
  if (disc_factors) {
    Int prod = 1;
    for (const auto& [p, e] : *disc_factors) {
      check(p >= 2 && e >= 1, Err::InvalidArgument, "invalid discriminant factor");
      check(is_prime(p), Err::InvalidArgument, "discriminant factor is not prime");
      prod *= pow_int(p, static_cast<uint64_t>(e));
    }
    check(prod == abs(k->poly_disc_), Err::InvalidArgument,
          "discriminant factorization does not match the polynomial");
    fac = *disc_factors;
  } else {
    fac = factorize(abs(k->poly_disc_));
  }
  Order o = initial_order(d);
  for (const auto& [p, e] : fac) {
    if (e < 2) continue;
    check(p < (Int(1) << 31), Err::BoundTooLarge, "ramified prime exceeds the supported range");
    round2_at(o, k->f_, to_i64(p));
    k->index_val_[p] = vp_of(order_index(o), p);
  }
  k->index_ = order_index(o);
  check(k->poly_disc_ % (k->index_ * k->index_) == 0, Err::Internal,
        "index square does not divide the discriminant");
  k->disc_ = k->poly_disc_ / (k->index_ * k->index_);
  // Display basis: rerun the Hermite reduction with reversed coordinates so
  // the result is lower triangular and starts with the element 1.
  {
    std::vector<std::vector<Int>> rev;
    for (const auto& row : o.m) rev.emplace_back(row.rbegin(), row.rend());
    auto h = hnf_rows(std::move(rev), d);
    k->basis_.assign(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        k->basis_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            Rat(h[static_cast<size_t>(d - 1 - i)][static_cast<size_t>(d - 1 - j)]) / Rat(o.den);
    check(k->basis_[0][0] == 1, Err::Internal, "integral basis does not start at 1");
    for (int j = 1; j < d; ++j)
      check(k->basis_[0][static_cast<size_t>(j)] == 0, Err::Internal,
            "integral basis does not start at 1");
  }
  k->traces_ = newton_traces(k->f_);
  return k;
}

std::string NumberField::to_json() const {
  nlohmann::json j;
  j["d_K"] = disc_.str();
  j["index"] = index_.str();
  std::vector<std::string> pc;
  for (const Int& v : f_.c) pc.push_back(v.str());
  j["poly"] = pc;
  return j.dump();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a != nullptr;
  if (!a || !b) return false;
  return a->poly() == b->poly();
}

FieldElement elem(const FieldPtr& k, std::vector<Rat> coords) {
  check(k != nullptr, Err::InvalidArgument, "element requires a parent field");
  check(coords.size() <= static_cast<size_t>(k->degree()), Err::InvalidArgument,
        "coordinate vector exceeds the field degree");
  coords.resize(static_cast<size_t>(k->degree()), Rat(0));
  return FieldElement{k, std::move(coords)};
}

FieldElement elem_int(const FieldPtr& k, const std::vector<int64_t>& coords) {
  std::vector<Rat> v(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) v[i] = Rat(coords[i]);
  return elem(k, std::move(v));
}

FieldElement elem_rat(const FieldPtr& k, const Rat& r) { return elem(k, std::vector<Rat>{r}); }

FieldElement elem_theta(const FieldPtr& k) {
  check(k != nullptr, Err::InvalidArgument, "element requires a parent field");
  check(k->degree() >= 2, Err::InvalidArgument, "degree-1 field has no generator theta");
  return elem(k, std::vector<Rat>{Rat(0), Rat(1)});
}

bool elem_is_zero(const FieldElement& a) {
  require_parent(a);
  for (const Rat& v : a.co)
    if (v != 0) return false;
  return true;
}

bool elem_is_rational(const FieldElement& a) {
  require_parent(a);
  for (size_t i = 1; i < a.co.size(); ++i)
    if (a.co[i] != 0) return false;
  return true;
}

bool elem_eq(const FieldElement& a, const FieldElement& b) {
  require_same_parent(a, b);
  return a.co == b.co;
}

FieldElement elem_add(const FieldElement& a, const FieldElement& b) {
  require_same_parent(a, b);
  FieldElement r = a;
  for (size_t i = 0; i < r.co.size(); ++i) r.co[i] += b.co[i];
  return r;
}

FieldElement elem_sub(const FieldElement& a, const FieldElement& b) {
  require_same_parent(a, b);
  FieldElement r = a;
  for (size_t i = 0; i < r.co.size(); ++i) r.co[i] -= b.co[i];
  return r;
}

FieldElement elem_neg(const FieldElement& a) {
  require_parent(a);
  FieldElement r = a;
  for (Rat& v : r.co) v = -v;
  return r;
}

FieldElement elem_mul(const FieldElement& a, const FieldElement& b) {
  require_same_parent(a, b);
  size_t d = a.co.size();
  std::vector<Rat> v(2 * d - 1, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    if (a.co[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) v[i + j] += a.co[i] * b.co[j];
  }
  return FieldElement{a.parent, reduce_rat_mod_f(std::move(v), a.parent->poly())};
}

FieldElement elem_inverse(const FieldElement& a) {
  require_parent(a);
  check(!elem_is_zero(a), Err::ZeroElement, "inverse of zero");
  using QP = std::vector<Rat>;
  auto qp_trim = [](QP& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  const ZPoly& f = a.parent->poly();
  QP r0(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r0[i] = Rat(f.c[i]);
  QP r1 = a.co, t0, t1{Rat(1)};
  qp_trim(r1);
  while (r1.size() >= 2) {
    // Divide r0 by r1.
    QP q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
    QP rem = r0;
    while (rem.size() >= r1.size()) {
      Rat c = rem.back() / r1.back();
      size_t sh = rem.size() - r1.size();
      q[sh] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[sh + i] -= c * r1[i];
      qp_trim(rem);
    }
    // t_new = t0 - q * t1.
    QP tn(std::max(t0.size(), q.size() + t1.size()), Rat(0));
    for (size_t i = 0; i < t0.size(); ++i) tn[i] += t0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < t1.size(); ++j) tn[i + j] -= q[i] * t1[j];
    qp_trim(tn);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  check(!r1.empty(), Err::Internal, "element shares a factor with the defining polynomial");
  Rat c = r1[0];
  std::vector<Rat> out(t1.size());
  for (size_t i = 0; i < t1.size(); ++i) out[i] = t1[i] / c;
  out = reduce_rat_mod_f(std::move(out), f);
  return FieldElement{a.parent, std::move(out)};
}

FieldElement elem_div(const FieldElement& a, const FieldElement& b) {
  return elem_mul(a, elem_inverse(b));
}

FieldElement elem_pow(const FieldElement& a, int k) {
  require_parent(a);
  FieldElement base = a;
  if (k < 0) {
    base = elem_inverse(a);
    k = -k;
  }
  FieldElement r = elem_rat(a.parent, 1);
  while (k > 0) {
    if (k & 1) r = elem_mul(r, base);
    base = elem_mul(base, base);
    k >>= 1;
  }
  return r;
}

FieldElement elem_eval(const ZPoly& g, const FieldElement& a) {
  require_parent(a);
  FieldElement r = elem_rat(a.parent, 0);
  for (size_t i = g.c.size(); i-- > 0;) {
    r = elem_mul(r, a);
    r.co[0] += Rat(g.c[i]);
  }
  return r;
}

Rat elem_norm(const FieldElement& a) {
  require_parent(a);
  if (elem_is_zero(a)) return Rat(0);
  int d = a.parent->degree();
  Int m = common_den(a.co);
  std::vector<Int> b(a.co.size());
  for (size_t i = 0; i < a.co.size(); ++i) b[i] = num(a.co[i] * Rat(m));
  Int r = resultant(a.parent->poly(), ZPoly::from_coeffs(std::move(b)));
  return Rat(r) / Rat(pow_int(m, static_cast<uint64_t>(d)));
}

Rat elem_trace(const FieldElement& a) {
  require_parent(a);
  const std::vector<Int>& s = a.parent->power_traces();
  Rat t = 0;
  for (size_t i = 0; i < a.co.size(); ++i) t += a.co[i] * Rat(s[i]);
  return t;
}

std::vector<Rat> elem_charpoly(const FieldElement& a) {
  require_parent(a);
  int d = a.parent->degree();
  Int m = common_den(a.co);
  std::vector<Int> b(a.co.size());
  for (size_t i = 0; i < a.co.size(); ++i) b[i] = num(a.co[i] * Rat(m));
  std::vector<Rat> raw = conjugate_product(a.parent->poly(), d, [&](const Int& x0) {
    std::vector<Int> g(b.size());
    for (size_t i = 0; i < b.size(); ++i) g[i] = -b[i];
    g[0] += m * x0;
    return ZPoly::from_coeffs(std::move(g));
  });
  Rat scale = Rat(1) / Rat(pow_int(m, static_cast<uint64_t>(d)));
  std::vector<Rat> cp(static_cast<size_t>(d) + 1, Rat(0));
  for (size_t i = 0; i < raw.size() && i < cp.size(); ++i) cp[i] = raw[i] * scale;
  check(cp.back() == 1, Err::Internal, "characteristic polynomial is not monic");
  return cp;
}

std::vector<Rat> elem_minpoly(const FieldElement& a) {
  std::vector<Rat> cp = elem_charpoly(a);
  Int dn = common_den(cp);
  std::vector<Int> pc(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) pc[i] = num(cp[i] * Rat(dn));
  auto [cont, factors] = factor_z(ZPoly::from_coeffs(std::move(pc)));
  (void)cont;
  check(factors.size() == 1, Err::Internal, "characteristic polynomial is not a prime power");
  const ZPoly& g = factors[0].poly;
  check(elem_is_zero(elem_eval(g, a)), Err::Internal, "minimal polynomial does not vanish");
  std::vector<Rat> mp(g.c.size());
  for (size_t i = 0; i < g.c.size(); ++i) mp[i] = Rat(g.c[i]) / Rat(g.lc());
  return mp;
}

bool sqrt_class_equal(const FieldElement& a, const FieldElement& b) {
  require_same_parent(a, b);
  check(!elem_is_zero(a) && !elem_is_zero(b), Err::ZeroElement, "square class of zero is undefined");
  FieldElement beta = elem_mul(a, b);
  int d = a.parent->degree();
  if (elem_is_rational(beta)) {
    if (is_rational_square(beta.co[0])) return true;
    if (d % 2 == 1) return false;
  }
  if (!is_rational_square(elem_norm(beta))) return false;
  if (d == 1) return true;

  // Trager reducibility test: beta is a square iff the squarefree shifted
  // norm of x^2 - beta splits over the rationals.
  std::vector<Int> bco = square_class_integer_coords(beta);
  const ZPoly& f = a.parent->poly();
  for (int trial = 0; trial <= 8 * d * d + 5; ++trial) {
    int t = (trial + 1) / 2;
    Int s = (trial % 2) ? Int(t) : Int(-t);
    std::vector<Rat> raw = conjugate_product(f, 2 * d, [&](const Int& x0) {
      std::vector<Int> g(std::max<size_t>(bco.size(), 3), Int(0));
      for (size_t i = 0; i < bco.size(); ++i) g[i] = -bco[i];
      g[0] += x0 * x0;
      g[1] -= 2 * s * x0;
      g[2] += s * s;
      return ZPoly::from_coeffs(std::move(g));
    });
    ZPoly h = ZPoly::from_coeffs(to_int_vec(raw, "norm resultant is not integral"));
    check(h.degree() == 2 * d && h.is_monic(), Err::Internal, "norm resultant is malformed");
    if (poly_gcd(h, h.derivative()).degree() != 0) continue;
    return !irreducible_z(h);
  }
  fail(Err::Internal, "no squarefree shift exists");
}

DedekindResult dedekind_test(const ZPoly& f, const Int& p) {
  check(f.is_monic() && f.degree() >= 1, Err::InvalidArgument,
        "Dedekind test requires a monic nonconstant polynomial");
  auto fac = factor_mod_p_lifted(f, p);
  ZPoly gstar = ZPoly::constant(1), hstar = ZPoly::constant(1);
  for (const auto& [q, e] : fac) {
    gstar = gstar * q;
    for (int i = 1; i < e; ++i) hstar = hstar * q;
  }
  ZPoly prod = gstar * hstar - f;
  std::vector<Int> tc(prod.c.size());
  for (size_t i = 0; i < prod.c.size(); ++i) {
    check(prod.c[i] % p == 0, Err::Internal, "Dedekind lift failed");
    tc[i] = prod.c[i] / p;
  }
  ZPoly t = ZPoly::from_coeffs(std::move(tc));
  ZPoly u = poly_gcd_mod_p(t, poly_gcd_mod_p(gstar, hstar, p), p);
  if (u.degree() == 0) return {true, ZPoly()};
  auto [w, rem] = poly_divrem_mod_p(f, u, p);
  check(rem.is_zero(), Err::Internal, "Dedekind certificate does not divide");
  return {false, w};
}

std::pair<Int, Int> field_disc(const ZPoly& f) {
  FieldPtr k = NumberField::make(f);
  return {k->disc(), k->index()};
}

std::vector<std::pair<int, int>> prime_splitting(const FieldPtr& k, const Int& p) {
  check(k != nullptr, Err::InvalidArgument, "null field");
  check(is_prime(p), Err::InvalidArgument, "splitting requires a prime");
  check(k->index() % p != 0, Err::IndexDivisor,
        "p divides the index; the polynomial shape does not certify the splitting");
  auto shape = factor_shape_mod_p(k->poly(), p);
  int total = 0;
  for (const auto& [fdeg, e] : shape) total += fdeg * e;
  check(total == k->degree(), Err::Internal, "splitting degrees do not sum to the field degree");
  return shape;
}

FieldPtr sextic_from_sqrt(const FieldPtr& m_field, const FieldElement& alpha) {
  check(m_field != nullptr && m_field->degree() == 3, Err::InvalidArgument,
        "base field must be cubic");
  require_parent(alpha);
  check(same_field(m_field, alpha.parent), Err::ParentMismatch, "alpha lives in a different field");
  check(!elem_is_zero(alpha), Err::ZeroElement, "cannot adjoin the square root of zero");
  check(!sqrt_class_equal(alpha, elem_rat(m_field, 1)), Err::IsSquare, "alpha is already a square");

  std::vector<Int> a0 = square_class_integer_coords(alpha);
  const ZPoly& f = m_field->poly();
  // Fixed multiplier list; c = 1 first, then small integer combinations. Each
  // candidate generator is c*sqrt(alpha); retrying changes nothing but the
  // primitive element.
  static const std::vector<std::vector<int64_t>> multipliers = {
      {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
      {2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 1, 2}, {2, 1, 1}, {1, 2, 2},
      {3, 1, 0}, {1, 3, 2}, {2, 3, 1}, {3, 2, 2},
  };
  for (const auto& craw : multipliers) {
    std::vector<Int> c(3);
    for (size_t i = 0; i < 3; ++i) c[i] = craw[i];
    std::vector<Int> a = polymul_mod_f(a0, polymul_mod_f(c, c, f), f);
    std::vector<Rat> raw = conjugate_product(f, 6, [&](const Int& x0) {
      std::vector<Int> g(a.size());
      for (size_t i = 0; i < a.size(); ++i) g[i] = -a[i];
      g[0] += x0 * x0;
      return ZPoly::from_coeffs(std::move(g));
    });
    ZPoly p6 = ZPoly::from_coeffs(to_int_vec(raw, "sextic resultant is not integral"));
    check(p6.degree() == 6 && p6.is_monic(), Err::Internal, "resultant is not a monic sextic");
    if (!irreducible_z(p6)) continue;
    FieldPtr k = NumberField::make(p6);
    Int dm2 = m_field->disc() * m_field->disc();
    check(k->disc() % dm2 == 0, Err::Internal, "tower discriminant identity failed");
    return k;
  }
  fail(Err::ReducibleResultant, "no multiplier produced an irreducible defining polynomial");
}

}  // namespace artin3

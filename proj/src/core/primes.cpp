#include "core/primes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace artin3 {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// Brent-cycle Pollard rho with batched gcd; n odd composite > 1. Returns a
// nontrivial factor. The polynomial constant and seed advance together, so
// the search is deterministic and always terminates on a composite.
Int rho_factor(const Int& n) {
  for (Int c = 1;; ++c) {
    Int y = c + 1, g = 1, q = 1, x = 0, ys = 0;
    Int r = 1;
    const Int batch = 128;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = r - k < batch ? r - k : batch;
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

// Splits n >= 2 with no prime factor below the trial-division bound.
void split_rough(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int root;
  if (is_square(n, &root)) {
    split_rough(root, out);
    split_rough(root, out);
    return;
  }
  Int d = rho_factor(n);
  split_rough(d, out);
  split_rough(n / d, out);
}

}  // namespace

std::map<Int, int> factorize(Int n) {
  check(n >= 1, Err::InvalidArgument, "factorize expects a positive integer");
  std::map<Int, int> out;
  for (int p : {2, 3, 5}) {
    while (n % p == 0) {
      n /= p;
      ++out[p];
    }
  }
  Int p = 7;
  int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};  // steps between 7,11,13,17,19,23,29,31,37
  int wi = 0;
  const Int trial_cap = 65537;
  while (n > 1 && p * p <= n && p <= trial_cap) {
    if (n % p == 0) {
      do {
        n /= p;
        ++out[p];
      } while (n % p == 0);
      if (n > 1 && is_prime(n)) break;  // large prime cofactor
    }
    p += wheel[wi];
    wi = (wi + 1) & 7;
  }
  if (n > 1) {
    if (p * p > n) {
      ++out[n];  // cofactor below the trial cap squared is prime
    } else {
      split_rough(n, out);
    }
  }
  return out;
}
std::vector<uint32_t> primes_up_to(uint32_t n) {
  std::vector<uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (uint32_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (uint64_t j = uint64_t(i) * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace artin3

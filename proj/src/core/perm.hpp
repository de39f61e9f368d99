#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace artin3 {

// Permutation of {0..d-1} as its image vector. Composition is function
// composition: (a after b)(i) = a[b[i]].
using Perm = std::vector<uint16_t>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  check(a.size() == b.size(), Err::InvalidArgument, "degree mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<uint16_t>(i);
  return r;
}

inline bool perm_is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

inline int perm_order(const Perm& a) {
  // lcm of cycle lengths.
  std::vector<bool> seen(a.size(), false);
  int64_t ord = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = a[j];
      ++len;
    }
    ord = std::lcm(ord, static_cast<int64_t>(len));
  }
  return static_cast<int>(ord);
}

inline int perm_sign(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  int transpositions = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = a[j];
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

// Parses disjoint-cycle notation with 1-based points, e.g. "(1,2)(3,4,5)".
// "e" or "" denotes the identity.
inline Perm perm_parse(const std::string& s, int degree) {
  Perm p = perm_identity(degree);
  if (s.empty() || s == "e" || s == "()") return p;
  size_t i = 0;
  while (i < s.size()) {
    check(s[i] == '(', Err::SchemaError, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    int cur = 0;
    bool have = false;
    for (; i < s.size() && s[i] != ')'; ++i) {
      if (s[i] >= '0' && s[i] <= '9') {
        cur = cur * 10 + (s[i] - '0');
        have = true;
      } else if (s[i] == ',' || s[i] == ' ') {
        if (have) cyc.push_back(cur);
        cur = 0;
        have = false;
      } else {
        fail(Err::SchemaError, "bad character in cycle notation");
      }
    }
    check(i < s.size(), Err::SchemaError, "unterminated cycle");
    ++i;
    if (have) cyc.push_back(cur);
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
      check(from >= 0 && from < degree && to >= 0 && to < degree, Err::SchemaError,
            "cycle point out of range");
      check(p[from] == static_cast<uint16_t>(from), Err::SchemaError,
            "point repeated across cycles");
      p[from] = static_cast<uint16_t>(to);
    }
  }
  check(perm_valid(p), Err::SchemaError, "cycles do not form a permutation");
  return p;
}

inline std::string perm_str(const Perm& a) {
  if (perm_is_identity(a)) return "e";
  std::string out;
  std::vector<bool> seen(a.size(), false);
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = a[j];
    }
    out += ")";
  }
  return out;
}

}  // namespace artin3

#pragma once

#include "resonaut/resonant.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace resonaut::testing {

inline int degree(const IntVector& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// Monoid {nu >= 0 : M nu = 0} up to total degree `bound`, by enumeration.
inline std::vector<IntVector> monoid_elements(const IntMatrix& M, int bound) {
  std::vector<IntVector> out;
  const int c = static_cast<int>(M.cols());
  IntVector v(static_cast<std::size_t>(c), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == c) {
      if (in_kernel(M, v) && std::any_of(v.begin(), v.end(), [](int x) { return x; })) out.push_back(v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, left - x);
    }
    v[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, bound);
  return out;
}

// Irreducible elements of the enumerated monoid: not a sum of two nonzero members.
inline std::vector<IntVector> brute_force_hilbert(const IntMatrix& M, int bound) {
  auto all = monoid_elements(M, bound);
  std::set<IntVector> members(all.begin(), all.end());
  std::vector<IntVector> out;
  for (const auto& v : all) {
    bool reducible = false;
    for (const auto& u : all) {
      if (u == v) continue;
      IntVector d(v.size());
      bool ok = true;
      for (std::size_t i = 0; i < v.size() && ok; ++i) {
        d[i] = v[i] - u[i];
        ok = d[i] >= 0;
      }
      if (ok && members.count(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every enumerated element is basis + (zero or an earlier element).
inline bool generates_up_to(const IntMatrix& M, const std::vector<IntVector>& basis, int bound) {
  std::set<IntVector> generated;
  auto all = monoid_elements(M, bound);
  std::stable_sort(all.begin(), all.end(), [](const IntVector& a, const IntVector& b) { return degree(a) < degree(b); });
  for (const auto& v : all) {
    bool ok = false;
    for (const auto& b : basis) {
      IntVector d(v.size());
      bool nonneg = true;
      for (std::size_t i = 0; i < v.size() && nonneg; ++i) {
        d[i] = v[i] - b[i];
        nonneg = d[i] >= 0;
      }
      if (nonneg && (degree(d) == 0 || generated.count(d))) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
    generated.insert(v);
  }
  return true;
}

inline SystemSpec random_spec(std::mt19937& rng, int n, int ell, int max_degree = 3) {
  std::uniform_int_distribution<int> first(-1, 2), rest(0, 2);
  std::set<IntVector> seen;
  while (static_cast<int>(seen.size()) < ell) {
    IntVector p(static_cast<std::size_t>(n));
    p[0] = first(rng);
    for (int i = 1; i < n; ++i) p[static_cast<std::size_t>(i)] = rest(rng);
    if (degree(p) >= 1 && degree(p) <= max_degree) seen.insert(p);
  }
  std::vector<IntVector> exps(seen.begin(), seen.end());
  std::shuffle(exps.begin(), exps.end(), rng);
  return validate_spec(n, exps);
}

}  // namespace resonaut::testing

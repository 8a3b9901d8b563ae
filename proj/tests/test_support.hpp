// Shared generators and oracles for the test suites. Nothing here calls the
// library code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "coweight/int_matrix.hpp"

namespace coweight::oracle {

/// Number of index-k subgroups of Z^n by the divisor recurrence
/// f_1(k) = 1, f_n(k) = sum_{d | k} f_{n-1}(d) * (k/d)^(n-1).
inline std::uint64_t subgroup_count(int n, std::int64_t k) {
  if (n == 1) return 1;
  std::uint64_t total = 0;
  for (std::int64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    std::uint64_t p = 1;
    for (int e = 0; e < n - 1; ++e) p *= static_cast<std::uint64_t>(k / d);
    total += subgroup_count(n - 1, d) * p;
  }
  return total;
}

/// Elementary unimodular matrix: identity plus q at (i, j), i != j, or a
/// sign flip / swap.
inline IntMatrix random_elementary(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1), kind(0, 3), mult(-3, 3);
  IntMatrix e = IntMatrix::identity(n);
  const int i = pick(rng);
  int j = pick(rng);
  if (j == i) j = (i + 1) % n;
  switch (kind(rng)) {
    case 0:
      e(i, i) = -1;
      break;
    case 1:
      e(i, i) = e(j, j) = 0;
      e(i, j) = e(j, i) = 1;
      break;
    default:
      e(i, j) = mult(rng);
  }
  return e;
}

/// Product of `len` elementary matrices, multiplied naively.
inline IntMatrix random_unimodular(int n, int len, std::mt19937_64& rng) {
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < len; ++s) {
    const IntMatrix e = random_elementary(n, rng);
    IntMatrix c(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int l = 0; l < n; ++l) c(a, b) += u(a, l) * e(l, b);
    u = c;
  }
  return u;
}

inline IntMatrix random_matrix(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

/// Leibniz-formula determinant, independent of the Bareiss path.
inline std::int64_t leibniz_det(const IntMatrix& m) {
  const int n = m.dim();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::int64_t p = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) p *= m(i, perm[i]);
    total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace coweight::oracle

/**
 * Finite unimodular matrix groups, in particular the automorphism group of
 * the coweight lattice A*_n written in the basis of minimal vectors
 * e_1..e_n (with e_0 = -(e_1 + ... + e_n)).
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coweight/checked.hpp"
#include "coweight/int_matrix.hpp"

namespace coweight {

/// Finite matrix group; elements deduplicated and sorted lexicographically.
class AutGroup {
 public:
  AutGroup() = default;

  /// Takes ownership of an element set the caller guarantees is a group.
  AutGroup(int n, std::vector<IntMatrix> elements) : n_(n), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  int dim() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<IntMatrix>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const IntMatrix& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m);
  }

  /// Closure check by brute force: identity, products, inverses.
  bool is_closed() const {
    if (!contains(IntMatrix::identity(n_))) return false;
    for (const auto& a : elements_) {
      if (!contains(inverse_unimodular(a))) return false;
      for (const auto& b : elements_)
        if (!contains(mul(a, b))) return false;
    }
    return true;
  }

  friend bool operator==(const AutGroup&, const AutGroup&) = default;

 private:
  int n_ = 0;
  std::vector<IntMatrix> elements_;
};

namespace detail {

inline void require_group_dim(int n) {
  if (n < 2 || n > IntMatrix::kMaxDim)
    throw dimension_error("group dimension must be in 2.." + std::to_string(IntMatrix::kMaxDim) +
                          ", got " + std::to_string(n));
}

inline std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace detail

/// Identity with column i (1-based) replaced by all -1. Maps e_i to e_0 and
/// e_0 to e_i, fixing the other minimal vectors.
inline IntMatrix p_generator(int n, int i) {
  detail::require_group_dim(n);
  if (i < 1 || i > n)
    throw dimension_error("p_generator: index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(n));
  IntMatrix p = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) p(j, i - 1) = -1;
  return p;
}

/// Generators of the n x n permutation matrices: the swap of coordinates 1,2
/// and the n-cycle e_j -> e_{j+1}. For n = 2 only the swap.
inline std::vector<IntMatrix> permutation_generators(int n) {
  detail::require_group_dim(n);
  IntMatrix swap = IntMatrix::identity(n);
  swap(0, 0) = swap(1, 1) = 0;
  swap(0, 1) = swap(1, 0) = 1;
  if (n == 2) return {swap};
  IntMatrix cycle(n);
  for (int j = 0; j < n; ++j) cycle((j + 1) % n, j) = 1;
  return {swap, cycle};
}

/// Breadth-first closure under right multiplication by the generators.
/// `cap` bounds the group order; the default is 10 * 2 * (n+1)!.
inline AutGroup generate_group(const std::vector<IntMatrix>& generators,
                               std::optional<std::size_t> cap = std::nullopt) {
  if (generators.empty()) throw dimension_error("generate_group: no generators");
  const int n = generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != n) throw dimension_error("generate_group: generators differ in dimension");
    const auto d = det(g);
    if (d != 1 && d != -1)
      throw std::invalid_argument("generate_group: generator is not unimodular (det " +
                                  std::to_string(d) + ")");
  }
  const std::size_t limit = cap.value_or(10 * 2 * detail::factorial(n + 1));

  std::set<IntMatrix> seen{IntMatrix::identity(n)};
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& a : frontier)
      for (const auto& g : generators) {
        auto c = mul(a, g);
        if (seen.insert(c).second) {
          if (seen.size() > limit)
            throw internal_error("generate_group: closure exceeds safety cap of " +
                                 std::to_string(limit) + " elements");
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  return AutGroup(n, std::vector<IntMatrix>(seen.begin(), seen.end()));
}

/// Closure of the permutation matrices and the P_{n,i}: a faithful copy of
/// the symmetric group on {e_0, ..., e_n}, order (n+1)!. Does not contain -I.
inline AutGroup symmetric_group_representation(int n) {
  auto gens = permutation_generators(n);
  for (int i = 1; i <= n; ++i) gens.push_back(p_generator(n, i));
  return generate_group(gens);
}

/// Full isometry group of A*_n in the minimal-vector basis:
/// S_{n+1} x {+-I}, order 2 (n+1)!.
inline AutGroup coweight_group(int n) {
  auto gens = permutation_generators(n);
  for (int i = 1; i <= n; ++i) gens.push_back(p_generator(n, i));
  gens.push_back(negate(IntMatrix::identity(n)));
  return generate_group(gens);
}

inline AutGroup trivial_group(int n) { return AutGroup(n, {IntMatrix::identity(n)}); }

/// Determinant +1 elements.
inline AutGroup proper_subgroup(const AutGroup& g) {
  std::vector<IntMatrix> out;
  for (const auto& r : g)
    if (det(r) == 1) out.push_back(r);
  return AutGroup(g.dim(), std::move(out));
}

inline AutGroup transpose_group(const AutGroup& g) {
  std::vector<IntMatrix> out;
  out.reserve(g.order());
  for (const auto& r : g) out.push_back(transpose(r));
  return AutGroup(g.dim(), std::move(out));
}

/// {R^{-T} : R in g}, the action of the same automorphisms on dual bases.
inline AutGroup contragredient_group(const AutGroup& g) {
  std::vector<IntMatrix> out;
  out.reserve(g.order());
  for (const auto& r : g) out.push_back(transpose(inverse_unimodular(r)));
  return AutGroup(g.dim(), std::move(out));
}

struct ConjugacyClass {
  IntMatrix representative;  // lexicographically smallest member
  std::size_t size = 0;
};

/// Conjugacy classes ordered by representative.
inline std::vector<ConjugacyClass> conjugacy_classes(const AutGroup& g) {
  const auto& el = g.elements();
  std::vector<IntMatrix> inverses;
  inverses.reserve(el.size());
  for (const auto& s : el) inverses.push_back(inverse_unimodular(s));

  std::vector<bool> assigned(el.size(), false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (assigned[i]) continue;
    std::set<IntMatrix> cls;
    for (std::size_t s = 0; s < el.size(); ++s) cls.insert(mul(mul(el[s], el[i]), inverses[s]));
    for (const auto& c : cls) {
      const auto pos = std::lower_bound(el.begin(), el.end(), c) - el.begin();
      if (static_cast<std::size_t>(pos) >= el.size() || el[pos] != c)
        throw internal_error("conjugacy_classes: group is not closed under conjugation");
      assigned[pos] = true;
    }
    classes.push_back({*cls.begin(), cls.size()});
  }
  return classes;
}

}  // namespace coweight

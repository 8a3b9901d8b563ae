/**
 * Orbit counting by Burnside's lemma: the number of classes equals the
 * average, over the group, of the number of index-k sublattices each
 * element fixes. Needs no storage proportional to the number of classes.
 */
#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coweight/aut_group.hpp"
#include "coweight/enumerate.hpp"
#include "coweight/hnf.hpp"
#include "coweight/parallel.hpp"

namespace coweight {

/// Number of index-k sublattices H with r * <H> = <H>.
inline std::uint64_t fixed_count(const IntMatrix& r, int n, std::int64_t k, unsigned workers = 1) {
  if (r.dim() != n) throw dimension_error("fixed_count: dimension mismatch");
  const HnfIndex index(n, k);
  std::atomic<std::uint64_t> fixed{0};
  parallel_chunks(index.size(), workers, 4096, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    std::uint64_t local = 0;
    for (std::uint64_t i = b; i < e; ++i)
      if (is_integral_conjugate(index.unrank(i), r)) ++local;
    fixed += local;
  });
  return fixed;
}

/// Number of volume-k ordered-simplex classes T with T * r unimodularly
/// equivalent to T (left normal forms, right action).
inline std::uint64_t simplex_fixed_count(const IntMatrix& r, int n, std::int64_t k, unsigned workers = 1) {
  if (r.dim() != n) throw dimension_error("simplex_fixed_count: dimension mismatch");
  const HnfIndex index(n, k);
  std::atomic<std::uint64_t> fixed{0};
  parallel_chunks(index.size(), workers, 4096, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    std::uint64_t local = 0;
    for (std::uint64_t i = b; i < e; ++i)
      if (is_integral_right_conjugate(transpose(index.unrank(i).matrix()), r)) ++local;
    fixed += local;
  });
  return fixed;
}

namespace detail {

inline std::uint64_t burnside_average(unsigned __int128 sum, std::size_t order) {
  if (sum % order != 0)
    throw internal_error("burnside: fixed-point total is not divisible by the group order " +
                         std::to_string(order));
  return static_cast<std::uint64_t>(sum / order);
}

template <class Fixed>
std::uint64_t burnside_by_classes(const AutGroup& g, Fixed&& fixed) {
  unsigned __int128 sum = 0;
  for (const auto& c : conjugacy_classes(g))
    sum += static_cast<unsigned __int128>(fixed(c.representative)) * c.size;
  return burnside_average(sum, g.order());
}

}  // namespace detail

/// (1/|g|) * sum of fixed_count over g, evaluated once per conjugacy class.
inline std::uint64_t burnside_count(const AutGroup& g, int n, std::int64_t k, unsigned workers = 1) {
  return detail::burnside_by_classes(g, [&](const IntMatrix& r) { return fixed_count(r, n, k, workers); });
}

/// Same average, summed element by element.
inline std::uint64_t burnside_count_all_elements(const AutGroup& g, int n, std::int64_t k,
                                                 unsigned workers = 1) {
  unsigned __int128 sum = 0;
  for (const auto& r : g) sum += fixed_count(r, n, k, workers);
  return detail::burnside_average(sum, g.order());
}

/// Burnside count of simplex classes under a right group.
inline std::uint64_t simplex_burnside_count(const AutGroup& right_group, int n, std::int64_t k,
                                            unsigned workers = 1) {
  return detail::burnside_by_classes(right_group,
                                     [&](const IntMatrix& r) { return simplex_fixed_count(r, n, k, workers); });
}

/// Multiset {fixed_count(r) : r in g} as value -> multiplicity.
inline std::map<std::uint64_t, std::uint64_t> fixed_count_profile(const AutGroup& g, int n, std::int64_t k,
                                                                   unsigned workers = 1) {
  std::map<std::uint64_t, std::uint64_t> profile;
  for (const auto& c : conjugacy_classes(g)) profile[fixed_count(c.representative, n, k, workers)] += c.size;
  return profile;
}

}  // namespace coweight

#pragma once

#include <cstdint>
#include <map>

#include "coweight/aut_group.hpp"
#include "coweight/burnside.hpp"
#include "coweight/count_table.hpp"
#include "coweight/enumerate.hpp"

namespace coweight {

struct DualReport {
  int n = 0;
  std::int64_t k = 0;
  Relation relation = Relation::isometry;
  std::uint64_t count = 0;            // under G
  std::uint64_t dual_count = 0;       // under the contragredient of G
  std::uint64_t burnside = 0;
  std::uint64_t dual_burnside = 0;
  bool profiles_equal = false;        // multisets of per-element fixed counts

  bool passed() const noexcept {
    return count == dual_count && burnside == dual_burnside && count == burnside && profiles_equal;
  }
};

/// Class counts of index-k sublattices for A*_n and for its dual, where the
/// dual carries the contragredient action R -> R^{-T} of the same group.
inline DualReport verify_dual_counts(int n, std::int64_t k, Relation relation, unsigned workers = 1) {
  if (relation == Relation::none)
    throw std::invalid_argument("verify_dual_counts: relation must be isometry or proper");
  DualReport rep;
  rep.n = n;
  rep.k = k;
  rep.relation = relation;
  const AutGroup g = group_for(n, relation);
  const AutGroup dual = contragredient_group(g);

  rep.count = count_classes(n, k, g, workers);
  rep.dual_count = count_classes(n, k, dual, workers);

  const auto profile = fixed_count_profile(g, n, k, workers);
  const auto dual_profile = fixed_count_profile(dual, n, k, workers);
  rep.profiles_equal = profile == dual_profile;

  unsigned __int128 sum = 0, dual_sum = 0;
  for (const auto& [fixed, mult] : profile) sum += static_cast<unsigned __int128>(fixed) * mult;
  for (const auto& [fixed, mult] : dual_profile) dual_sum += static_cast<unsigned __int128>(fixed) * mult;
  rep.burnside = detail::burnside_average(sum, g.order());
  rep.dual_burnside = detail::burnside_average(dual_sum, dual.order());
  return rep;
}

}  // namespace coweight

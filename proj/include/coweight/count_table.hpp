/**
 * Class counts keyed by (n, k, relation, object, method), plus the plain
 * text renderings used by the command-line tool.
 */
#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coweight/aut_group.hpp"
#include "coweight/burnside.hpp"
#include "coweight/enumerate.hpp"
#include "coweight/simplex.hpp"

namespace coweight {

enum class Relation { isometry, proper, none };
enum class Object { sublattice, simplex };
enum class Method { orbit, burnside, both };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::isometry: return "isometry";
    case Relation::proper: return "proper";
    case Relation::none: return "none";
  }
  return "?";
}

inline std::string_view to_string(Object o) { return o == Object::sublattice ? "sublattice" : "simplex"; }

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::orbit: return "orbit";
    case Method::burnside: return "burnside";
    case Method::both: return "both";
  }
  return "?";
}

/// Acting group for sublattices (left action): the coweight group, its
/// determinant-one subgroup, or the trivial group.
inline AutGroup group_for(int n, Relation r) {
  switch (r) {
    case Relation::isometry: return coweight_group(n);
    case Relation::proper: return proper_subgroup(coweight_group(n));
    case Relation::none: return trivial_group(n);
  }
  throw std::invalid_argument("unknown relation");
}

/// Acting group for simplices (right action): the transpose of group_for.
inline AutGroup simplex_group_for(int n, Relation r) { return transpose_group(group_for(n, r)); }

/// beta / beta+ (sublattice) or tau / tau+ (simplex). Method::both computes
/// both routes and throws internal_error when they disagree.
inline std::uint64_t compute_count(int n, std::int64_t k, Object object, Relation relation, Method method,
                                   unsigned workers = 1) {
  std::optional<std::uint64_t> orbit, burn;
  if (object == Object::sublattice) {
    const auto g = group_for(n, relation);
    if (method != Method::burnside) orbit = count_classes(n, k, g, workers);
    if (method != Method::orbit) burn = burnside_count(g, n, k, workers);
  } else {
    const auto g = simplex_group_for(n, relation);
    if (method != Method::burnside) orbit = classify_simplices(n, k, g, workers).count();
    if (method != Method::orbit) burn = simplex_burnside_count(g, n, k, workers);
  }
  if (orbit && burn && *orbit != *burn)
    throw internal_error("orbit count " + std::to_string(*orbit) + " disagrees with Burnside count " +
                         std::to_string(*burn) + " at n=" + std::to_string(n) + ", k=" + std::to_string(k));
  return orbit ? *orbit : *burn;
}

struct CountRow {
  int n = 0;
  std::int64_t k = 0;
  Relation relation = Relation::isometry;
  Object object = Object::sublattice;
  Method method = Method::orbit;
  std::uint64_t count = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

class CountTable {
 public:
  void add(CountRow row) { rows_.push_back(row); }
  const std::vector<CountRow>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }

  /// Fills k in [kmin, kmax] for one (n, object, relation, method).
  static CountTable compute(int n, std::int64_t kmin, std::int64_t kmax, Object object, Relation relation,
                            Method method, unsigned workers = 1) {
    CountTable t;
    for (std::int64_t k = kmin; k <= kmax; ++k)
      t.add({n, k, relation, object, method, compute_count(n, k, object, relation, method, workers)});
    return t;
  }

  /// "k count" lines, LF-terminated.
  std::string to_bfile() const {
    std::ostringstream os;
    for (const auto& r : rows_) os << r.k << ' ' << r.count << '\n';
    return os.str();
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "n,k,relation,object,method,count\n";
    for (const auto& r : rows_)
      os << r.n << ',' << r.k << ',' << to_string(r.relation) << ',' << to_string(r.object) << ','
         << to_string(r.method) << ',' << r.count << '\n';
    return os.str();
  }

  /// Aligned columns; a single row prints just the count.
  std::string to_table() const {
    std::ostringstream os;
    if (rows_.size() == 1) {
      os << rows_.front().count << '\n';
      return os.str();
    }
    os << std::left << std::setw(4) << "n" << std::setw(8) << "k" << std::setw(10) << "relation"
       << std::setw(12) << "object" << std::setw(10) << "method" << "count\n";
    for (const auto& r : rows_)
      os << std::setw(4) << r.n << std::setw(8) << r.k << std::setw(10) << to_string(r.relation)
         << std::setw(12) << to_string(r.object) << std::setw(10) << to_string(r.method) << r.count << '\n';
    return os.str();
  }

 private:
  std::vector<CountRow> rows_;
};

}  // namespace coweight

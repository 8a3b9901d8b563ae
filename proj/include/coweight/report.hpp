/**
 * JSON documents produced by the command-line tool:
 *
 * class list:
 *   {"n": 2, "k": 6, "relation": "proper", "object": "sublattice",
 *    "classes": [[[1,0],[0,6]], ...]}          (row arrays, sorted keys)
 *
 * count table:
 *   [{"n":..,"k":..,"relation":..,"object":..,"method":..,"count":..}, ...]
 *
 * verify report:
 *   {"n":..,"kmin":..,"kmax":..,"passed":bool,
 *    "results":[{"k":..,"beta":..,"beta_plus":..,"tau":..,"tau_plus":..,
 *                "bijection":bool,"dual_isometry":bool,"dual_proper":bool,
 *                "burnside_isometry":bool,"burnside_proper":bool,
 *                "counterexamples":[[M1,M2],...]}, ...]}
 */
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coweight/burnside.hpp"
#include "coweight/count_table.hpp"
#include "coweight/duality.hpp"
#include "coweight/enumerate.hpp"
#include "coweight/simplex.hpp"

namespace coweight {

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix JSON must be a non-empty array");
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != m.dim())
      throw std::invalid_argument("matrix JSON must be square");
    for (int j = 0; j < m.dim(); ++j) m(i, j) = row.at(j).get<std::int64_t>();
  }
  return m;
}

struct ClassList {
  int n = 0;
  std::int64_t k = 0;
  Relation relation = Relation::isometry;
  Object object = Object::sublattice;
  std::vector<IntMatrix> classes;

  friend bool operator==(const ClassList&, const ClassList&) = default;
};

inline ClassList make_class_list(int n, std::int64_t k, Object object, Relation relation, unsigned workers = 1) {
  const auto c = object == Object::sublattice ? classify_sublattices(n, k, group_for(n, relation), workers)
                                              : classify_simplices(n, k, simplex_group_for(n, relation), workers);
  ClassList out{n, k, relation, object, {}};
  for (const auto& cls : c.classes) out.classes.push_back(cls.key.canonical);
  return out;
}

inline nlohmann::json to_json(const ClassList& l) {
  nlohmann::json j;
  j["n"] = l.n;
  j["k"] = l.k;
  j["relation"] = std::string(to_string(l.relation));
  j["object"] = std::string(to_string(l.object));
  auto arr = nlohmann::json::array();
  for (const auto& m : l.classes) arr.push_back(matrix_to_json(m));
  j["classes"] = std::move(arr);
  return j;
}

inline Relation parse_relation(const std::string& s) {
  if (s == "isometry") return Relation::isometry;
  if (s == "proper") return Relation::proper;
  if (s == "none") return Relation::none;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

inline Object parse_object(const std::string& s) {
  if (s == "sublattice") return Object::sublattice;
  if (s == "simplex") return Object::simplex;
  throw std::invalid_argument("unknown object '" + s + "'");
}

inline ClassList class_list_from_json(const nlohmann::json& j) {
  ClassList l;
  l.n = j.at("n").get<int>();
  l.k = j.at("k").get<std::int64_t>();
  l.relation = parse_relation(j.at("relation").get<std::string>());
  l.object = parse_object(j.at("object").get<std::string>());
  for (const auto& m : j.at("classes")) l.classes.push_back(matrix_from_json(m));
  return l;
}

inline nlohmann::json to_json(const CountTable& t) {
  auto arr = nlohmann::json::array();
  for (const auto& r : t.rows())
    arr.push_back({{"n", r.n},
                   {"k", r.k},
                   {"relation", std::string(to_string(r.relation))},
                   {"object", std::string(to_string(r.object))},
                   {"method", std::string(to_string(r.method))},
                   {"count", r.count}});
  return arr;
}

struct VerifyEntry {
  BijectionReport bijection;
  DualReport dual_isometry;
  DualReport dual_proper;
  bool burnside_isometry = false;  // orbit count == Burnside count
  bool burnside_proper = false;

  bool passed() const noexcept {
    return bijection.passed() && dual_isometry.passed() && dual_proper.passed() && burnside_isometry &&
           burnside_proper;
  }
};

struct VerifyReport {
  int n = 0;
  std::int64_t kmin = 0, kmax = 0;
  std::vector<VerifyEntry> entries;

  bool passed() const noexcept {
    for (const auto& e : entries)
      if (!e.passed()) return false;
    return true;
  }
};

/// Bijection, duality and orbit-vs-Burnside checks for every k in range.
inline VerifyReport run_verify(int n, std::int64_t kmin, std::int64_t kmax, unsigned workers = 1) {
  VerifyReport rep{n, kmin, kmax, {}};
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    VerifyEntry e;
    e.bijection = verify_bijection(n, k, workers);
    e.dual_isometry = verify_dual_counts(n, k, Relation::isometry, workers);
    e.dual_proper = verify_dual_counts(n, k, Relation::proper, workers);
    // the duality check already ran Burnside on the same groups
    e.burnside_isometry = e.dual_isometry.burnside == e.bijection.beta;
    e.burnside_proper = e.dual_proper.burnside == e.bijection.beta_plus;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["kmin"] = r.kmin;
  j["kmax"] = r.kmax;
  j["passed"] = r.passed();
  auto results = nlohmann::json::array();
  for (const auto& e : r.entries) {
    auto ce = nlohmann::json::array();
    for (const auto& [a, b] : e.bijection.counterexamples) ce.push_back({matrix_to_json(a), matrix_to_json(b)});
    results.push_back({{"k", e.bijection.k},
                       {"beta", e.bijection.beta},
                       {"beta_plus", e.bijection.beta_plus},
                       {"tau", e.bijection.tau},
                       {"tau_plus", e.bijection.tau_plus},
                       {"bijection", e.bijection.passed()},
                       {"dual_isometry", e.dual_isometry.passed()},
                       {"dual_proper", e.dual_proper.passed()},
                       {"burnside_isometry", e.burnside_isometry},
                       {"burnside_proper", e.burnside_proper},
                       {"passed", e.passed()},
                       {"counterexamples", std::move(ce)}});
  }
  j["results"] = std::move(results);
  return j;
}

inline std::string summary(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    const auto& b = e.bijection;
    os << "n=" << r.n << " k=" << b.k << "  beta=" << b.beta << " tau=" << b.tau << "  beta+=" << b.beta_plus
       << " tau+=" << b.tau_plus << "  bijection " << (b.passed() ? "ok" : "FAIL") << "  dual "
       << (e.dual_isometry.passed() && e.dual_proper.passed() ? "ok" : "FAIL") << "  burnside "
       << (e.burnside_isometry && e.burnside_proper ? "ok" : "FAIL") << '\n';
  }
  os << (r.passed() ? "all checks passed" : "VERIFICATION FAILED") << " (n=" << r.n << ", k=" << r.kmin << ".."
     << r.kmax << ")\n";
  return os.str();
}

}  // namespace coweight

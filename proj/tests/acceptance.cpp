// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact integer equalities.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coweight/coweight.hpp"
#include "coweight/report.hpp"
#include "test_support.hpp"

using namespace coweight;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (detail.size() < 2000) detail += (detail.empty() ? "" : "; ") + why;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string kv(int n, std::int64_t k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

// 1. Index-6 classification in the hexagonal lattice.
Outcome hexagonal_index_six() {
  Outcome o;
  const auto g = coweight_group(2);
  const auto beta = count_classes(2, 6, g);
  const auto beta_plus = count_classes(2, 6, proper_subgroup(g));
  const auto t = tau(2, 6, false);
  const auto tp = tau(2, 6, true);
  if (beta != 3) o.fail("beta_{2,6}=" + std::to_string(beta));
  if (beta_plus != 4) o.fail("beta+_{2,6}=" + std::to_string(beta_plus));
  if (t != 3) o.fail("tau_{2,6}=" + std::to_string(t));
  if (tp != 4) o.fail("tau+_{2,6}=" + std::to_string(tp));
  if (o.pass) o.detail = "beta=tau=3, beta+=tau+=4";
  return o;
}

// 2. Sublattice pipeline vs simplex pipeline.
Outcome bijection_machine_check() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::pair<int, std::int64_t>> ranges{{2, 60}, {3, 30}, {4, 12}};
  std::size_t checked = 0;
  for (const auto& [n, kmax] : ranges)
    for (std::int64_t k = 1; k <= kmax; ++k) {
      const auto rep = verify_bijection(n, k, default_workers());
      ++checked;
      if (!rep.passed())
        o.fail(kv(n, k) + " beta=" + std::to_string(rep.beta) + " tau=" + std::to_string(rep.tau) +
               " beta+=" + std::to_string(rep.beta_plus) + " tau+=" + std::to_string(rep.tau_plus));
    }
  const double secs = seconds_since(t0);
  if (secs > 300.0) o.fail("runtime " + std::to_string(secs) + " s exceeds 300 s");
  if (o.pass) o.detail = std::to_string(checked) + " (n,k) pairs, " + std::to_string(secs) + " s";
  return o;
}

// 3. Orbit counting vs Burnside averaging.
Outcome orbit_vs_burnside() {
  Outcome o;
  const std::vector<std::pair<int, std::int64_t>> ranges{{2, 40}, {3, 40}, {4, 10}};
  std::size_t checked = 0;
  for (const auto& [n, kmax] : ranges) {
    const auto g = coweight_group(n);
    const auto gp = proper_subgroup(g);
    for (std::int64_t k = 1; k <= kmax; ++k)
      for (const auto* grp : {&g, &gp}) {
        try {
          const auto orbit = count_classes(n, k, *grp, default_workers());
          const auto burn = burnside_count(*grp, n, k, default_workers());
          ++checked;
          if (orbit != burn)
            o.fail(kv(n, k) + " orbit=" + std::to_string(orbit) + " burnside=" + std::to_string(burn));
        } catch (const internal_error& e) {
          o.fail(kv(n, k) + " " + e.what());
        }
      }
  }
  if (o.pass) o.detail = std::to_string(checked) + " counts agree, all averages integral";
  return o;
}

// 4. Lattice vs dual lattice (contragredient action).
Outcome dual_lattice_counts() {
  Outcome o;
  std::size_t checked = 0;
  std::string fcc_bcc;
  for (int n = 2; n <= 4; ++n)
    for (std::int64_t k = 1; k <= 20; ++k)
      for (auto rel : {Relation::isometry, Relation::proper}) {
        const auto rep = verify_dual_counts(n, k, rel, default_workers());
        ++checked;
        if (!rep.passed())
          o.fail(kv(n, k) + " " + std::string(to_string(rel)) + " count=" + std::to_string(rep.count) +
                 " dual=" + std::to_string(rep.dual_count));
        if (n == 3 && rel == Relation::isometry && k <= 8)
          fcc_bcc += (fcc_bcc.empty() ? "" : ",") + std::to_string(rep.count);
      }
  if (o.pass) o.detail = std::to_string(checked) + " cases; n=3 isometry k=1..8: " + fcc_bcc;
  return o;
}

// 5. Automorphism group structure.
Outcome group_structure() {
  Outcome o;
  std::size_t fact = 2;
  for (int n = 2; n <= 6; ++n) {
    fact *= static_cast<std::size_t>(n + 1);  // (n+1)!
    const auto g = coweight_group(n);
    if (g.order() != 2 * fact) o.fail("n=" + std::to_string(n) + " |G|=" + std::to_string(g.order()));
    const auto gp = proper_subgroup(g);
    if (gp.order() != fact) o.fail("n=" + std::to_string(n) + " |G+|=" + std::to_string(gp.order()));
    if (!g.contains(negate(IntMatrix::identity(n)))) o.fail("n=" + std::to_string(n) + " -I missing");
    for (const auto& r : g)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (r(i, j) < -1 || r(i, j) > 1) {
            o.fail("n=" + std::to_string(n) + " entry outside {-1,0,1}");
            i = j = n;
          }
  }
  if (o.pass) o.detail = "n=2..6: |G|=2(n+1)!, |G+|=(n+1)!, -I in G, entries in {-1,0,1}";
  return o;
}

// 6. HNF census against the divisor recurrence.
Outcome hnf_census() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (std::int64_t k = 1; k <= 200; ++k) {
      const auto streamed = for_each_hnf(n, k, [](const HnfBasis&) {});
      const auto expected = oracle::subgroup_count(n, k);
      if (streamed != expected)
        o.fail(kv(n, k) + " stream=" + std::to_string(streamed) + " recurrence=" + std::to_string(expected));
    }
  if (enumerate_hnf(2, 6).size() != 12) o.fail("f_2(6) != 12");
  if (enumerate_hnf(3, 2).size() != 7) o.fail("f_3(2) != 7");
  if (o.pass) o.detail = "n<=4, k<=200; f_2(6)=12, f_3(2)=7";
  return o;
}

// 7. Reference b-files under testdata/.
struct Reference {
  std::string id;
  int n;
  Object object;
  Relation relation;
  Method method;
  std::int64_t kcap;  // largest k compared (time budget)
};

std::map<std::int64_t, std::string> read_bfile(const std::filesystem::path& p) {
  std::map<std::int64_t, std::string> out;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::int64_t k;
    std::string v;
    if (ls >> k >> v) out[k] = v;
  }
  return out;
}

Outcome reference_sequences() {
  Outcome o;
  const std::vector<Reference> refs{
      {"A003051", 2, Object::sublattice, Relation::isometry, Method::orbit, 1000},
      {"A145394", 2, Object::sublattice, Relation::proper, Method::orbit, 1000},
      {"A159842", 3, Object::sublattice, Relation::isometry, Method::orbit, 150},
      {"A173824", 4, Object::simplex, Relation::isometry, Method::burnside, 60},
      {"A173877", 5, Object::simplex, Relation::isometry, Method::burnside, 30},
      {"A173878", 6, Object::simplex, Relation::isometry, Method::burnside, 16},
  };
  const std::filesystem::path dir = COWEIGHT_TESTDATA_DIR;
  std::vector<std::string> missing;
  std::string compared;
  for (const auto& ref : refs) {
    const auto path = dir / (ref.id + ".txt");
    if (!std::filesystem::exists(path)) {
      missing.push_back(ref.id);
      continue;
    }
    const auto data = read_bfile(path);
    std::int64_t upto = 0;
    for (const auto& [k, v] : data) {
      if (k < 1) continue;
      if (k > ref.kcap) break;
      const auto ours = compute_count(ref.n, k, ref.object, ref.relation, ref.method, default_workers());
      if (std::to_string(ours) != v) o.fail(ref.id + " k=" + std::to_string(k) + " ours=" + std::to_string(ours) +
                                            " reference=" + v);
      upto = k;
    }
    if (upto == 0) o.fail(ref.id + " has no usable terms");
    compared += (compared.empty() ? "" : ", ") + ref.id + " k<=" + std::to_string(upto);
  }
  if (!missing.empty()) {
    std::string ids;
    for (const auto& m : missing) ids += (ids.empty() ? "" : " ") + m;
    o.fail("reference b-files not present in " + dir.string() + ": " + ids);
  }
  if (o.pass) o.detail = compared;
  return o;
}

// 8. Output bytes independent of worker count.
std::string capture(const std::string& args) {
  const std::string cmd = std::string(COWEIGHT_CLI_PATH) + " " + args;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  if (pclose(p) != 0) out += "<nonzero exit>";
  return out;
}

Outcome determinism() {
  Outcome o;
  const unsigned maxw = std::max(4u, default_workers());
  const std::vector<unsigned> workers{1, 2, maxw};
  const std::vector<std::string> cli_runs{
      "list --n 2 --k 60 --relation proper", "list --n 3 --k 30 --object simplex", "list --n 4 --k 12",
      "bfile --n 2 --kmax 40 --relation isometry", "bfile --n 3 --kmax 20 --object simplex --relation proper"};
  for (const auto& args : cli_runs) {
    std::string first;
    for (unsigned w : workers) {
      const auto out = capture(args + " --workers " + std::to_string(w));
      if (w == 1) first = out;
      else if (out != first) o.fail("'" + args + "' differs at --workers " + std::to_string(w));
    }
  }
  for (int rep = 0; rep < 2; ++rep)
    for (unsigned w : workers) {
      const auto a = to_json(make_class_list(3, 24, Object::sublattice, Relation::isometry, w)).dump();
      const auto b = to_json(make_class_list(3, 24, Object::sublattice, Relation::isometry, 1)).dump();
      if (a != b) o.fail("in-process list differs at workers=" + std::to_string(w));
    }
  if (o.pass) o.detail = "workers 1, 2, " + std::to_string(maxw) + "; repeated runs identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 hexagonal index-6 classification", hexagonal_index_six},
      {"2 bijection: beta=tau, beta+=tau+", bijection_machine_check},
      {"3 orbit counting = Burnside", orbit_vs_burnside},
      {"4 lattice vs dual counts", dual_lattice_counts},
      {"5 automorphism group structure", group_structure},
      {"6 HNF census", hnf_census},
      {"7 reference b-files", reference_sequences},
      {"8 determinism across workers", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << secs << ") " << o.detail << std::endl;
    failures += !o.pass;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criterion/criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

// coweight: class counts of sublattices of A*_n and of lattice simplices.
//
//   coweight count  --n 2 --k 6 --relation isometry
//   coweight list   --n 2 --k 6 --relation proper
//   coweight verify --n 3 --kmax 12 [--output report.json]
//   coweight bfile  --n 2 --kmax 100 --relation proper
//
// Exit status: 0 success, 1 computational failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coweight/coweight.hpp"
#include "coweight/report.hpp"

namespace {

using namespace coweight;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  std::optional<std::int64_t> k, kmin, kmax;
  std::string object_name = "sublattice";
  std::string relation_name = "isometry";
  std::string method_name = "orbit";
  Object object = Object::sublattice;
  Relation relation = Relation::isometry;
  Method method = Method::orbit;
  std::string format;
  unsigned workers = default_workers();
  std::string output;

  std::pair<std::int64_t, std::int64_t> range() const {
    if (k && (kmin || kmax)) throw UsageError("--k cannot be combined with --kmin/--kmax");
    if (k) return {*k, *k};
    if (!kmax) throw UsageError("either --k or --kmax is required");
    const auto lo = kmin.value_or(1);
    if (lo < 1) throw UsageError("--kmin must be >= 1");
    if (lo > *kmax) throw UsageError("empty k range");
    return {lo, *kmax};
  }

  void resolve() {
    object = parse_object(object_name);
    relation = parse_relation(relation_name);
    method = method_name == "burnside" ? Method::burnside : method_name == "both" ? Method::both : Method::orbit;
    if (n < 2 || n > 6) throw UsageError("--n must be in 2..6");
    if (k && *k < 1) throw UsageError("--k must be >= 1");
    if (workers < 1) throw UsageError("--workers must be >= 1");
  }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "lattice dimension (2..6)")->required();
  cmd->add_option("--k", cfg.k, "index / normalized volume");
  cmd->add_option("--kmin", cfg.kmin, "first k of a range (default 1)");
  cmd->add_option("--kmax", cfg.kmax, "last k of a range");
  cmd->add_option("--workers", cfg.workers, "worker threads (default: hardware concurrency)");
  cmd->add_option("--output", cfg.output, "write the result to FILE instead of stdout");
}

void add_classification(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--object", cfg.object_name, "sublattice | simplex")
      ->check(CLI::IsMember({"sublattice", "simplex"}));
  cmd->add_option("--relation", cfg.relation_name, "isometry | proper | none")
      ->check(CLI::IsMember({"isometry", "proper", "none"}));
}

void add_method(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--method", cfg.method_name, "orbit | burnside | both")
      ->check(CLI::IsMember({"orbit", "burnside", "both"}));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  out << text;
}

int cmd_count(const RunConfig& cfg) {
  const auto [lo, hi] = cfg.range();
  const auto table = CountTable::compute(cfg.n, lo, hi, cfg.object, cfg.relation, cfg.method, cfg.workers);
  const std::string fmt = cfg.format.empty() ? "table" : cfg.format;
  if (fmt == "table") emit(cfg, table.to_table());
  else if (fmt == "csv") emit(cfg, table.to_csv());
  else if (fmt == "json") emit(cfg, to_json(table).dump(2) + "\n");
  else if (fmt == "bfile") emit(cfg, table.to_bfile());
  else throw UsageError("unknown --format '" + fmt + "'");
  return 0;
}

int cmd_list(const RunConfig& cfg) {
  if (!cfg.k) throw UsageError("list needs a single --k");
  if (cfg.kmin || cfg.kmax) throw UsageError("list takes --k, not a range");
  const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
  const auto list = make_class_list(cfg.n, *cfg.k, cfg.object, cfg.relation, cfg.workers);
  if (fmt == "json") {
    emit(cfg, to_json(list).dump() + "\n");
  } else if (fmt == "table") {
    std::ostringstream os;
    for (const auto& m : list.classes) os << m << '\n';
    emit(cfg, os.str());
  } else {
    throw UsageError("list supports --format json or table");
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const auto [lo, hi] = cfg.range();
  const std::string fmt = cfg.format.empty() ? "table" : cfg.format;
  if (fmt != "table" && fmt != "json") throw UsageError("verify supports --format table or json");
  const auto report = run_verify(cfg.n, lo, hi, cfg.workers);
  const auto json = to_json(report).dump(2) + "\n";
  if (!cfg.output.empty()) emit(cfg, json);
  std::cout << (fmt == "json" ? json : summary(report));
  return report.passed() ? 0 : kExitFailure;
}

int cmd_bfile(const RunConfig& cfg) {
  if (cfg.k) throw UsageError("bfile takes --kmax (and optionally --kmin), not --k");
  const auto [lo, hi] = cfg.range();
  const auto table = CountTable::compute(cfg.n, lo, hi, cfg.object, cfg.relation, cfg.method, cfg.workers);
  emit(cfg, table.to_bfile());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublattices of the coweight lattice A*_n and lattice simplices, up to symmetry"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* count = app.add_subcommand("count", "count equivalence classes");
  add_common(count, cfg);
  add_classification(count, cfg);
  add_method(count, cfg);
  count->add_option("--format", cfg.format, "table | csv | json | bfile");

  auto* list = app.add_subcommand("list", "list canonical class representatives as JSON");
  add_common(list, cfg);
  add_classification(list, cfg);
  list->add_option("--format", cfg.format, "json | table");

  auto* verify = app.add_subcommand("verify", "check the bijection, duality and Burnside agreement");
  add_common(verify, cfg);
  verify->add_option("--format", cfg.format, "table | json");

  auto* bfile = app.add_subcommand("bfile", "export 'k count' lines for k = kmin..kmax");
  add_common(bfile, cfg);
  add_classification(bfile, cfg);
  add_method(bfile, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.resolve();
    if (count->parsed()) return cmd_count(cfg);
    if (list->parsed()) return cmd_list(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (bfile->parsed()) return cmd_bfile(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

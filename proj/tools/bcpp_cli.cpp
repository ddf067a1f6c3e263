// bcpp: solve, verify, generate and benchmark two-bar chart packings.
//
// Exit codes: 0 success, 1 infeasible packing or violated bound, 2 usage or
// input error.

#include "bcpp/bcpp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const bcpp::Json& j) { return j.dump(2) + "\n"; }

// Every packing leaves the tool only after an exact feasibility check.
void ensure_feasible(const bcpp::Instance& instance, const bcpp::Packing& packing) {
  if (!bcpp::check_feasible(instance, packing).feasible())
    throw std::logic_error("internal error: solver produced an infeasible packing");
}

std::size_t checked_limit(std::optional<std::size_t> requested, std::size_t fallback, bool force) {
  const std::size_t limit = requested.value_or(fallback);
  if (limit > 2 * fallback && !force)
    throw UsageError("limit " + std::to_string(limit) + " exceeds twice the default (" +
                     std::to_string(fallback) + "); pass --force to run anyway");
  return limit;
}

struct SolveOptions {
  std::string algo;
  std::string instance = "-";
  std::string out = "-";
  std::string key = "lex";
  bool compact = false;
  bool force = false;
  std::optional<std::size_t> limit;
};

int run_solve(const SolveOptions& o) {
  const auto instance = bcpp::load_instance(read_input(o.instance));
  const std::size_t n = instance.size();

  if (o.algo == "galo") {
    const auto key = o.key == "maxmin" ? bcpp::LexKey::larger_then_smaller
                                       : bcpp::LexKey::first_then_second;
    const auto packing = bcpp::galo_pack(instance, key);
    ensure_feasible(instance, packing);
    write_output(o.out, dump(bcpp::to_json(instance, packing)));
    std::cerr << "n=" << n << " length=" << bcpp::packing_length(instance, packing)
              << " lambda=" << bcpp::chain_decomposition(instance, packing).lambda() << "\n";
  } else if (o.algo == "matching") {
    const auto matching = bcpp::max_matching(bcpp::build_graph(instance));
    const auto packing = bcpp::matching_pack(instance, matching, o.compact);
    ensure_feasible(instance, packing);
    write_output(o.out, dump(bcpp::to_json(instance, packing)));
    std::cerr << "n=" << n << " length=" << bcpp::packing_length(instance, packing)
              << " mu=" << matching.mu() << "\n";
  } else if (o.algo == "app") {
    const auto result = bcpp::app_pack(instance);
    ensure_feasible(instance, result.packing);
    write_output(o.out, dump(bcpp::to_json(instance, result.packing)));
    std::cerr << "n=" << n << " length=" << result.length()
              << " winner=" << bcpp::to_string(result.winner) << " L_galo=" << result.galo_length
              << " L_matching=" << result.matching_length << "\n";
  } else if (o.algo == "exact") {
    const auto result =
        bcpp::exact_opt(instance, checked_limit(o.limit, bcpp::kDefaultExactLimit, o.force));
    ensure_feasible(instance, result.witness);
    write_output(o.out, dump(bcpp::to_json(instance, result)));
    std::cerr << "n=" << n << " opt=" << result.opt_length << " k1=" << result.k1
              << " k2=" << result.k2 << "\n";
  } else if (o.algo == "exact-linear") {
    const auto result = bcpp::linearly_ordered_opt(
        instance, checked_limit(o.limit, bcpp::kDefaultLinearLimit, o.force));
    ensure_feasible(instance, result.witness);
    write_output(o.out, dump(bcpp::to_json(instance, result)));
    std::cerr << "n=" << n << " length=" << result.length
              << " lambda=" << result.chains.lambda() << "\n";
  } else {
    throw UsageError("unknown algorithm '" + o.algo + "'");
  }
  return kOk;
}

int run_verify(const std::string& instance_path, const std::string& packing_path) {
  const auto instance = bcpp::load_instance(read_input(instance_path));
  const auto file = bcpp::load_packing(read_input(packing_path));
  bcpp::FeasibilityReport report;
  try {
    report = bcpp::check_feasible(instance, file.packing);
  } catch (const bcpp::PreconditionError& e) {
    std::cout << dump(bcpp::Json{{"feasible", false}, {"error", e.what()}});
    return kViolation;
  }
  auto j = bcpp::to_json(report);
  const std::size_t length = bcpp::packing_length(instance, file.packing);
  j["length"] = length;
  bool ok = report.feasible();
  if (file.declared_length) {
    j["declared_length"] = *file.declared_length;
    ok = ok && *file.declared_length == length;
  }
  std::cout << dump(j);
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-bar chart packing: solvers, exact oracles and verifier"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Pack an instance");
  solve_cmd->add_option("--algo", solve.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"galo", "matching", "app", "exact", "exact-linear"}));
  solve_cmd->add_option("--instance,-i", solve.instance, "Instance file, '-' for stdin");
  solve_cmd->add_option("--out,-o", solve.out, "Output file, '-' for stdout");
  solve_cmd->add_flag("--compact", solve.compact, "Merge adjacent matching blocks when they fit");
  solve_cmd->add_option("--limit", solve.limit, "Oracle size limit");
  solve_cmd->add_flag("--force", solve.force, "Allow limits above twice the default");
  solve_cmd->add_option("--key", solve.key, "Greedy sort key")
      ->check(CLI::IsMember({"lex", "maxmin"}));

  std::string verify_instance;
  std::string verify_packing;
  auto* verify_cmd = app.add_subcommand("verify", "Check a packing for feasibility");
  verify_cmd->add_option("--instance,-i", verify_instance, "Instance file")->required();
  verify_cmd->add_option("--packing,-p", verify_packing, "Packing file")->required();

  std::string gen_family = "all-big";
  std::size_t gen_n = 10;
  std::uint64_t gen_seed = 1;
  std::int64_t gen_granularity = bcpp::kDefaultGranularity;
  std::string gen_out = "-";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--family", gen_family, "all-big | first-big | pairable")
      ->check(CLI::IsMember({"all-big", "first-big", "pairable"}));
  gen_cmd->add_option("--n", gen_n, "Chart count (pair count for pairable)");
  gen_cmd->add_option("--seed", gen_seed, "Seed");
  gen_cmd->add_option("--granularity", gen_granularity, "Heights are k / granularity");
  gen_cmd->add_option("--out,-o", gen_out, "Output file, '-' for stdout");

  std::string ndm_path = "-";
  std::string reduce_out = "-";
  auto* reduce_cmd = app.add_subcommand("reduce", "Map an NDM instance to a packing instance");
  reduce_cmd->add_option("--ndm", ndm_path, "NDM file, '-' for stdin");
  reduce_cmd->add_option("--out,-o", reduce_out, "Output file, '-' for stdout");

  std::optional<std::size_t> certify_limit;
  bool certify_force = false;
  auto* certify_cmd =
      app.add_subcommand("certify", "Check NDM yes-answer against packing optimum <= 3r");
  certify_cmd->add_option("--ndm", ndm_path, "NDM file, '-' for stdin");
  certify_cmd->add_option("--limit", certify_limit, "Exact search size limit");
  certify_cmd->add_flag("--force", certify_force, "Allow limits above twice the default");

  bcpp::BenchConfig bench;
  std::string bench_family = "all-big";
  std::string bench_oracle = "auto";
  std::string bench_out = "-";
  std::optional<std::size_t> bench_limit;
  bool bench_force = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run seeded trials and check approximation bounds");
  bench_cmd->add_option("--family", bench_family, "all-big | first-big | pairable")
      ->check(CLI::IsMember({"all-big", "first-big", "pairable"}));
  bench_cmd->add_option("--n-min", bench.n_min, "Smallest chart count");
  bench_cmd->add_option("--n-max", bench.n_max, "Largest chart count");
  bench_cmd->add_option("--trials", bench.trials, "Number of trials");
  bench_cmd->add_option("--seed", bench.seed, "Seed of the first trial");
  bench_cmd->add_option("--granularity", bench.granularity, "Heights are k / granularity");
  bench_cmd->add_option("--limit", bench_limit, "Oracle size limit");
  bench_cmd->add_option("--oracle", bench_oracle, "auto | exact | linear")
      ->check(CLI::IsMember({"auto", "exact", "linear"}));
  bench_cmd->add_flag("--require-opt", bench.require_opt, "Fail when n exceeds the oracle limit");
  bench_cmd->add_flag("--force", bench_force, "Allow limits above twice the default");
  bench_cmd->add_option("--out,-o", bench_out, "CSV output, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify_instance, verify_packing);
    if (*gen_cmd) {
      const auto instance =
          bcpp::generate(bcpp::parse_family(gen_family),
                         gen_family == "pairable" ? 2 * gen_n : gen_n, gen_seed, gen_granularity);
      write_output(gen_out, dump(bcpp::to_json(instance)));
      return kOk;
    }
    if (*reduce_cmd) {
      const auto instance = bcpp::reduce(bcpp::load_ndm(read_input(ndm_path)));
      write_output(reduce_out, dump(bcpp::to_json(instance)));
      return kOk;
    }
    if (*certify_cmd) {
      const auto ndm = bcpp::load_ndm(read_input(ndm_path));
      const auto report = bcpp::certify_reduction(
          ndm, checked_limit(certify_limit, bcpp::kDefaultExactLimit, certify_force));
      std::cout << dump(bcpp::to_json(report));
      return report.equivalence_holds ? kOk : kViolation;
    }
    if (*bench_cmd) {
      bench.family = bcpp::parse_family(bench_family);
      bench.oracle = bcpp::parse_oracle(bench_oracle);
      if (bench_limit) {
        const std::size_t fallback = bench.oracle == bcpp::OracleKind::exact ||
                                             (bench.oracle == bcpp::OracleKind::automatic &&
                                              bench.family != bcpp::Family::first_big)
                                         ? bcpp::kDefaultExactLimit
                                         : bcpp::kDefaultLinearLimit;
        bench.limit = checked_limit(bench_limit, fallback, bench_force);
      }
      const auto rows = bcpp::run_bench(bench);
      write_output(bench_out, bcpp::to_csv(rows));
      return bcpp::all_bounds_ok(rows) ? kOk : kViolation;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bcpp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bcpp::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

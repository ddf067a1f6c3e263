#ifndef BCPP_BENCH_HPP
#define BCPP_BENCH_HPP

#include "bcpp/app.hpp"
#include "bcpp/exact.hpp"
#include "bcpp/gen.hpp"
#include "bcpp/verify.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bcpp {

enum class OracleKind { automatic, exact, linear };

inline OracleKind parse_oracle(std::string_view s) {
  if (s == "auto") return OracleKind::automatic;
  if (s == "exact") return OracleKind::exact;
  if (s == "linear") return OracleKind::linear;
  throw PreconditionError("unknown oracle '" + std::string(s) + "'");
}

struct BenchConfig {
  Family family = Family::all_big;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::int64_t granularity = kDefaultGranularity;
  /// Oracle size limit; unset means the oracle's own default.
  std::optional<std::size_t> limit;
  OracleKind oracle = OracleKind::automatic;
  /// Fail instead of skipping the oracle when n exceeds the limit.
  bool require_opt = false;
};

struct BenchRow {
  Family family = Family::all_big;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t galo_length = 0;
  std::size_t matching_length = 0;
  std::size_t app_length = 0;
  std::optional<std::size_t> opt;
  std::string opt_kind = "none";
  /// Unset when no oracle ran; false on a bound violation or infeasible output.
  std::optional<bool> bound_ok;
  bool feasible = true;
};

namespace detail {

inline void check_bench_config(const BenchConfig& c) {
  if (c.n_min < 1) throw PreconditionError("bench: n-min must be at least 1");
  if (c.n_max < c.n_min) throw PreconditionError("bench: n-max must be >= n-min");
  if (c.granularity < 2) throw PreconditionError("bench: granularity must be at least 2");
}

}  // namespace detail

/// Trial t uses size n_min + (t mod span) and seed `seed + t`. The oracle
/// is the exact search by default, or the linearly ordered DP for the
/// first-big family (the two coincide there). Exact OPT checks
/// 3 L_app <= 4 OPT + 2, plus L_galo <= OPT + 1 on first-bar-big
/// instances; linear OPT checks L_galo <= OPT + 1.
inline BenchRow run_trial(const BenchConfig& config, std::size_t trial) {
  const std::size_t span = config.n_max - config.n_min + 1;
  BenchRow row;
  row.family = config.family;
  row.seed = config.seed + trial;
  const Instance instance =
      generate(config.family, config.n_min + trial % span, row.seed, config.granularity);
  row.n = instance.size();

  const AppResult app = app_pack(instance);
  for (const Packing* p : {&app.galo, &app.matching, &app.packing})
    row.feasible = row.feasible && check_feasible(instance, *p).feasible();
  row.galo_length = app.galo_length;
  row.matching_length = app.matching_length;
  row.app_length = app.length();

  OracleKind oracle = config.oracle;
  if (oracle == OracleKind::automatic)
    oracle = config.family == Family::first_big ? OracleKind::linear : OracleKind::exact;
  const std::size_t limit =
      config.limit.value_or(oracle == OracleKind::exact ? kDefaultExactLimit : kDefaultLinearLimit);
  if (row.n > limit) {
    if (config.require_opt)
      throw PreconditionError("bench: n = " + std::to_string(row.n) + " exceeds oracle limit " +
                              std::to_string(limit));
    if (!row.feasible) row.bound_ok = false;
    return row;
  }

  const auto length = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  bool ok = row.feasible;
  if (oracle == OracleKind::exact) {
    const ExactResult exact = exact_opt(instance, limit);
    ok = ok && check_feasible(instance, exact.witness).feasible();
    row.opt = exact.opt_length;
    row.opt_kind = "exact";
    ok = ok && check_bound(length(row.app_length), length(*row.opt), Bound::four_thirds);
    if (instance.instance_class() == InstanceClass::first_bar_big)
      ok = ok && check_bound(length(row.galo_length), length(*row.opt), Bound::opt_plus_one);
  } else {
    const LinearResult linear = linearly_ordered_opt(instance, limit);
    ok = ok && check_feasible(instance, linear.witness).feasible();
    row.opt = linear.length;
    row.opt_kind = "linear";
    ok = ok && check_bound(length(row.galo_length), length(*row.opt), Bound::opt_plus_one);
  }
  row.bound_ok = ok;
  return row;
}

inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
  detail::check_bench_config(config);
  std::vector<BenchRow> rows;
  rows.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) rows.push_back(run_trial(config, t));
  return rows;
}

inline bool all_bounds_ok(const std::vector<BenchRow>& rows) {
  for (const auto& r : rows)
    if (r.bound_ok == false || !r.feasible) return false;
  return true;
}

inline constexpr std::string_view kBenchHeader =
    "family,n,seed,L_galo,L_matching,L_app,OPT,opt_kind,bound_ok";

inline std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.family) << ',' << r.n << ',' << r.seed << ',' << r.galo_length << ','
        << r.matching_length << ',' << r.app_length << ',';
    if (r.opt) out << *r.opt;
    out << ',' << r.opt_kind << ',';
    if (r.bound_ok)
      out << (*r.bound_ok ? "true" : "false");
    else
      out << "na";
    out << '\n';
  }
  return out.str();
}

}  // namespace bcpp

#endif  // BCPP_BENCH_HPP

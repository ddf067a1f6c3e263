#include "bcpp/bench.hpp"

#include <gtest/gtest.h>

namespace bcpp {
namespace {

TEST(Bench, ZeroTrialsGiveHeaderOnly) {
  BenchConfig c;
  c.trials = 0;
  const auto rows = run_bench(c);
  EXPECT_TRUE(rows.empty());
  EXPECT_EQ(to_csv(rows), std::string(kBenchHeader) + "\n");
  EXPECT_TRUE(all_bounds_ok(rows));
}

TEST(Bench, SmallRunsSatisfyBounds) {
  for (auto family : {Family::all_big, Family::first_big, Family::pairable}) {
    BenchConfig c;
    c.family = family;
    c.n_min = 2;
    c.n_max = 8;
    c.trials = 30;
    c.seed = 77;
    c.granularity = 20;
    const auto rows = run_bench(c);
    ASSERT_EQ(rows.size(), 30u);
    EXPECT_TRUE(all_bounds_ok(rows));
    for (const auto& r : rows) {
      ASSERT_TRUE(r.opt.has_value());
      EXPECT_EQ(r.opt_kind, family == Family::first_big ? "linear" : "exact");
      EXPECT_LE(r.app_length, r.galo_length);
      EXPECT_LE(r.app_length, r.matching_length);
    }
  }
}

TEST(Bench, DeterministicCsv) {
  BenchConfig c;
  c.trials = 10;
  c.n_max = 6;
  EXPECT_EQ(to_csv(run_bench(c)), to_csv(run_bench(c)));
}

TEST(Bench, SkipsOracleAboveLimitUnlessRequired) {
  BenchConfig c;
  c.n_min = 12;
  c.n_max = 12;
  c.trials = 2;
  const auto rows = run_bench(c);
  EXPECT_FALSE(rows[0].opt.has_value());
  EXPECT_EQ(rows[0].opt_kind, "none");
  EXPECT_NE(to_csv(rows).find(",,none,na"), std::string::npos);
  c.require_opt = true;
  EXPECT_THROW(run_bench(c), PreconditionError);
}

TEST(Bench, MalformedConfig) {
  BenchConfig c;
  c.n_min = 5;
  c.n_max = 4;
  EXPECT_THROW(run_bench(c), PreconditionError);
  c = BenchConfig{};
  c.n_min = 0;
  EXPECT_THROW(run_bench(c), PreconditionError);
  EXPECT_THROW(parse_family("medium"), PreconditionError);
  EXPECT_THROW(parse_oracle("guess"), PreconditionError);
}

TEST(Bench, LinearOracleChecksGreedyOnAllBig) {
  BenchConfig c;
  c.oracle = OracleKind::linear;
  c.n_max = 9;
  c.trials = 20;
  const auto rows = run_bench(c);
  for (const auto& r : rows) {
    EXPECT_EQ(r.opt_kind, "linear");
    EXPECT_LE(r.galo_length, *r.opt + 1);
  }
}

}  // namespace
}  // namespace bcpp

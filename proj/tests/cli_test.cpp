#include "bcpp/bench.hpp"
#include "bcpp/io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(BCPP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bcpp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, EverySolverOutputVerifies) {
  ASSERT_EQ(run("gen --family all-big --n 8 --seed 3 --granularity 50 -o " + path("i.json")).exit_code, 0);
  for (const char* algo : {"galo", "matching", "app", "exact", "exact-linear"}) {
    const auto solved = run(std::string("solve --algo ") + algo + " -i " + path("i.json") + " -o " + path("p.json"));
    ASSERT_EQ(solved.exit_code, 0) << algo;
    const auto verified = run("verify -i " + path("i.json") + " -p " + path("p.json"));
    EXPECT_EQ(verified.exit_code, 0) << algo;
    EXPECT_TRUE(bcpp::Json::parse(verified.out)["feasible"].get<bool>());
  }
}

TEST_F(Cli, ExactReportsPairCounts) {
  const auto inst = write("i.json", R"({"charts":[{"a":"0.6","b":"0.4"},{"a":"0.4","b":"0.6"}]})");
  const auto r = run("solve --algo exact -i " + inst);
  ASSERT_EQ(r.exit_code, 0);
  const auto j = bcpp::Json::parse(r.out);
  EXPECT_EQ(j["opt_length"], 2);
  EXPECT_EQ(j["k2"], 1);
  EXPECT_EQ(j["k1"], 0);
  EXPECT_EQ(j["length"], 2);
}

TEST_F(Cli, ReadsStdin) {
  const auto inst = write("i.json", R"({"charts":[{"a":"0.9","b":"0.2"},{"a":"0.7","b":"0.5"},{"a":"0.6","b":"0.1"}]})");
  const auto r = run("solve --algo galo < " + inst);
  ASSERT_EQ(r.exit_code, 0);
  const auto j = bcpp::Json::parse(r.out);
  EXPECT_EQ(j["assignment"], bcpp::Json({1, 2, 4}));
  EXPECT_EQ(j["length"], 5);
}

TEST_F(Cli, VerifyFlagsInfeasiblePacking) {
  const auto inst = write("i.json", R"({"charts":[{"a":"0.6","b":"0.5"},{"a":"0.6","b":"0.1"}]})");
  const auto bad = write("p.json", R"({"assignment":[1,2],"length":3})");
  const auto r = run("verify -i " + inst + " -p " + bad);
  EXPECT_EQ(r.exit_code, 1);
  const auto j = bcpp::Json::parse(r.out);
  EXPECT_FALSE(j["feasible"].get<bool>());
  EXPECT_EQ(j["violations"][0]["load"], "11/10");
  const auto range = write("q.json", R"({"assignment":[1,9]})");
  EXPECT_EQ(run("verify -i " + inst + " -p " + range).exit_code, 1);
  const auto wrong_length = write("w.json", R"({"assignment":[1,3],"length":3})");
  EXPECT_EQ(run("verify -i " + inst + " -p " + wrong_length).exit_code, 1);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  const auto general = write("g.json", R"({"charts":[{"a":"0.4","b":"0.4"}]})");
  EXPECT_EQ(run("solve --algo app -i " + general).exit_code, 2);
  EXPECT_EQ(run("solve --algo exact -i " + general).exit_code, 2);
  EXPECT_EQ(run("solve --algo nonsense -i " + general).exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("solve --algo galo -i " + path("missing.json")).exit_code, 2);
  const auto big = write("b.json", R"({"charts":[{"a":"0.9","b":"0.4"}]})");
  EXPECT_EQ(run("solve --algo exact --limit 25 -i " + big).exit_code, 2);
  EXPECT_EQ(run("solve --algo exact --limit 25 --force -i " + big).exit_code, 0);
  EXPECT_EQ(run("bench --n-min 4 --n-max 3").exit_code, 2);
  EXPECT_EQ(run("bench --n-min 12 --n-max 12 --trials 1 --require-opt").exit_code, 2);
}

TEST_F(Cli, ReduceAndCertify) {
  const auto ndm = write("n.json", R"({"x":[1],"y":[1],"z":[1],"b":3})");
  const auto reduced = run("reduce --ndm " + ndm);
  ASSERT_EQ(reduced.exit_code, 0);
  const auto inst = bcpp::load_instance(reduced.out);
  EXPECT_EQ(inst[2].b, bcpp::Rational(11, 12));
  const auto cert = run("certify --ndm " + ndm);
  ASSERT_EQ(cert.exit_code, 0);
  const auto j = bcpp::Json::parse(cert.out);
  EXPECT_TRUE(j["ndm_yes"].get<bool>());
  EXPECT_EQ(j["opt_length"], 3);
  EXPECT_TRUE(j["equivalence_holds"].get<bool>());
  const auto unnormalized = write("u.json", R"({"x":[1],"y":[1],"z":[2],"b":3})");
  EXPECT_EQ(run("certify --ndm " + unnormalized).exit_code, 2);
}

TEST_F(Cli, BenchCsvIsReproducible) {
  const auto first = run("bench --family pairable --n-min 2 --n-max 8 --trials 12 --seed 5");
  const auto second = run("bench --family pairable --n-min 2 --n-max 8 --trials 12 --seed 5");
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out.substr(0, first.out.find('\n')), std::string(bcpp::kBenchHeader));
  const auto zero = run("bench --trials 0");
  EXPECT_EQ(zero.exit_code, 0);
  EXPECT_EQ(zero.out, std::string(bcpp::kBenchHeader) + "\n");
}

TEST_F(Cli, GenIsReproducible) {
  EXPECT_EQ(run("gen --family first-big --n 5 --seed 9").out,
            run("gen --family first-big --n 5 --seed 9").out);
  const auto pairs = bcpp::load_instance(run("gen --family pairable --n 3 --seed 1").out);
  EXPECT_EQ(pairs.size(), 6u);
}

}  // namespace

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "maxdom/io.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "maxdom");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int code = maxdom::cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("maxdom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

const char* kP3 = R"({"kind":"graph","n":3,"edges":[[0,1],[1,2]]})";

}  // namespace

TEST_F(CliTest, SolvePathWithOneCentre) {
  const Invocation r = run({"solve", "--in", file("p3.json", kP3), "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto result = maxdom::parse_result(r.out);
  EXPECT_EQ(result.nbd_size, 3);
  EXPECT_EQ(result.chosen, std::vector<maxdom::NodeId>{1});
  EXPECT_EQ(result.solver, "oracle");
}

TEST_F(CliTest, SolveAlphaOnIsolatedNodes) {
  const Invocation r = run({"solve", "--in", file("iso.json", R"({"kind":"graph","n":4,"edges":[]})"), "--alpha", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(maxdom::parse_result(r.out).gamma, 2);
}

TEST_F(CliTest, VerifyAcceptsOwnOutputAndRejectsTampering) {
  const std::string in = file("p3.json", kP3);
  ASSERT_EQ(run({"solve", "--in", in, "--k", "1", "--out", path("r.json")}).code, 0);
  EXPECT_EQ(run({"verify", "--in", in, "--result", path("r.json")}).code, 0);

  std::ifstream f(path("r.json"));
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  auto result = maxdom::parse_result(text);
  result.chosen = {0};
  file("bad.json", maxdom::emit_result(result));
  const Invocation bad = run({"verify", "--in", in, "--result", path("bad.json")});
  EXPECT_EQ(bad.code, maxdom::cli::kExitVerify);
  EXPECT_FALSE(bad.err.empty());
}

TEST_F(CliTest, SchemaErrorsExitTwoWithoutOutput) {
  const Invocation r = run({"solve", "--in", file("loop.json", R"({"kind":"graph","n":2,"edges":[[0,0]]})"), "--k", "1",
                     "--out", path("never.json")});
  EXPECT_EQ(r.code, maxdom::cli::kExitSchema);
  EXPECT_NE(r.err.find("/edges/0"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(path("never.json")));
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, OracleBudgetExitsThree) {
  const std::string in = path("big.json");
  ASSERT_EQ(run({"gen", "--kind", "graph", "--n", "30", "--seed", "4", "--out", in}).code, 0);
  const Invocation r = run({"oracle", "--in", in, "--k", "3"});
  EXPECT_EQ(r.code, maxdom::cli::kExitBudget);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, EnginesAgreeOnIntervals) {
  const std::string in = path("iv.json");
  ASSERT_EQ(run({"gen", "--kind", "unit_intervals", "--n", "12", "--seed", "8", "--out", in}).code, 0);
  std::vector<int> sizes;
  for (const char* engine : {"interval-fast", "interval-ref", "oracle"}) {
    const Invocation r = run({"solve", "--in", in, "--k", "3", "--engine", engine});
    ASSERT_EQ(r.code, 0) << r.err;
    sizes.push_back(*maxdom::parse_result(r.out).nbd_size);
  }
  EXPECT_EQ(sizes[0], sizes[1]);
  EXPECT_EQ(sizes[0], sizes[2]);
  EXPECT_EQ(run({"solve", "--in", in, "--k", "3", "--engine", "geometric"}).code, maxdom::cli::kExitSchema);
}

TEST_F(CliTest, GenIsDeterministic) {
  const Invocation a = run({"gen", "--kind", "unit_intervals", "--n", "5", "--seed", "42"});
  const Invocation b = run({"gen", "--kind", "unit_intervals", "--n", "5", "--seed", "42"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, ReduceModes) {
  const std::string cnf = file("f.cnf", "p cnf 2 2\n1 2 0\n-1 -2 0\n");
  EXPECT_EQ(run({"reduce", "--mode", "gc", "--in", cnf, "--sat"}).out, "satisfiable=true\n");
  EXPECT_EQ(run({"reduce", "--mode", "gc", "--in", cnf, "--max2sat"}).out, "max_satisfied=2\n");
  const Invocation gc = run({"reduce", "--mode", "gc", "--in", cnf});
  ASSERT_EQ(gc.code, 0);
  EXPECT_EQ(maxdom::parse_instance(gc.out).graph.size(), 2 * 2 + 2 + 2 * 2 * 2 + 1);

  const std::string iso = file("iso.json", R"({"kind":"graph","n":4,"edges":[]})");
  const Invocation pad = run({"reduce", "--mode", "pad", "--in", iso, "--alpha", "0.5"});
  ASSERT_EQ(pad.code, 0);
  EXPECT_EQ(maxdom::parse_instance(pad.out).graph.size(), 8);

  const std::string p3 = file("p3.json", kP3);
  EXPECT_EQ(maxdom::parse_result(run({"reduce", "--mode", "kset-from-partial", "--in", p3, "--k", "1"}).out).nbd_size,
            3);
  EXPECT_EQ(maxdom::parse_result(run({"reduce", "--mode", "partial-from-kset", "--in", p3, "--alpha", "1"}).out).gamma,
            1);
  EXPECT_EQ(run({"reduce", "--mode", "defect", "--in", p3, "--r", "0"}).out, "defect=0\n");
  EXPECT_EQ(run({"reduce", "--mode", "pad", "--in", p3}).code, maxdom::cli::kExitSchema);
}

TEST_F(CliTest, BenchPrintsOneLine) {
  const Invocation r = run({"bench", "--suite", "unit-intervals", "--n", "1000", "--k", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("suite=unit-intervals n=1000 k=5 millis=", 0), 0U);
  EXPECT_EQ(r.out.find('\n'), r.out.size() - 1);
}

TEST_F(CliTest, ExportDot) {
  const Invocation r = run({"export-dot", "--in", file("p3.json", kP3)});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 -- 2;"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, maxdom::cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--in", "x"}).code, maxdom::cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--in", "x", "--k", "1", "--alpha", "0.5"}).code, maxdom::cli::kExitUsage);
}

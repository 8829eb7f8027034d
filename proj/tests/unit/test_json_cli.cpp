#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "los/errors.hpp"
#include "los/losn_format.hpp"
#include "los/narrow_dp.hpp"
#include "los/solution_json.hpp"
#include "test_support.hpp"

using namespace los;

TEST(SolutionJson, KeyOrderAndRoundTrip) {
  Solution s;
  s.algorithm = "exact-narrow";
  s.vertices = {{1, 2}, {3, 1}};
  s.total_weight = Rational(7, 2);
  s.set_meta("windows", std::int64_t{13});
  s.set_meta("parity", std::string("odd"));
  EXPECT_EQ(solution_to_json(s),
            R"({"algorithm":"exact-narrow","weight":"7/2","vertices":[[1,2],[3,1]],"meta":{"windows":13,"parity":"odd"}})");
  EXPECT_EQ(solution_to_json(s, true),
            R"({"algorithm":"exact-narrow","weight":"7/2","weight_float":3.5,"vertices":[[1,2],[3,1]],"meta":{"windows":13,"parity":"odd"}})");
  EXPECT_EQ(solution_from_json(solution_to_json(s)), s);
}

TEST(SolutionJson, ReportWrapperAndErrors) {
  RunReport r;
  r.command = "solve exact-narrow x.losn";
  r.digest = digest_hex("abc");
  r.params = {{"algorithm", "exact-narrow"}, {"long_axis", "0"}};
  r.solution.algorithm = "exact-narrow";
  r.solution.total_weight = Rational(2);
  r.solution.vertices = {{1, 1}};
  const std::string text = run_report_json(r, -1);
  EXPECT_EQ(text.find("wall_ms"), std::string::npos);
  EXPECT_LT(text.find("\"command\""), text.find("\"digest\""));
  EXPECT_LT(text.find("\"params\""), text.find("\"solution\""));
  EXPECT_EQ(solution_from_json(text), r.solution);
  r.wall_ms = 1.5;
  EXPECT_NE(run_report_json(r).find("wall_ms"), std::string::npos);
  EXPECT_THROW(solution_from_json("{"), ValidationError);
  EXPECT_THROW(solution_from_json(R"({"algorithm":"x","weight":"1"})"), ValidationError);
}

TEST(SolutionJson, DigestIsFnv1a) {
  EXPECT_EQ(digest_hex(""), "cbf29ce484222325");
  EXPECT_EQ(digest_hex("a"), "af63dc4c8601ec8c");
}

#ifdef LOS_CLI_PATH

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LOS_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("los_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, GenSolveVerify) {
  ASSERT_EQ(run("gen --d 2 --extents 30,3 --omega 3 --density 0.5 --seed 4 -o " + path("a.losn")).code, 0);
  for (const char* algo : {"exact-narrow", "strip2", "ptas", "semionline"}) {
    const CliRun first = run(std::string("solve ") + algo + " " + path("a.losn") + " --json");
    ASSERT_EQ(first.code, 0) << algo;
    EXPECT_EQ(run(std::string("solve ") + algo + " " + path("a.losn") + " --json").out, first.out) << algo;
    write("sol.json", first.out);
    EXPECT_EQ(run("verify " + path("a.losn") + " " + path("sol.json")).code, 0) << algo;
  }
}

TEST_F(Cli, ExitCodes) {
  write("bad.losn", "losn v1\nd=2 omega=1 extents=3,3\n");
  EXPECT_EQ(run("solve exact-narrow " + path("bad.losn")).code, 2);
  EXPECT_EQ(run("solve nope " + path("bad.losn")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  write("big.losn", serialize_losn(los::test::full_instance(2, {30, 1})));
  EXPECT_EQ(run("solve brute " + path("big.losn")).code, 3);
  EXPECT_EQ(run("solve ptas " + path("big.losn") + " --epsilon 0").code, 2);
  write("adj.json", R"({"algorithm":"x","weight":"2","vertices":[[1,1],[2,1]],"meta":{}})");
  const CliRun v = run("verify " + path("big.losn") + " " + path("adj.json"));
  EXPECT_EQ(v.code, 2);
  EXPECT_NE(v.out.find("\"independent\": false"), std::string::npos);
}

TEST_F(Cli, PtasMetaAndTrace) {
  write("g.losn", serialize_losn(los::test::full_instance(3, {12, 6})));
  const CliRun r = run("solve ptas " + path("g.losn") + " --epsilon 0.5 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"h\": 2"), std::string::npos);
  EXPECT_NE(r.out.find("\"epsilon\": \"1/2\""), std::string::npos);
  const CliRun t = run("solve semionline " + path("g.losn") + " --trace-phases");
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("{\"j0\":1,", 0), 0u);
  EXPECT_NE(t.out.find("\"command\":\"solve semionline"), std::string::npos);
}

TEST_F(Cli, BenchHeaderOnEmptyRange) {
  const CliRun r = run("bench --suite ratio --seeds 5..4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "seed,n,k,omega,algo,epsilon,weight,ratio,ms\n");
  EXPECT_EQ(run("bench --suite nope").code, 2);
}

TEST_F(Cli, AdsSchedFile) {
  write("s.ads", "ads v1\nclients=2 times=4 omega=2 l=1\na 1111\na 1111\n");
  const CliRun r = run("solve adssched " + path("s.ads") + " --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"weight\": \"4/1\""), std::string::npos);
  write("s.json", r.out);
  EXPECT_EQ(run("verify " + path("s.ads") + " " + path("s.json")).code, 0);
}

#endif

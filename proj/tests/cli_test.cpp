#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cyclogon/elim/canonical.hpp"
#include "cyclogon/io/golden.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CYCLOGON_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_code = 0) {
  const auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << args;
  return json::parse(r.out);
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("cyclogon_cli_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

TEST(CliArea, RegularPentagon) {
  const auto j = run_json("area 1 1 1 1 1");
  EXPECT_NEAR(j["A"].get<double>(), 1.720477, 1e-6);
  EXPECT_NEAR(j["Y_root"].get<double>(), 25 + 10 * std::sqrt(5.0), 1e-9);
  EXPECT_LE(j["residual"]["relative"].get<double>(), 1e-6);
  EXPECT_TRUE(j["residual_ok"].get<bool>());
  EXPECT_TRUE(j["root_matches_oracle"].get<bool>());
  EXPECT_EQ(j["path"], "pentagon");
  EXPECT_NEAR(j["oracle"]["R"].get<double>(), 0.8506508084, 1e-10);
}

TEST(CliArea, SidesAsJsonOrCsv) {
  const auto a = run_json("area 1.1 0.9 1 1.2 0.8");
  const auto b = run_json("area '[1.1,0.9,1,1.2,0.8]'");
  const auto c = run_json("area 1.1,0.9,1,1.2,0.8");
  EXPECT_EQ(a["A"], b["A"]);
  EXPECT_EQ(a["A"], c["A"]);
}

TEST(CliArea, QuadrilateralPath) {
  const auto j = run_json("area 1 1 1 1 0");
  EXPECT_NEAR(j["A"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["path"], "quadrilateral");
  const auto four = run_json("area 1 2 2 3");
  EXPECT_NEAR(four["A"].get<double>(), std::sqrt(12.0), 1e-12);
}

TEST(CliArea, ExitCodes) {
  EXPECT_EQ(run("area 1 1 1 1 5").code, 2);
  EXPECT_EQ(run("--tol 1e-30 area 1.1 0.9 1 1.2 0.8").code, 3);
  EXPECT_EQ(run("area x 1 1 1 1").code, 1);
  EXPECT_EQ(run("area 1 1").code, 1);
  EXPECT_EQ(run("no-such-command").code, 1);
}

TEST(CliRadiusAndDiagonals, RegularPentagon) {
  const auto r = run_json("radius 1 1 1 1 1");
  EXPECT_NEAR(r["R"].get<double>(), 1 / (2 * std::sin(M_PI / 5)), 1e-12);
  const auto d = run_json("diagonals 1 1 1 1 1");
  ASSERT_EQ(d["diagonals"].size(), 5u);
  for (const auto& x : d["diagonals"]) {
    EXPECT_NEAR(x["root"].get<double>(), (1 + std::sqrt(5.0)) / 2, 1e-9);
    EXPECT_TRUE(x["root_matches_oracle"].get<bool>());
  }
}

TEST(CliOutput, CsvKeepsFullPrecision) {
  const auto r = run("--output csv radius 1 1 1 1 1");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header.substr(0, 2), "R,");
  const double R = std::stod(row.substr(0, row.find(',')));
  EXPECT_EQ(R, run_json("radius 1 1 1 1 1")["R"].get<double>());
}

TEST(CliOutput, Deterministic) {
  EXPECT_EQ(run("area 1.3 0.7 1.1 0.9 1").out, run("area 1.3 0.7 1.1 0.9 1").out);
  EXPECT_EQ(run("check monge --trials 200 --seed 9").out, run("check monge --trials 200 --seed 9").out);
}

TEST(CliCheck, PassAndFailureReporting) {
  const auto j = run_json("check gauss --trials 500");
  EXPECT_EQ(j["identity"], "gauss");
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["trials"], 500);
  EXPECT_LE(j["max_relative_residual"].get<double>(), 1e-10);
  // An impossible tolerance fails every trial and names the first seed.
  const auto f = run_json("--tol 1e-300 --seed 77 check gauss --trials 20", 4);
  EXPECT_GT(f["failures"].get<int>(), 0);
  EXPECT_GE(f["failing_seed"].get<int>(), 77);
  EXPECT_EQ(run("check no_such_identity").code, 1);
}

TEST(CliCheck, AllIdentitiesQuick) {
  const auto j = run_json("check all --trials 5");
  ASSERT_TRUE(j.is_array());
  EXPECT_GE(j.size(), 20u);
  for (const auto& r : j) EXPECT_EQ(r["failures"], 0) << r["identity"];
}

TEST(CliDerive, WritesGoldenEquivalentFiles) {
  const auto dir = scratch_dir("derive");
  const auto j = run_json("derive diagonal --out-dir " + dir.string());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["match_status"], "identical");
  ASSERT_TRUE(fs::exists(dir / "diagonal.txt"));
  ASSERT_TRUE(fs::exists(dir / "diagonal.json"));
  EXPECT_EQ(cyclogon::io::load_polynomial("diagonal", dir), cyclogon::io::load_polynomial("diagonal"));
  std::ifstream a(dir / "diagonal.txt"), b(cyclogon::io::golden_dir() / "diagonal.txt");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  fs::remove_all(dir);
}

TEST(CliSpecialize, BrahmaguptaDividesAtZeroSide) {
  const auto j = run_json("specialize robbins --zero e5");
  EXPECT_TRUE(j["divisible_by"]["brahmagupta"].get<bool>());
  const auto f = run_json("specialize fourAR --zero e5");
  EXPECT_TRUE(f["divisible_by"]["quadrilateral-4AR"].get<bool>());
}

}  // namespace

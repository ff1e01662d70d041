#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_binary(const std::string& args) {
  const std::string cmd = std::string(EHRENFEST_CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class BinaryTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ehrenfest_bin_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(BinaryTest, SymmetricPriceIsByteIdenticalAcrossRuns) {
  const auto cfg = dir_ / "sym.json";
  std::ofstream(cfg) << R"({"ehrenfest": {"N": 8, "lambda": 0.5, "alpha": 1, "beta": 1, "r_m": 0.02, "r_M": 0.06},
                          "pricing": {"T": 2, "r": 0.04}})";
  const auto a = run_binary("price --config " + cfg.string());
  const auto b = run_binary("price --config " + cfg.string());
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"method\": \"symmetric\""), std::string::npos);
}

TEST_F(BinaryTest, ConvergeDefaultSweepHasSevenRows) {
  const auto r = run_binary("converge --scenario favourable --out " + dir_.string());
  ASSERT_EQ(r.code, 0);
  std::istringstream in(slurp(dir_ / "convergence_favourable.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "N,price_ehrenfest,price_vasicek,rel_error,wall_time_s");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto fields = std::count(line.begin(), line.end(), ',');
    EXPECT_EQ(fields, 4);
    std::stringstream ls(line);
    std::string cell;
    for (int i = 0; i < 4; ++i) std::getline(ls, cell, ',');
    const double rel = std::stod(cell);
    EXPECT_TRUE(std::isfinite(rel));
    EXPECT_GE(rel, 0.0);
  }
  EXPECT_EQ(rows, 7);
}

TEST_F(BinaryTest, ConvergeOutputIsReproducible) {
  ASSERT_EQ(run_binary("converge --scenario unfavourable --Ns 4,8 --out " + (dir_ / "a").string()).code, 0);
  ASSERT_EQ(run_binary("converge --scenario unfavourable --Ns 4,8 --out " + (dir_ / "b").string()).code, 0);
  EXPECT_EQ(slurp(dir_ / "a" / "convergence_unfavourable.csv"), slurp(dir_ / "b" / "convergence_unfavourable.csv"));
}

TEST_F(BinaryTest, LowrateWritesThirtyRowCurves) {
  const auto r = run_binary("lowrate --out " + dir_.string());
  ASSERT_EQ(r.code, 0);
  for (const char* name : {"lowrate_vasicek.csv", "lowrate_ehrenfest.csv"}) {
    const auto text = slurp(dir_ / name);
    EXPECT_EQ(text.substr(0, 14), "T_years,price\n") << name;
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 31) << name;
    EXPECT_EQ(text.find('\r'), std::string::npos);
  }
  for (const char* name : {"paths_vasicek_1.csv", "paths_vasicek_2.csv", "paths_vasicek_3.csv", "paths_ehrenfest_1.csv"}) {
    EXPECT_EQ(slurp(dir_ / name).substr(0, 10), "time,rate\n") << name;
  }
}

TEST_F(BinaryTest, ExitCodes) {
  EXPECT_EQ(run_binary("--help").code, 0);
  EXPECT_EQ(run_binary("lowrate --help").code, 0);
  EXPECT_EQ(run_binary("price --no-such-flag").code, 2);
  EXPECT_EQ(run_binary("converge --scenario sideways").code, 2);
  EXPECT_EQ(run_binary("converge --Ns 4 --out /proc/ehrenfest_no").code, 4);
  const auto cfg = dir_ / "off.json";
  std::ofstream(cfg) << R"({"ehrenfest": {"N": 4, "lambda": 1, "alpha": 0.4, "beta": 0.7, "r_m": 0.01, "r_M": 0.09},
                          "pricing": {"T": 1, "r": 0.0333}})";
  EXPECT_EQ(run_binary("price --config " + cfg.string()).code, 3);
  EXPECT_EQ(run_binary("price --snap --config " + cfg.string()).code, 0);
}

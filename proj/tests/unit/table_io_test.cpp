#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/experiments/table_io.hpp"

using namespace ehrenfest;
using namespace ehrenfest::experiments;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("ehrenfest_table_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.0), "0");
  for (double x : {0.9553869424648351, 1e-300, 2.953474666562024, -3.5e17}) {
    EXPECT_EQ(std::strtod(format_double(x).c_str(), nullptr), x);
  }
}

TEST(Csv, ConvergenceHeaderAndRows) {
  std::vector<ConvergenceRow> rows{{4, 0.5, 0.25, 1.0, 0.0, 0.05}, {8, 0.1, 0.2, 0.5, 0.001, 0.05}};
  EXPECT_EQ(convergence_csv(rows),
            "N,price_ehrenfest,price_vasicek,rel_error,wall_time_s\n"
            "4,0.5,0.25,1,0\n"
            "8,0.1,0.2,0.5,0.001\n");
}

TEST(Csv, CurveAndPaths) {
  ScenarioCurve c{"ehrenfest", {1, 2}, {0.9, 0.8}};
  EXPECT_EQ(curve_csv(c), "T_years,price\n1,0.9\n2,0.8\n");
  shortrate::RatePath rp{{0.0, 0.5}, {0.01, 0.02}};
  EXPECT_EQ(rate_path_csv(rp), "time,rate\n0,0.01\n0.5,0.02\n");
  process::PathSample ps{{0.0, 0.25}, {3, 4}, 1.0};
  EXPECT_EQ(state_path_csv(ps), "time,state\n0,3\n0.25,4\n");
}

TEST(AtomicWrite, ReplacesContentAndLeavesNoTemporaries) {
  const auto dir = scratch_dir("replace");
  const auto file = dir / "out.csv";
  write_file_atomic(file, "a\n");
  write_file_atomic(file, "b,c\n");
  EXPECT_EQ(slurp(file), "b,c\n");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1);
  fs::remove_all(dir);
}

TEST(AtomicWrite, UnwritableLocationThrowsIoError) {
  EXPECT_THROW(write_file_atomic("/nonexistent_dir_for_test/x.csv", "x"), IoError);
}

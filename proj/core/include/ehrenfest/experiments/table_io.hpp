#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ehrenfest/experiments/experiments.hpp"

namespace ehrenfest::experiments {

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

/// N,price_ehrenfest,price_vasicek,rel_error,wall_time_s
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
/// T_years,price
std::string curve_csv(const ScenarioCurve& curve);
/// time,rate
std::string rate_path_csv(const shortrate::RatePath& path);
/// time,state
std::string state_path_csv(const process::PathSample& path);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ehrenfest::experiments

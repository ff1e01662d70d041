#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ehrenfest/pricing/vasicek.hpp"
#include "ehrenfest/shortrate/short_rate_model.hpp"

namespace ehrenfest::cli {

/// Invalid configuration file or value. The message names the offending
/// field as a dotted path, e.g. "ehrenfest.alpha: must be in (0, 1]".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EhrenfestSection {
  int N = 0;
  double lambda = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double r_m = 0.0;
  double r_M = 0.0;

  shortrate::ShortRateModel model() const;
};

struct PricingSection {
  double t = 0.0;
  std::optional<double> T;
  std::optional<double> r;
  std::optional<int> M;
  std::optional<int> H;
};

struct SimulationSection {
  std::optional<double> horizon;
  std::optional<double> r0;
  std::optional<int> paths;
  std::optional<std::uint64_t> seed;
  int steps_per_year = 250;
};

enum class OutputFormat { Csv, Json };

struct OutputSection {
  std::optional<std::string> path;
  std::optional<OutputFormat> format;
};

/// Parsed configuration file. At most one of the model sections is present.
struct RunConfig {
  std::optional<EhrenfestSection> ehrenfest;
  std::optional<pricing::VasicekParams> vasicek;
  PricingSection pricing;
  SimulationSection simulation;
  OutputSection output;
};

/// Validates a parsed JSON document. Unknown keys are rejected.
RunConfig parse_config(const nlohmann::json& doc);

/// Reads and validates a JSON config file. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path);

OutputFormat parse_format(const std::string& name);

}  // namespace ehrenfest::cli

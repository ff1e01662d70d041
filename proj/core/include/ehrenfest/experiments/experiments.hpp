#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ehrenfest/pricing/truncation.hpp"
#include "ehrenfest/pricing/vasicek.hpp"
#include "ehrenfest/process/ehrenfest_process.hpp"
#include "ehrenfest/shortrate/short_rate_model.hpp"

namespace ehrenfest::experiments {

enum class Scenario { Favourable, Unfavourable };

/// "favourable" / "unfavourable". Throws ParameterError on anything else.
Scenario parse_scenario(std::string_view name);
std::string to_string(Scenario scenario);

/// Vasicek parameters and maturity of a convergence scenario:
/// favourable k=0.2, sigma=0.05, T=1; unfavourable k=0.2, sigma=0.2, T=10;
/// both with theta=0.08 and r0=0.05.
struct ScenarioSpec {
  pricing::VasicekParams vasicek;
  double maturity;
};

ScenarioSpec scenario_spec(Scenario scenario);

inline const std::vector<int> kDefaultNs{4, 8, 16, 32, 64, 128, 200};

struct ConvergenceRow {
  int N = 0;
  double price_ehrenfest = 0.0;
  double price_vasicek = 0.0;
  double rel_error = 0.0;
  double wall_time_s = 0.0;
  /// Grid rate the Vasicek r0 was snapped to for the Ehrenfest price.
  double r0_snapped = 0.0;
};

/// For each N: map the scenario onto E(1,1) with the moment-matched speed,
/// snap r0 to the nearest grid rate, price with price_symmetric and compare
/// with the Vasicek closed form at the unsnapped r0. Rows come back sorted by
/// N with duplicates removed.
///
/// Throws ParameterError for an empty or non-positive N list.
std::vector<ConvergenceRow> run_convergence(Scenario scenario, std::vector<int> Ns,
                                            const pricing::Truncation& trunc = {});

struct ScenarioCurve {
  std::string model;  // "vasicek" or "ehrenfest"
  std::vector<double> maturities;
  std::vector<double> prices;
};

/// Low-rate case study. Vasicek: theta=0.04, sigma=0.05, k=0.1, r0=0.01.
/// Ehrenfest: N=160, lambda=1, alpha=0.1, beta=0.3, r_m=0, r_M=0.16, R_0=0.01.
struct LowrateSetup {
  pricing::VasicekParams vasicek{0.1, 0.04, 0.05, 0.01};
  shortrate::ShortRateModel ehrenfest{process::EhrenfestParams(160, 1.0, 0.1, 0.3), 0.0, 0.16};
  double r0 = 0.01;
  int max_maturity = 30;
  /// H = 30 drifts by about 1e-2 relative at the 30-year point for N = 160;
  /// H = 60 agrees with the Feynman-Kac price to rounding.
  pricing::Truncation truncation{10, 60};
  int vasicek_paths = 3;
  /// Euler steps per year for the sample paths.
  int steps_per_year = 250;
};

struct LowrateStudy {
  ScenarioCurve vasicek;
  ScenarioCurve ehrenfest;
  std::vector<shortrate::RatePath> vasicek_paths;
  process::PathSample ehrenfest_path;
  shortrate::RatePath ehrenfest_rate_path;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Maturities 1..max_maturity years for both curves, plus sample paths over
/// max_maturity years. Path j of the Vasicek set uses Rng::derived(seed, j);
/// the Ehrenfest path uses Rng::derived(seed, vasicek_paths).
LowrateStudy run_lowrate_study(const LowrateSetup& setup = {}, std::uint64_t seed = kDefaultSeed);

}  // namespace ehrenfest::experiments

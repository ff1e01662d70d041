#include "ehrenfest/experiments/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ehrenfest/errors.hpp"
#include "ehrenfest/pricing/ehrenfest_pricer.hpp"
#include "ehrenfest/process/random.hpp"

namespace ehrenfest::experiments {

Scenario parse_scenario(std::string_view name) {
  if (name == "favourable") return Scenario::Favourable;
  if (name == "unfavourable") return Scenario::Unfavourable;
  throw ParameterError("unknown scenario '" + std::string(name) +
                       "' (expected favourable or unfavourable)");
}

std::string to_string(Scenario scenario) {
  return scenario == Scenario::Favourable ? "favourable" : "unfavourable";
}

ScenarioSpec scenario_spec(Scenario scenario) {
  if (scenario == Scenario::Favourable) return {{0.2, 0.08, 0.05, 0.05}, 1.0};
  return {{0.2, 0.08, 0.2, 0.05}, 10.0};
}

std::vector<ConvergenceRow> run_convergence(Scenario scenario, std::vector<int> Ns,
                                            const pricing::Truncation& trunc) {
  if (Ns.empty()) throw ParameterError("N list must not be empty");
  for (int N : Ns) {
    if (N < 1) throw ParameterError("every N must be >= 1");
  }
  std::sort(Ns.begin(), Ns.end());
  Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());

  const auto spec = scenario_spec(scenario);
  const double vasicek = pricing::price_vasicek(spec.vasicek, 0.0, spec.maturity, spec.vasicek.r0);

  std::vector<ConvergenceRow> rows;
  rows.reserve(Ns.size());
  for (int N : Ns) {
    const auto mapping = pricing::vasicek_to_ehrenfest(spec.vasicek, N);
    const double r0 = mapping.model.rate(shortrate::snap_to_grid(spec.vasicek.r0, mapping.model));
    const auto res = pricing::price_symmetric(mapping.model, 0.0, spec.maturity, r0, trunc);
    ConvergenceRow row;
    row.N = N;
    row.price_ehrenfest = res.price;
    row.price_vasicek = vasicek;
    row.rel_error = std::abs(res.price - vasicek) / vasicek;
    row.wall_time_s = res.wall_time_s;
    row.r0_snapped = r0;
    rows.push_back(row);
  }
  return rows;
}

LowrateStudy run_lowrate_study(const LowrateSetup& setup, std::uint64_t seed) {
  if (setup.max_maturity < 1) throw ParameterError("max_maturity must be >= 1");
  if (setup.vasicek_paths < 0) throw ParameterError("vasicek_paths must be >= 0");
  if (setup.steps_per_year < 1) throw ParameterError("steps_per_year must be >= 1");

  LowrateStudy study;
  study.vasicek.model = "vasicek";
  study.ehrenfest.model = "ehrenfest";
  for (int T = 1; T <= setup.max_maturity; ++T) {
    const double tau = T;
    study.vasicek.maturities.push_back(tau);
    study.vasicek.prices.push_back(pricing::price_vasicek(setup.vasicek, 0.0, tau, setup.vasicek.r0));
    study.ehrenfest.maturities.push_back(tau);
    study.ehrenfest.prices.push_back(
        pricing::price_general(setup.ehrenfest, 0.0, tau, setup.r0, setup.truncation).price);
  }

  const double horizon = setup.max_maturity;
  const int steps = setup.max_maturity * setup.steps_per_year;
  for (int j = 0; j < setup.vasicek_paths; ++j) {
    auto rng = process::Rng::derived(seed, static_cast<std::uint64_t>(j));
    study.vasicek_paths.push_back(pricing::simulate_vasicek_path(setup.vasicek, horizon, steps, rng));
  }
  auto rng = process::Rng::derived(seed, static_cast<std::uint64_t>(setup.vasicek_paths));
  const int k0 = shortrate::rate_to_state(setup.r0, setup.ehrenfest);
  study.ehrenfest_path = process::simulate_path(k0, horizon, setup.ehrenfest.ehrenfest(), rng);
  study.ehrenfest_rate_path = shortrate::to_rate_path(study.ehrenfest_path, setup.ehrenfest);
  return study;
}

}  // namespace ehrenfest::experiments

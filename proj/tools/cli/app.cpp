#include "cli/app.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/config.hpp"
#include "ehrenfest/errors.hpp"
#include "ehrenfest/experiments/experiments.hpp"
#include "ehrenfest/experiments/table_io.hpp"
#include "ehrenfest/pricing/ehrenfest_pricer.hpp"
#include "ehrenfest/pricing/oracles.hpp"
#include "ehrenfest/pricing/vasicek.hpp"
#include "ehrenfest/process/random.hpp"

namespace ehrenfest::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kDefaultMcPaths = 100000;

// Flags shared by every subcommand; a flag given on the command line wins
// over the matching config entry.
struct GlobalOptions {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  bool snap = false;
  std::string oracle = "none";
  std::optional<int> M;
  std::optional<int> H;
  bool timing = false;
};

struct Context {
  GlobalOptions opts;
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;

  std::uint64_t seed() const {
    return opts.seed.value_or(cfg.simulation.seed.value_or(experiments::kDefaultSeed));
  }
  OutputFormat format() const {
    if (opts.format) return parse_format(*opts.format);
    return cfg.output.format.value_or(OutputFormat::Csv);
  }
  pricing::Truncation truncation(pricing::Truncation base) const {
    base.M = opts.M.value_or(cfg.pricing.M.value_or(base.M));
    base.H = opts.H.value_or(cfg.pricing.H.value_or(base.H));
    return base;
  }
  double wall_time(double measured) const { return opts.timing ? measured : 0.0; }
};

void add_global_options(CLI::App& app, GlobalOptions& g) {
  app.add_option("--config", g.config, "JSON configuration file");
  app.add_option("--seed", g.seed, "Random seed (overrides simulation.seed)");
  app.add_option("--out", g.out,
                 "Output file for price, output directory for the other subcommands "
                 "(overrides output.path)");
  app.add_option("--format", g.format, "Output format (overrides output.format)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--snap", g.snap, "Round an off-grid initial rate to the nearest grid rate");
  app.add_option("--oracle", g.oracle, "Cross-check price: none, fk (matrix exponential) or mc")
      ->check(CLI::IsMember({"none", "fk", "mc"}))
      ->default_str("none");
  app.add_option("--M", g.M, "Outer series truncation order (overrides pricing.M)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--H", g.H, "Hypergeometric truncation order (overrides pricing.H)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", g.timing,
               "Report measured wall times; without it wall_time_s is written as 0 so that "
               "repeated runs produce identical bytes");
}

// Resolves the initial rate onto the grid, honouring --snap.
double grid_rate(double r, const shortrate::ShortRateModel& model, bool snap) {
  if (snap) return model.rate(shortrate::snap_to_grid(r, model));
  return model.rate(shortrate::rate_to_state(r, model));
}

fs::path output_dir(const Context& ctx) {
  fs::path dir = ctx.opts.out.value_or(ctx.cfg.output.path.value_or("."));
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot use '" + dir.string() + "' as output directory");
  }
  return dir;
}

void emit(const Context& ctx, const fs::path& file, const std::string& content) {
  experiments::write_file_atomic(file, content);
  ctx.out << "wrote " << file.string() << '\n';
}

ordered_json rate_path_json(const shortrate::RatePath& path) {
  return ordered_json{{"time", path.times}, {"rate", path.rates}};
}

ordered_json curve_json(const experiments::ScenarioCurve& curve) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < curve.maturities.size(); ++i) {
    rows.push_back({{"T_years", curve.maturities[i]}, {"price", curve.prices[i]}});
  }
  return rows;
}

// ---------------------------------------------------------------- price

struct PriceOptions {
  std::string method = "auto";
};

int cmd_price(Context& ctx, const PriceOptions& popts) {
  const auto& cfg = ctx.cfg;
  if (!cfg.ehrenfest && !cfg.vasicek) {
    throw ConfigError("config: price needs an \"ehrenfest\" or \"vasicek\" section (use --config)");
  }
  if (!cfg.pricing.T) throw ConfigError("pricing.T: is required");
  const double t = cfg.pricing.t;
  const double T = *cfg.pricing.T;

  ordered_json doc;
  double price = 0.0;
  if (cfg.ehrenfest) {
    if (!cfg.pricing.r) throw ConfigError("pricing.r: is required");
    const auto model = cfg.ehrenfest->model();
    const double r = grid_rate(*cfg.pricing.r, model, ctx.opts.snap);
    const auto trunc = ctx.truncation({});
    const bool symmetric_model = model.ehrenfest().alpha() == 1.0 && model.ehrenfest().beta() == 1.0;
    std::string method = popts.method;
    if (method == "auto") method = symmetric_model ? "symmetric" : "general";
    const auto res = method == "symmetric" ? pricing::price_symmetric(model, t, T, r, trunc)
                                           : pricing::price_general(model, t, T, r, trunc);
    price = res.price;
    doc["price"] = res.price;
    doc["error_estimate"] = res.error_estimate;
    doc["M"] = res.truncation.M;
    doc["H"] = res.truncation.H;
    doc["wall_time_s"] = ctx.wall_time(res.wall_time_s);
    doc["model"] = "ehrenfest";
    doc["method"] = method;
    doc["r"] = r;

    if (ctx.opts.oracle == "fk") {
      const double o = pricing::price_fk_oracle(model, t, T, r);
      doc["oracle"] = "fk";
      doc["oracle_price"] = o;
      doc["rel_gap"] = std::abs(price - o) / o;
    } else if (ctx.opts.oracle == "mc") {
      const int paths = cfg.simulation.paths.value_or(kDefaultMcPaths);
      const auto o = pricing::price_mc_oracle(model, t, T, r, std::max(paths, 2), ctx.seed());
      doc["oracle"] = "mc";
      doc["oracle_price"] = o.estimate;
      doc["oracle_std_error"] = o.std_error;
      doc["rel_gap"] = std::abs(price - o.estimate) / o.estimate;
    }
  } else {
    const auto& v = *cfg.vasicek;
    const double r = cfg.pricing.r.value_or(v.r0);
    if (popts.method != "auto" && popts.method != "vasicek") {
      throw ConfigError("--method " + popts.method + " applies to ehrenfest models only");
    }
    price = pricing::price_vasicek(v, t, T, r);
    doc["price"] = price;
    doc["error_estimate"] = 0.0;
    doc["M"] = nullptr;
    doc["H"] = nullptr;
    doc["wall_time_s"] = 0.0;
    doc["model"] = "vasicek";
    doc["method"] = "closed_form";
    doc["r"] = r;

    if (ctx.opts.oracle == "fk") {
      throw ConfigError("--oracle fk: needs an ehrenfest model");
    } else if (ctx.opts.oracle == "mc") {
      const int paths = cfg.simulation.paths.value_or(kDefaultMcPaths);
      const int steps = std::max(1, static_cast<int>(std::ceil((T - t) * cfg.simulation.steps_per_year)));
      const auto o = pricing::price_vasicek_mc(v, t, T, r, std::max(paths, 2), steps, ctx.seed());
      doc["oracle"] = "mc";
      doc["oracle_price"] = o.estimate;
      doc["oracle_std_error"] = o.std_error;
      doc["rel_gap"] = std::abs(price - o.estimate) / o.estimate;
    }
  }

  ctx.out << doc.dump(2) << '\n';

  const auto target = ctx.opts.out ? ctx.opts.out : cfg.output.path;
  if (target) {
    std::string content;
    if (ctx.format() == OutputFormat::Json) {
      content = doc.dump(2) + "\n";
    } else {
      std::vector<std::string> keys;
      std::vector<std::string> cells;
      for (const auto& item : doc.items()) {
        keys.push_back(item.key());
        const auto& v = item.value();
        if (v.is_number_float()) {
          cells.push_back(experiments::format_double(v.get<double>()));
        } else if (v.is_string()) {
          cells.push_back(v.get<std::string>());
        } else if (v.is_null()) {
          cells.emplace_back();
        } else {
          cells.push_back(v.dump());
        }
      }
      std::string header;
      std::string row;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        header += (i ? "," : "") + keys[i];
        row += (i ? "," : "") + cells[i];
      }
      content = header + "\n" + row + "\n";
    }
    experiments::write_file_atomic(*target, content);
  }
  return kExitOk;
}

// ------------------------------------------------------------- simulate

struct SimulateOptions {
  std::optional<double> horizon;
  std::optional<int> paths;
};

int cmd_simulate(Context& ctx, const SimulateOptions& sopts) {
  const auto& cfg = ctx.cfg;
  if (!cfg.ehrenfest && !cfg.vasicek) {
    throw ConfigError("config: simulate needs an \"ehrenfest\" or \"vasicek\" section (use --config)");
  }
  const auto horizon = sopts.horizon ? sopts.horizon : cfg.simulation.horizon;
  if (!horizon) throw ConfigError("simulation.horizon: is required");
  if (!(*horizon > 0.0)) throw ConfigError("simulation.horizon: must be > 0");
  const int paths = sopts.paths.value_or(cfg.simulation.paths.value_or(1));
  if (paths < 1) throw ConfigError("simulation.paths: must be >= 1");
  const auto seed = ctx.seed();
  const auto dir = output_dir(ctx);
  const bool json = ctx.format() == OutputFormat::Json;

  std::vector<shortrate::RatePath> sampled;
  std::string model_name;
  if (cfg.ehrenfest) {
    model_name = "ehrenfest";
    const auto model = cfg.ehrenfest->model();
    const auto r0_in = cfg.simulation.r0 ? cfg.simulation.r0 : cfg.pricing.r;
    if (!r0_in) throw ConfigError("simulation.r0: is required (or pricing.r)");
    const int k0 = shortrate::rate_to_state(grid_rate(*r0_in, model, ctx.opts.snap), model);
    for (int i = 0; i < paths; ++i) {
      auto rng = process::Rng::derived(seed, static_cast<std::uint64_t>(i));
      const auto path = process::simulate_path(k0, *horizon, model.ehrenfest(), rng);
      sampled.push_back(shortrate::to_rate_path(path, model));
    }
  } else {
    model_name = "vasicek";
    auto v = *cfg.vasicek;
    if (cfg.simulation.r0) v.r0 = *cfg.simulation.r0;
    const int steps = std::max(1, static_cast<int>(std::ceil(*horizon * cfg.simulation.steps_per_year)));
    for (int i = 0; i < paths; ++i) {
      auto rng = process::Rng::derived(seed, static_cast<std::uint64_t>(i));
      sampled.push_back(pricing::simulate_vasicek_path(v, *horizon, steps, rng));
    }
  }

  if (json) {
    ordered_json doc{{"model", model_name}, {"seed", seed}, {"paths", ordered_json::array()}};
    for (const auto& p : sampled) doc["paths"].push_back(rate_path_json(p));
    emit(ctx, dir / ("paths_" + model_name + ".json"), doc.dump(2) + "\n");
  } else {
    for (int i = 0; i < paths; ++i) {
      emit(ctx, dir / ("paths_" + model_name + "_" + std::to_string(i + 1) + ".csv"),
           experiments::rate_path_csv(sampled[i]));
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------- converge

struct ConvergeOptions {
  std::string scenario = "favourable";
  std::vector<int> Ns;
};

int cmd_converge(Context& ctx, const ConvergeOptions& copts) {
  const auto scenario = experiments::parse_scenario(copts.scenario);
  const auto Ns = copts.Ns.empty() ? experiments::kDefaultNs : copts.Ns;
  const auto trunc = ctx.truncation({});
  auto rows = experiments::run_convergence(scenario, Ns, trunc);
  for (auto& row : rows) row.wall_time_s = ctx.wall_time(row.wall_time_s);

  const auto dir = output_dir(ctx);
  const std::string stem = "convergence_" + experiments::to_string(scenario);
  if (ctx.format() == OutputFormat::Json) {
    const auto spec = experiments::scenario_spec(scenario);
    ordered_json doc{{"scenario", experiments::to_string(scenario)},
                     {"k", spec.vasicek.k},
                     {"theta", spec.vasicek.theta},
                     {"sigma", spec.vasicek.sigma},
                     {"r0", spec.vasicek.r0},
                     {"T", spec.maturity},
                     {"M", trunc.M},
                     {"H", trunc.H},
                     {"rows", ordered_json::array()}};
    for (const auto& row : rows) {
      doc["rows"].push_back({{"N", row.N},
                             {"price_ehrenfest", row.price_ehrenfest},
                             {"price_vasicek", row.price_vasicek},
                             {"rel_error", row.rel_error},
                             {"wall_time_s", row.wall_time_s},
                             {"r0_snapped", row.r0_snapped}});
    }
    emit(ctx, dir / (stem + ".json"), doc.dump(2) + "\n");
  } else {
    emit(ctx, dir / (stem + ".csv"), experiments::convergence_csv(rows));
  }
  return kExitOk;
}

// -------------------------------------------------------------- lowrate

int cmd_lowrate(Context& ctx) {
  experiments::LowrateSetup setup;
  setup.truncation = ctx.truncation(setup.truncation);
  const auto study = experiments::run_lowrate_study(setup, ctx.seed());
  const auto dir = output_dir(ctx);

  if (ctx.format() == OutputFormat::Json) {
    emit(ctx, dir / "lowrate_vasicek.json", curve_json(study.vasicek).dump(2) + "\n");
    emit(ctx, dir / "lowrate_ehrenfest.json", curve_json(study.ehrenfest).dump(2) + "\n");
    ordered_json paths{{"seed", ctx.seed()},
                       {"vasicek", ordered_json::array()},
                       {"ehrenfest", ordered_json::array({rate_path_json(study.ehrenfest_rate_path)})}};
    for (const auto& p : study.vasicek_paths) paths["vasicek"].push_back(rate_path_json(p));
    emit(ctx, dir / "paths_lowrate.json", paths.dump(2) + "\n");
  } else {
    emit(ctx, dir / "lowrate_vasicek.csv", experiments::curve_csv(study.vasicek));
    emit(ctx, dir / "lowrate_ehrenfest.csv", experiments::curve_csv(study.ehrenfest));
    for (std::size_t j = 0; j < study.vasicek_paths.size(); ++j) {
      emit(ctx, dir / ("paths_vasicek_" + std::to_string(j + 1) + ".csv"),
           experiments::rate_path_csv(study.vasicek_paths[j]));
    }
    emit(ctx, dir / "paths_ehrenfest_1.csv", experiments::rate_path_csv(study.ehrenfest_rate_path));
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrenfest short-rate model: zero-coupon bond pricing, path simulation and "
               "the Vasicek comparison studies. Rates are decimals (0.05 means 5%).",
               "ehrenfest"};
  app.require_subcommand(1);

  GlobalOptions opts;
  add_global_options(app, opts);

  PriceOptions price_opts;
  auto* price = app.add_subcommand("price", "Price a zero-coupon bond and print the result as JSON");
  add_global_options(*price, opts);
  price->add_option("--method", price_opts.method,
                    "Ehrenfest pricer: auto (symmetric when alpha = beta = 1), general or symmetric")
      ->check(CLI::IsMember({"auto", "general", "symmetric"}))
      ->default_str("auto");

  SimulateOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "Write sampled short-rate paths");
  add_global_options(*simulate, opts);
  simulate->add_option("--horizon", sim_opts.horizon, "Path length in years (overrides simulation.horizon)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--paths", sim_opts.paths, "Number of paths (overrides simulation.paths)")
      ->check(CLI::PositiveNumber);

  ConvergeOptions conv_opts;
  auto* converge = app.add_subcommand("converge", "Ehrenfest vs Vasicek price error against N");
  add_global_options(*converge, opts);
  converge->add_option("--scenario", conv_opts.scenario, "favourable or unfavourable")
      ->check(CLI::IsMember({"favourable", "unfavourable"}))
      ->default_str("favourable");
  converge->add_option("--Ns", conv_opts.Ns, "Comma-separated ball counts (default 4,8,16,32,64,128,200)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  auto* lowrate = app.add_subcommand("lowrate", "Low-rate case study: price curves over 1..30 years and sample paths");
  add_global_options(*lowrate, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx{opts, {}, out, err};
    if (opts.config) ctx.cfg = load_config(*opts.config);
    if (price->parsed()) return cmd_price(ctx, price_opts);
    if (simulate->parsed()) return cmd_simulate(ctx, sim_opts);
    if (converge->parsed()) return cmd_converge(ctx, conv_opts);
    if (lowrate->parsed()) return cmd_lowrate(ctx);
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OffGridError& e) {
    err << "error: " << e.what() << " (pass --snap to round)\n";
    return kExitOffGrid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ehrenfest::cli

#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>

namespace ehrenfest::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ConfigError(field + ": " + message);
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) fail(where.empty() ? item.key() : where + "." + item.key(), "unknown key");
  }
}

const json& section(const json& doc, const char* name) {
  const auto& s = doc.at(name);
  if (!s.is_object()) fail(name, "must be an object");
  return s;
}

double number(const json& obj, const std::string& where, const char* key) {
  const std::string field = where + "." + key;
  if (!obj.contains(key)) fail(field, "is required");
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(field, "must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(field, "must be finite");
  return x;
}

std::optional<double> optional_number(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  return number(obj, where, key);
}

std::int64_t integer(const json& obj, const std::string& where, const char* key) {
  const std::string field = where + "." + key;
  if (!obj.contains(key)) fail(field, "is required");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) fail(field, "must be an integer");
  return v.get<std::int64_t>();
}

std::optional<std::int64_t> optional_integer(const json& obj, const std::string& where,
                                             const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  return integer(obj, where, key);
}

int bounded_int(std::int64_t v, const std::string& field, std::int64_t lo) {
  if (v < lo) fail(field, "must be >= " + std::to_string(lo));
  if (v > std::numeric_limits<int>::max()) fail(field, "is too large");
  return static_cast<int>(v);
}

EhrenfestSection parse_ehrenfest(const json& s) {
  const std::string w = "ehrenfest";
  reject_unknown(s, w, {"N", "lambda", "alpha", "beta", "r_m", "r_M"});
  EhrenfestSection e;
  e.N = bounded_int(integer(s, w, "N"), w + ".N", 1);
  e.lambda = number(s, w, "lambda");
  if (!(e.lambda > 0.0)) fail(w + ".lambda", "must be > 0");
  e.alpha = number(s, w, "alpha");
  if (!(e.alpha > 0.0 && e.alpha <= 1.0)) fail(w + ".alpha", "must be in (0, 1]");
  e.beta = number(s, w, "beta");
  if (!(e.beta > 0.0 && e.beta <= 1.0)) fail(w + ".beta", "must be in (0, 1]");
  e.r_m = number(s, w, "r_m");
  e.r_M = number(s, w, "r_M");
  if (e.r_M < e.r_m) fail(w + ".r_M", "must be >= ehrenfest.r_m");
  return e;
}

pricing::VasicekParams parse_vasicek(const json& s) {
  const std::string w = "vasicek";
  reject_unknown(s, w, {"k", "theta", "sigma", "r0"});
  pricing::VasicekParams v;
  v.k = number(s, w, "k");
  if (!(v.k > 0.0)) fail(w + ".k", "must be > 0");
  v.theta = number(s, w, "theta");
  v.sigma = number(s, w, "sigma");
  if (!(v.sigma > 0.0)) fail(w + ".sigma", "must be > 0");
  v.r0 = number(s, w, "r0");
  return v;
}

PricingSection parse_pricing(const json& s) {
  const std::string w = "pricing";
  reject_unknown(s, w, {"t", "T", "r", "M", "H"});
  PricingSection p;
  p.t = optional_number(s, w, "t").value_or(0.0);
  p.T = optional_number(s, w, "T");
  if (p.T && *p.T < p.t) fail(w + ".T", "must be >= pricing.t");
  p.r = optional_number(s, w, "r");
  if (auto M = optional_integer(s, w, "M")) p.M = bounded_int(*M, w + ".M", 0);
  if (auto H = optional_integer(s, w, "H")) p.H = bounded_int(*H, w + ".H", 0);
  return p;
}

SimulationSection parse_simulation(const json& s) {
  const std::string w = "simulation";
  reject_unknown(s, w, {"horizon", "r0", "paths", "seed", "steps_per_year"});
  SimulationSection sim;
  sim.horizon = optional_number(s, w, "horizon");
  if (sim.horizon && !(*sim.horizon > 0.0)) fail(w + ".horizon", "must be > 0");
  sim.r0 = optional_number(s, w, "r0");
  if (auto n = optional_integer(s, w, "paths")) sim.paths = bounded_int(*n, w + ".paths", 1);
  if (s.contains("seed")) {
    const auto& v = s.at("seed");
    if (!v.is_number_unsigned()) fail(w + ".seed", "must be a non-negative integer");
    sim.seed = v.get<std::uint64_t>();
  }
  if (auto n = optional_integer(s, w, "steps_per_year")) {
    sim.steps_per_year = bounded_int(*n, w + ".steps_per_year", 1);
  }
  return sim;
}

OutputSection parse_output(const json& s) {
  const std::string w = "output";
  reject_unknown(s, w, {"path", "format"});
  OutputSection out;
  if (s.contains("path")) {
    if (!s.at("path").is_string()) fail(w + ".path", "must be a string");
    out.path = s.at("path").get<std::string>();
  }
  if (s.contains("format")) {
    if (!s.at("format").is_string()) fail(w + ".format", "must be \"csv\" or \"json\"");
    try {
      out.format = parse_format(s.at("format").get<std::string>());
    } catch (const ConfigError&) {
      fail(w + ".format", "must be \"csv\" or \"json\"");
    }
  }
  return out;
}

}  // namespace

shortrate::ShortRateModel EhrenfestSection::model() const {
  return shortrate::ShortRateModel(process::EhrenfestParams(N, lambda, alpha, beta), r_m, r_M);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("format: must be \"csv\" or \"json\"");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(doc, "", {"ehrenfest", "vasicek", "pricing", "simulation", "output"});
  if (doc.contains("ehrenfest") && doc.contains("vasicek")) {
    throw ConfigError("config: exactly one of \"ehrenfest\" or \"vasicek\" may be given");
  }
  RunConfig cfg;
  if (doc.contains("ehrenfest")) cfg.ehrenfest = parse_ehrenfest(section(doc, "ehrenfest"));
  if (doc.contains("vasicek")) cfg.vasicek = parse_vasicek(section(doc, "vasicek"));
  if (doc.contains("pricing")) cfg.pricing = parse_pricing(section(doc, "pricing"));
  if (doc.contains("simulation")) cfg.simulation = parse_simulation(section(doc, "simulation"));
  if (doc.contains("output")) cfg.output = parse_output(section(doc, "output"));
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

}  // namespace ehrenfest::cli

#include "ehrenfest/experiments/table_io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "ehrenfest/errors.hpp"

#include <unistd.h>

namespace ehrenfest::experiments {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "N,price_ehrenfest,price_vasicek,rel_error,wall_time_s\n";
  for (const auto& row : rows) {
    out += std::to_string(row.N);
    for (double v : {row.price_ehrenfest, row.price_vasicek, row.rel_error, row.wall_time_s}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string curve_csv(const ScenarioCurve& curve) {
  std::string out = "T_years,price\n";
  for (std::size_t i = 0; i < curve.maturities.size(); ++i) {
    out += format_double(curve.maturities[i]) + ',' + format_double(curve.prices[i]) + '\n';
  }
  return out;
}

std::string rate_path_csv(const shortrate::RatePath& path) {
  std::string out = "time,rate\n";
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    out += format_double(path.times[i]) + ',' + format_double(path.rates[i]) + '\n';
  }
  return out;
}

std::string state_path_csv(const process::PathSample& path) {
  std::string out = "time,state\n";
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    out += format_double(path.times[i]) + ',' + std::to_string(path.states[i]) + '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move result into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace ehrenfest::experiments

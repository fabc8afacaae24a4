#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace wavepack::cli {

// Everything a subcommand needs, as parsed from the command line.
struct RunConfig {
  std::string command;  // coeffs, estimate, predict, compare
  std::string basis = "mt";
  double alpha = 1.0;
  double x0 = 0.0;
  double omega = 0.0;
  std::optional<double> epsilon;
  std::optional<double> lambda;
  std::optional<long> n_min;
  std::optional<long> n_max;
  std::string method;  // empty selects the basis default
  std::optional<long> fft_size;
  std::string figure;
  std::string format = "csv";
  std::string out;
  bool allow_flagged = false;
  bool describe = false;
  bool extended = false;
  double calib_c = 1.0;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);

}  // namespace wavepack::cli

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace qhyp::cli {

// Resolved run configuration. Every field has a default; a config file only
// lists overrides.
struct RunConfig {
  std::optional<std::array<double, 5>> coeffs;
  std::optional<std::array<double, 4>> angles;

  double root_tol = 1e-10;
  double period_tol = 1e-9;
  double rational_tol = 1e-12;
  double lsq_rank_tol = 1e-8;
  double null_tol = 1e-9;

  int n_r = 32;
  int n_t = 64;
  int n_circle = 512;
  int n_edge = 32;
  int dual_n_r = 64;
  int dual_n_t = 128;

  int D = 16;
  int D_b = 12;
  int q_max = 16;
  int n_max = 10000;
  long long Q_max = 10000;

  std::uint64_t seed_first = 0;
  int seed_count = 100;
  int degree_bound = 3;
  int grid = 64;

  double h = 0.05;
  double xi_radius = 3.5;
  int xi_count = 9;

  std::string output_dir = "qhyp_out";
};

// Bad field, bad value or unparsable file. what() names the field or the
// line and column.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& c);
// Throws config_error for nonpositive tolerances or sizes below the module
// minimums.
void validate(const RunConfig& c);

// Field name → {type, default, minimum} for --schema.
nlohmann::json config_schema();

}  // namespace qhyp::cli

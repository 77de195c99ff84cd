#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qhyp/cli/config.hpp"
#include "qhyp/geometry.hpp"
#include "qhyp/symbol.hpp"

namespace qhyp::cli {

struct Context {
  RunConfig cfg;
  std::filesystem::path out_dir;
  std::ostream* out = nullptr;
  std::string command;
  std::string arguments;  // subcommand options as given; part of the input hash
};

// Thrown for bad user input that is not a config problem (missing operator,
// unreadable polynomial file, …); maps to exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wraps `result` with the command name, resolved config and a hash of the
// inputs, writes it atomically to out_dir/name and returns the path.
std::filesystem::path emit_json(const Context& ctx, const std::string& name, const nlohmann::json& result,
                                const std::string& extra_inputs = "");
std::filesystem::path emit_text(const Context& ctx, const std::string& name, const std::string& text);

SymbolTolerances symbol_tolerances(const RunConfig& cfg);
QuarticSymbol resolve_symbol(const RunConfig& cfg);
CharacteristicSystem resolve_system(const RunConfig& cfg);

nlohmann::json system_to_json(const CharacteristicSystem& sys);

int cmd_analyze(const Context& ctx);

struct BilliardArgs {
  double tau0 = 1.0;
  int orbit_steps = 64;
};
int cmd_billiard(const Context& ctx, const BilliardArgs& a);

int cmd_kernel(const Context& ctx);

struct TracesArgs {
  std::string u_path;
  std::string v_path;
  std::string domain = "disk";
  std::array<double, 2> apex{0.0, 1.0};
};
int cmd_traces(const Context& ctx, const TracesArgs& a);

struct MomentsArgs {
  std::string mode = "cauchy";
  std::string f_path;
  std::string data_path;
};
int cmd_moments(const Context& ctx, const MomentsArgs& a);

struct DualityArgs {
  std::string u_path;
  int kernel_q = 0;  // use the first kernel solution of this degree instead of --u
  std::string form = "both";
};
int cmd_duality(const Context& ctx, const DualityArgs& a);

struct MaxprinArgs {
  bool wave_demo = false;
  std::string seeds;  // "a..b"; empty → config seed_first/seed_count
  std::array<double, 2> apex{0.0, 1.0};
};
int cmd_maxprin(const Context& ctx, const MaxprinArgs& a);

struct QuadratureArgs {
  std::string kind = "disk";
  int n = 0;  // 0 → config sizes
  bool selftest = false;
};
int cmd_quadrature(const Context& ctx, const QuadratureArgs& a);

struct SuiteArgs {
  std::string run = "all";
};
int cmd_suite(const Context& ctx, const SuiteArgs& a);

// Pentagon on Γ₀ = [−1, 1] with characteristics 0 and 3 through the apex, 2
// through a and 1 through b.
CharacteristicPentagon cli_pentagon(const CharacteristicSystem& sys, std::array<double, 2> apex);

}  // namespace qhyp::cli

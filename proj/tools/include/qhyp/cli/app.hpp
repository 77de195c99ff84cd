#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhyp::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_usage = 64;

// Runs the command line `args` (without the program name). Status lines go to
// `out`, diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Config fields and subcommand options, as printed by --schema.
nlohmann::json schema();

}  // namespace qhyp::cli

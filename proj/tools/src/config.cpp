#include "qhyp/cli/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <variant>
#include <vector>

namespace qhyp::cli {

namespace {

using json = nlohmann::json;

using Member = std::variant<double RunConfig::*, int RunConfig::*, long long RunConfig::*,
                            std::uint64_t RunConfig::*, std::string RunConfig::*>;

struct Field {
  const char* name;
  Member member;
  double minimum;      // inclusive unless strict
  bool strict = false;  // value must exceed minimum
};

const std::vector<Field>& fields() {
  static const std::vector<Field> f{
      {"root_tol", &RunConfig::root_tol, 0.0, true},
      {"period_tol", &RunConfig::period_tol, 0.0, true},
      {"rational_tol", &RunConfig::rational_tol, 0.0, true},
      {"lsq_rank_tol", &RunConfig::lsq_rank_tol, 0.0, true},
      {"null_tol", &RunConfig::null_tol, 0.0, true},
      {"n_r", &RunConfig::n_r, 1},
      {"n_t", &RunConfig::n_t, 1},
      {"n_circle", &RunConfig::n_circle, 4},
      {"n_edge", &RunConfig::n_edge, 1},
      {"dual_n_r", &RunConfig::dual_n_r, 8},
      {"dual_n_t", &RunConfig::dual_n_t, 16},
      {"D", &RunConfig::D, 0},
      {"D_b", &RunConfig::D_b, 0},
      {"q_max", &RunConfig::q_max, 3},
      {"n_max", &RunConfig::n_max, 1},
      {"Q_max", &RunConfig::Q_max, 1},
      {"seed_first", &RunConfig::seed_first, 0},
      {"seed_count", &RunConfig::seed_count, 1},
      {"degree_bound", &RunConfig::degree_bound, 1},
      {"grid", &RunConfig::grid, 2},
      {"h", &RunConfig::h, 0.0, true},
      {"xi_radius", &RunConfig::xi_radius, 0.0, true},
      {"xi_count", &RunConfig::xi_count, 1},
      {"output_dir", &RunConfig::output_dir, 0},
  };
  return f;
}

double numeric_value(const RunConfig& c, const Member& m) {
  return std::visit(
      [&](auto p) -> double {
        using T = std::decay_t<decltype(c.*p)>;
        if constexpr (std::is_same_v<T, std::string>) return 0.0;
        else return static_cast<double>(c.*p);
      },
      m);
}

template <std::size_t N>
std::array<double, N> number_array(const json& v, const char* field) {
  if (!v.is_array() || v.size() != N)
    throw config_error("field '" + std::string(field) + "': expected an array of " +
                       std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!v[i].is_number())
      throw config_error("field '" + std::string(field) + "[" + std::to_string(i) + "]': expected a number");
    out[i] = v[i].get<double>();
  }
  return out;
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line, col = 1;
    else ++col;
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw config_error("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "coeffs") {
      c.coeffs = number_array<5>(v, "coeffs");
      continue;
    }
    if (key == "angles") {
      c.angles = number_array<4>(v, "angles");
      continue;
    }
    const Field* f = nullptr;
    for (const auto& cand : fields())
      if (key == cand.name) f = &cand;
    if (!f) throw config_error("unknown field '" + key + "'");
    std::visit(
        [&](auto p) {
          using T = std::decay_t<decltype(c.*p)>;
          if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) throw config_error("field '" + key + "': expected a string");
            c.*p = v.get<std::string>();
          } else if constexpr (std::is_same_v<T, double>) {
            if (!v.is_number()) throw config_error("field '" + key + "': expected a number");
            c.*p = v.get<double>();
          } else {
            if (!v.is_number_integer()) throw config_error("field '" + key + "': expected an integer");
            if constexpr (std::is_same_v<T, std::uint64_t>) {
              if (v.is_number_unsigned()) c.*p = v.get<std::uint64_t>();
              else if (v.get<long long>() < 0) throw config_error("field '" + key + "': must be ≥ 0");
              else c.*p = static_cast<std::uint64_t>(v.get<long long>());
            } else {
              const long long raw = v.get<long long>();
              if (raw < static_cast<long long>(std::numeric_limits<T>::min()) ||
                  raw > static_cast<long long>(std::numeric_limits<T>::max()))
                throw config_error("field '" + key + "': out of range");
              c.*p = static_cast<T>(raw);
            }
          }
        },
        f->member);
  }
  if (c.coeffs && c.angles) throw config_error("give either 'coeffs' or 'angles', not both");
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(path.string() + ": parse error at " + line_col(text, e.byte) + ": " + e.what());
  }
  try {
    return config_from_json(j);
  } catch (const config_error& e) {
    throw config_error(path.string() + ": " + e.what());
  }
}

json to_json(const RunConfig& c) {
  json j = json::object();
  if (c.coeffs) j["coeffs"] = *c.coeffs;
  if (c.angles) j["angles"] = *c.angles;
  for (const auto& f : fields()) std::visit([&](auto p) { j[f.name] = c.*p; }, f.member);
  return j;
}

void validate(const RunConfig& c) {
  for (const auto& f : fields()) {
    if (std::holds_alternative<std::string RunConfig::*>(f.member)) {
      if ((c.*std::get<std::string RunConfig::*>(f.member)).empty())
        throw config_error("field '" + std::string(f.name) + "': must not be empty");
      continue;
    }
    const double v = numeric_value(c, f.member);
    const bool ok = f.strict ? v > f.minimum : v >= f.minimum;
    if (!ok) {
      std::ostringstream msg;
      msg << "field '" << f.name << "': value " << v << " must be " << (f.strict ? "> " : "≥ ")
          << f.minimum;
      throw config_error(msg.str());
    }
  }
}

json config_schema() {
  const RunConfig defaults;
  json s = json::object();
  s["coeffs"] = {{"type", "array[5] of number"}, {"default", nullptr}};
  s["angles"] = {{"type", "array[4] of number"}, {"default", nullptr}};
  for (const auto& f : fields()) {
    json e;
    std::visit(
        [&](auto p) {
          using T = std::decay_t<decltype(defaults.*p)>;
          e["default"] = defaults.*p;
          if constexpr (std::is_same_v<T, std::string>) e["type"] = "string";
          else if constexpr (std::is_same_v<T, double>) e["type"] = "number";
          else e["type"] = "integer";
        },
        f.member);
    if (!std::holds_alternative<std::string RunConfig::*>(f.member))
      e[f.strict ? "exclusive_minimum" : "minimum"] = f.minimum;
    s[f.name] = e;
  }
  return s;
}

}  // namespace qhyp::cli

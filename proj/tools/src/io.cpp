#include "qhyp/cli/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace qhyp::cli {

using json = nlohmann::json;

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i, h >>= 4) buf[i] = digits[h & 0xf];
  buf[16] = '\0';
  return buf;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename into '" + path.string() + "': " + ec.message());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw std::runtime_error(path.string() + ": parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(col));
  }
}

json bipoly_to_json(const BiPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e.i, e.j, c}));
  return arr;
}

BiPoly bipoly_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("polynomial must be a list of [i, j, c] triples");
  BiPoly p;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& t = j[k];
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number())
      throw std::runtime_error("polynomial term " + std::to_string(k) + ": expected [i, j, c]");
    const int i = t[0].get<int>(), e2 = t[1].get<int>();
    if (i < 0 || e2 < 0) throw std::runtime_error("polynomial term " + std::to_string(k) + ": negative exponent");
    p.add_term({i, e2}, t[2].get<double>());
  }
  return p;
}

CsvTable::CsvTable(std::vector<std::string> header) {
  for (std::size_t i = 0; i < header.size(); ++i) text_ += (i ? "," : "") + header[i];
  text_ += "\n";
}

void CsvTable::add_row(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) text_ += (i ? "," : "") + format_double(values[i]);
  text_ += "\n";
}

void CsvTable::add_row(const std::string& first, std::span<const double> values) {
  text_ += first;
  for (double v : values) text_ += "," + format_double(v);
  text_ += "\n";
}

std::string CsvTable::str() const { return text_; }

}  // namespace qhyp::cli

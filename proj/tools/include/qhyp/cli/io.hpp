#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qhyp/poly.hpp"

namespace qhyp::cli {

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

// Shortest round-trip decimal form of x.
std::string format_double(double x);

// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

// Writes to a sibling temp file, then renames over `path`. Creates parent
// directories.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

// Throws std::runtime_error naming the file and line/column on parse errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

// BiPoly as a list of [i, j, c] triples for c·x1^i·x2^j, sorted by (i, j).
nlohmann::json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

// Comma-separated rows; doubles in shortest round-trip form.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::span<const double> values);
  // First column as text (e.g. an edge label), then doubles.
  void add_row(const std::string& first, std::span<const double> values);
  std::string str() const;

 private:
  std::string text_;
};

}  // namespace qhyp::cli

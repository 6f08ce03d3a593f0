#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rgbc/geometry.hpp"
#include "rgbc/rgg.hpp"

namespace rgbc {

/// Canonical float formatting for all text output: %.17g, which round-trips
/// any double exactly. Negative zero prints as "0".
std::string format_double(double x);

double parse_double(const std::string& s);
long parse_long(const std::string& s);

/// Minimal CSV: comma-separated cells, no quoting, LF line endings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);

void write_points_csv(const std::string& path, const std::vector<Point>& pts);
std::vector<Point> read_points_csv(const std::string& path);

void write_edges_csv(const std::string& path,
                     const std::vector<std::pair<int, int>>& edges);
std::vector<std::pair<int, int>> read_edges_csv(const std::string& path);

/// Flat run-config grammar: one `key = value` per line, `#` comments, blank
/// lines ignored, whitespace around keys and values trimmed. Duplicate keys
/// are rejected.
std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path);

}  // namespace rgbc

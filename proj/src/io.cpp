#include "rgbc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rgbc/error.hpp"

namespace rgbc {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // canonicalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    fail(Errc::ConfigError, "not a number: '" + s + "'");
  return v;
}

long parse_long(const std::string& s) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    fail(Errc::ConfigError, "not an integer: '" + s + "'");
  return v;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

void require_header(const CsvTable& t, const std::string& expected,
                    const std::string& path) {
  std::string got;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) got += ',';
    got += t.header[i];
  }
  if (got != expected)
    fail(Errc::ConfigError,
         path + ": expected header '" + expected + "', got '" + got + "'");
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ConfigError, "cannot open " + path);
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      fail(Errc::ConfigError, path + ": CRLF line endings are not supported");
    if (first) {
      t.header = split_row(line);
      first = false;
    } else if (!line.empty()) {
      t.rows.push_back(split_row(line));
    }
  }
  if (first) fail(Errc::ConfigError, path + ": empty file");
  return t;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ConfigError, "cannot write " + path);
  auto put_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  put_row(table.header);
  for (const auto& row : table.rows) put_row(row);
}

void write_points_csv(const std::string& path, const std::vector<Point>& pts) {
  CsvTable t;
  t.header = {"id", "x", "y"};
  t.rows.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    t.rows.push_back({std::to_string(i), format_double(pts[i].x),
                      format_double(pts[i].y)});
  write_csv(path, t);
}

std::vector<Point> read_points_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  require_header(t, "id,x,y", path);
  std::vector<Point> pts(t.rows.size());
  for (const auto& row : t.rows) {
    if (row.size() != 3) fail(Errc::ConfigError, path + ": malformed row");
    const long id = parse_long(row[0]);
    if (id < 0 || id >= static_cast<long>(pts.size()))
      fail(Errc::ConfigError, path + ": node ids must be 0..N-1");
    pts[id] = {parse_double(row[1]), parse_double(row[2])};
  }
  return pts;
}

void write_edges_csv(const std::string& path,
                     const std::vector<std::pair<int, int>>& edges) {
  CsvTable t;
  t.header = {"i", "j"};
  t.rows.reserve(edges.size());
  for (const auto& [i, j] : edges)
    t.rows.push_back({std::to_string(i), std::to_string(j)});
  write_csv(path, t);
}

std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, "cannot open config file " + path);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(Errc::ConfigError, path + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      fail(Errc::ConfigError,
           path + ":" + std::to_string(lineno) + ": empty key");
    for (const auto& [k, v] : kv)
      if (k == key)
        fail(Errc::ConfigError,
             path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv.emplace_back(key, value);
  }
  return kv;
}

std::vector<std::pair<int, int>> read_edges_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  require_header(t, "i,j", path);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    if (row.size() != 2) fail(Errc::ConfigError, path + ": malformed row");
    const long i = parse_long(row[0]);
    const long j = parse_long(row[1]);
    if (i < 0 || j <= i)
      fail(Errc::ConfigError, path + ": edges must satisfy 0 <= i < j");
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return edges;
}

}  // namespace rgbc

#include "lipsync/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace lipsync {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const Mat& m, const std::vector<std::string>& header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  if (!header.empty()) {
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) out << ',';
      out << header[i];
    }
    out << '\n';
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_double(m(r, c));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

bool parse_row(const std::string& line, std::vector<double>& row) {
  row.clear();
  const char* p = line.c_str();
  while (true) {
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(p, &end);
    if (end == p) return false;
    row.push_back(v);
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    if (*end == '\0') return true;
    if (*end != ',') return false;
    p = end + 1;
  }
}

}  // namespace

Mat read_csv(const std::string& path, int expected_cols) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    if (!parse_row(line, row)) {
      if (first) {
        first = false;
        continue;  // header line
      }
      throw std::runtime_error(path + ": unparseable row: " + line);
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error(path + ": ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": no data rows");
  if (expected_cols >= 0 && static_cast<int>(rows.front().size()) != expected_cols) {
    throw std::runtime_error(path + ": expected " + std::to_string(expected_cols) +
                             " columns, got " + std::to_string(rows.front().size()));
  }
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace lipsync

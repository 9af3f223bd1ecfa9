#pragma once

#include <string>
#include <vector>

#include "lipsync/common.hpp"

namespace lipsync {

// Numeric CSV helpers. Values are written with "%.17g" so a write/read cycle
// reproduces every double bit-for-bit.

std::string format_double(double v);

// Writes an optional header line followed by one row per matrix row.
void write_csv(const std::string& path, const Mat& m, const std::vector<std::string>& header);

// Reads a numeric CSV. A leading non-numeric line is treated as a header and
// skipped. Ragged rows are an error; expected_cols < 0 disables the check.
Mat read_csv(const std::string& path, int expected_cols = -1);

}  // namespace lipsync

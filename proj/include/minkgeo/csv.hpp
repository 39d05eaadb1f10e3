#pragma once

#include <string>
#include <vector>

namespace minkgeo {

/// Reads numeric CSV rows. Blank lines and lines starting with '#' are
/// skipped; a non-numeric first row is treated as a header and dropped.
/// Throws std::runtime_error when the file cannot be opened and
/// std::invalid_argument on malformed numeric data.
std::vector<std::vector<double>> read_csv_rows(const std::string& path);

}  // namespace minkgeo

#pragma once

#include <string>

#include "statgeo/analysis.hpp"

namespace statgeo {

// Column names: coordinates, yukawa, wdvv_residual, curv_alpha_<a>..., det_g, status.
std::vector<std::string> scan_columns(const ScanResult& result);

// Header row plus one row per grid point; numbers printed with 17 significant
// digits, failed rows carry nan values and the error text in `status`.
std::string to_csv(const ScanResult& result);

// Array of row objects with the same fields as the CSV (keys sorted, so any
// parser re-serializes it byte for byte); nan becomes null.
std::string to_json(const ScanResult& result);

// Shortest text that reads back to the same double ("0.5", "-1", "1e-06").
std::string format_number(double v);

}  // namespace statgeo

#pragma once

// Command-line front end: point, scan, verify, bec-asymptote, series.

#include <iosfwd>
#include <string>
#include <vector>

#include "statgeo/models.hpp"

namespace statgeo {

// Parses "classical", "bose" or "synthetic:<file>".
ModelPtr make_model(const std::string& id, const Units& units = Units::reduced());

// Parses "reduced" or "physical:h,m,kB".
Units parse_units(const std::string& text);

// args excludes the program name. Returns the process exit code:
// 0 on success, 1 when a verification check fails, 2 on usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace statgeo

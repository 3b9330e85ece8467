#pragma once

// Named numerical checks of the structural identities: Frobenius axioms of
// the statistical product, the connection-pencil identities, dual transport,
// flatness of the dually-flat pair, WDVV in two dimensions, the Bose-gas
// Yukawa closed form, series positivity and the classical limit.

#include <optional>
#include <string>
#include <vector>

#include "statgeo/models.hpp"

namespace statgeo {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string check;
  std::string model;
  CheckStatus status = CheckStatus::skipped;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

const std::vector<std::string>& check_names();

// Points at which model-dependent checks are evaluated: a 5x5 grid over
// beta in [0.5, 2], gamma in [0.1, 3] for the gases, fixed interior points
// of the box otherwise.
std::vector<Coords> check_points(const PotentialModel& model);

// Runs one named check. `tolerance` replaces the default when given.
// Throws std::invalid_argument for an unknown name.
CheckResult run_check(const std::string& name, const PotentialModel& model,
                      std::optional<double> tolerance = std::nullopt);

double default_tolerance(const std::string& name);

const char* to_string(CheckStatus status);

}  // namespace statgeo

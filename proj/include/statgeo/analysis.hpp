#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "statgeo/geometry.hpp"
#include "statgeo/models.hpp"

namespace statgeo {

// WDVV: C_ija g^ab C_bkl = C_jka g^ab C_bil for all (i,j,k,l).
struct WdvvResidual {
  double max_abs = 0.0;  // max over index tuples of |LHS - RHS|
  double scale = 0.0;    // max|C|^2 * max|g^-1|
  double noise = 0.0;    // bound on |LHS - RHS| caused by the error in C
  // Residual beyond the noise bound, relative to scale.
  double scaled() const { return scale > 0.0 ? std::max(0.0, max_abs - noise) / scale : 0.0; }
};

// c_accuracy: absolute error bound on each C_ijk (0 for exact partials).
WdvvResidual wdvv_residual(const MetricTensor& g, const SymmetricThirdTensor& c, double c_accuracy = 0.0);

// Absolute accuracy of the model's third partials at a point with metric g:
// zero for exact models, kFiniteDifferenceAccuracy * max(1, max|g|, max|C|) otherwise.
inline constexpr double kFiniteDifferenceAccuracy = 1e-6;
double third_partial_accuracy(const PotentialModel& model, const MetricTensor& g,
                              const SymmetricThirdTensor& c);
WdvvResidual wdvv_residual_at(const PotentialModel& model, std::span<const double> x);

// Yukawa term of the Bose gas from its polylogarithm closed form:
// 20 lambda^3 / A^3 [5 L5^2 L3 L1 Lm1 - 10 L5^2 L1^3 - 3 L5 L3^3 Lm1 + 11 L5 L3^2 L1^2 - 3 L3^4 L1]
// with A = 5 L5 L1 - 3 L3^2, Ls = Li_{s/2}(e^-gamma).
double bose_yukawa_closed_form(double beta, double gamma, const Units& units = Units::reduced());

// 2 zeta(3/2) lambda^3 / (5 sqrt(pi) zeta(5/2) sqrt(gamma)); leading term as gamma -> 0+.
double bec_asymptote(double beta, double gamma, const Units& units = Units::reduced());

struct SeriesCoefficients {
  std::vector<double> a;  // a_0 .. a_N
};

struct PositivitySeries {
  SeriesCoefficients normalizer;  // A(eta)
  SeriesCoefficients bracket;     // C A^3 / (20 lambda^3)
};

inline constexpr int kDefaultSeriesOrder = 12;
inline constexpr int kMaxSeriesOrder = 30;

// Taylor coefficients in eta from truncated Li_s(eta) = sum eta^k / k^s.
PositivitySeries positivity_series(int order = kDefaultSeriesOrder);

// ---------------------------------------------------------------------------
// Grid scans

struct GridAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  double at(int i) const;
};

struct ScanGrid {
  std::vector<GridAxis> axes;

  std::size_t size() const;
  // Row-major: the first axis varies slowest.
  Coords point(std::size_t row) const;
};

struct ScanRow {
  Coords x;
  double yukawa = 0.0;
  double wdvv_residual = 0.0;
  std::vector<double> curvature;  // max |R^l_ijk| of Gamma^alpha, one per alpha
  double det_g = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

struct ScanResult {
  std::vector<std::string> coordinate_names;
  std::vector<double> alphas;
  std::vector<ScanRow> rows;

  std::size_t succeeded() const;
};

inline const std::vector<double> kDefaultAlphas{-1.0, -0.5, 0.0, 0.5, 1.0};

// Never throws for model-domain failures; they become row errors.
ScanRow scan_point(const PotentialModel& model, std::span<const double> x,
                   std::span<const double> alphas);

// Reference implementation, one row after another.
ScanResult scan_serial(const PotentialModel& model, const ScanGrid& grid,
                       std::span<const double> alphas);

// OpenMP over rows; threads <= 0 uses the runtime default. Output is
// bit-identical to scan_serial.
ScanResult scan(const PotentialModel& model, const ScanGrid& grid, std::span<const double> alphas,
                int threads = 0);

}  // namespace statgeo

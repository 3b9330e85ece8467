#pragma once

// Parallel transport of tangent vectors along a coordinate curve with a fixed
// step classical Runge-Kutta integrator, and the metric pairing drift between
// two transported vectors.

#include <functional>
#include <span>

#include "statgeo/geometry.hpp"

namespace statgeo {

struct Curve {
  std::function<Coords(double)> point;     // t in [0, 1]
  std::function<Coords(double)> velocity;  // d point / dt
  double length = 0.0;                     // coordinate (Euclidean) length
};

Curve straight_line(const Coords& from, const Coords& to);

// Christoffel symbols Gamma^k_ij at a point.
using ConnectionProvider = std::function<Tensor3(std::span<const double>)>;

ConnectionProvider alpha_provider(const PotentialModel& model, double alpha);

inline constexpr int kStepsPerUnitLength = 200;
inline constexpr double kDualDriftFailure = 1e-3;

// Transports a single vector; returns its value at t = 1.
Vector parallel_transport(const ConnectionProvider& connection, const Curve& curve, const Vector& v0,
                          int steps_per_unit = kStepsPerUnitLength);

// Transports x0 under `for_x` and y0 under `for_y`, returning
// max over step endpoints of |g(X(t), Y(t)) - g(X0, Y0)|.
double pairing_drift(const PotentialModel& model, const ConnectionProvider& for_x,
                     const ConnectionProvider& for_y, const Curve& curve, const Vector& x0,
                     const Vector& y0, int steps_per_unit = kStepsPerUnitLength);

// Y under Gamma^alpha and X under its dual Gamma^-alpha; the pairing is
// conserved, so a drift above kDualDriftFailure throws TransportError.
double dual_pairing_drift(const PotentialModel& model, double alpha, const Curve& curve,
                          const Vector& x0, const Vector& y0,
                          int steps_per_unit = kStepsPerUnitLength);

}  // namespace statgeo

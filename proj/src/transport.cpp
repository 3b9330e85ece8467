#include "statgeo/transport.hpp"

#include <algorithm>
#include <array>
#include <vector>
#include <cmath>
#include <string>

#include "statgeo/error.hpp"

namespace statgeo {

namespace {

// dv^k/dt = -Gamma^k_ij cdot^i v^j
Vector transport_rate(const Tensor3& gamma, const Coords& velocity, const Vector& v) {
  const std::size_t n = gamma.dimension();
  Vector rate = Vector::Zero(n);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += gamma(k, i, j) * velocity[i] * v(j);
    rate(k) = -s;
  }
  return rate;
}

int step_count(const Curve& curve, int steps_per_unit) {
  if (steps_per_unit <= 0) throw std::invalid_argument("transport: steps_per_unit must be positive");
  return std::max(1, static_cast<int>(std::ceil(steps_per_unit * curve.length)));
}

// One RK4 step for vectors vs[q] transported under conns[q].
void rk4_step(std::span<const ConnectionProvider* const> conns, const Curve& curve, double t, double h,
              std::vector<Vector>& vs) {
  const std::size_t count = vs.size();
  auto rates = [&](double tt, const std::vector<Vector>& at) {
    const Coords p = curve.point(tt);
    const Coords v = curve.velocity(tt);
    std::vector<Vector> out(count);
    for (std::size_t q = 0; q < count; ++q) out[q] = transport_rate((*conns[q])(p), v, at[q]);
    return out;
  };
  auto shifted = [&](const std::vector<Vector>& k, double scale) {
    std::vector<Vector> out(count);
    for (std::size_t q = 0; q < count; ++q) out[q] = vs[q] + scale * k[q];
    return out;
  };
  const auto k1 = rates(t, vs);
  const auto k2 = rates(t + 0.5 * h, shifted(k1, 0.5 * h));
  const auto k3 = rates(t + 0.5 * h, shifted(k2, 0.5 * h));
  const auto k4 = rates(t + h, shifted(k3, h));
  for (std::size_t q = 0; q < count; ++q) vs[q] += (h / 6.0) * (k1[q] + 2.0 * k2[q] + 2.0 * k3[q] + k4[q]);
}

}  // namespace

Curve straight_line(const Coords& from, const Coords& to) {
  if (from.size() != to.size()) throw std::invalid_argument("straight_line: dimension mismatch");
  Coords delta(from.size());
  double len2 = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    delta[i] = to[i] - from[i];
    len2 += delta[i] * delta[i];
  }
  Curve c;
  c.point = [from, delta](double t) {
    Coords p(from.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = from[i] + t * delta[i];
    return p;
  };
  c.velocity = [delta](double) { return delta; };
  c.length = std::sqrt(len2);
  return c;
}

ConnectionProvider alpha_provider(const PotentialModel& model, double alpha) {
  return [&model, alpha](std::span<const double> x) {
    return alpha_connection_at(model, x, alpha, false).gamma;
  };
}

Vector parallel_transport(const ConnectionProvider& connection, const Curve& curve, const Vector& v0,
                          int steps_per_unit) {
  const int steps = step_count(curve, steps_per_unit);
  const double h = 1.0 / steps;
  const std::array<const ConnectionProvider*, 1> conns{&connection};
  std::vector<Vector> v{v0};
  for (int s = 0; s < steps; ++s) rk4_step(conns, curve, s * h, h, v);
  return v[0];
}

double pairing_drift(const PotentialModel& model, const ConnectionProvider& for_x,
                     const ConnectionProvider& for_y, const Curve& curve, const Vector& x0,
                     const Vector& y0, int steps_per_unit) {
  const std::size_t n = model.dimension();
  if (static_cast<std::size_t>(x0.size()) != n || static_cast<std::size_t>(y0.size()) != n) {
    throw std::invalid_argument("pairing_drift: vector dimension mismatch");
  }
  const int steps = step_count(curve, steps_per_unit);
  const double h = 1.0 / steps;
  const double initial = metric_at(model, curve.point(0.0)).inner(x0, y0);
  const std::array<const ConnectionProvider*, 2> conns{&for_x, &for_y};
  std::vector<Vector> xy{x0, y0};
  double drift = 0.0;
  for (int s = 0; s < steps; ++s) {
    rk4_step(conns, curve, s * h, h, xy);
    const double t = (s + 1 == steps) ? 1.0 : (s + 1) * h;
    drift = std::max(drift, std::abs(metric_at(model, curve.point(t)).inner(xy[0], xy[1]) - initial));
  }
  return drift;
}

double dual_pairing_drift(const PotentialModel& model, double alpha, const Curve& curve,
                          const Vector& x0, const Vector& y0, int steps_per_unit) {
  const double drift = pairing_drift(model, alpha_provider(model, -alpha), alpha_provider(model, alpha),
                                     curve, x0, y0, steps_per_unit);
  if (drift > kDualDriftFailure) {
    throw TransportError("dual transport drift " + std::to_string(drift) +
                         " exceeds the consistency threshold; check step size and inputs");
  }
  return drift;
}

}  // namespace statgeo

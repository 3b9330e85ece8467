#pragma once

// Real polylogarithms Li_s(eta) on eta in [0, 1] and the constants they need
// (Riemann zeta at real arguments, Gamma at half-integers via std::tgamma).
//
// Li_s(eta) = sum_{k>=1} eta^k / k^s.
//
// polylog() picks an evaluator by region:
//   * integer s <= 1             closed forms (log, rational, Eulerian numbers)
//   * eta <= 0.6                 direct series with compensated summation
//   * eta >  0.6, non-integer s  expansion about the branch point eta = 1,
//       Li_s(e^-g) = Gamma(1-s) g^(s-1) + sum_k zeta(s-k) (-g)^k / k!
//   * eta >  0.6, integer s >= 2 the logarithmic form of the same expansion
//
// All functions are pure and thread-safe.

#include <cmath>

namespace statgeo::special {

// eta below which the direct series is used.
inline constexpr double kSeriesCutoff = 0.6;

// Riemann zeta for real s != 1. Dirichlet-eta with Borwein acceleration for
// s >= 1/2; functional equation below that.
double zeta(double s);

// Li_s(eta). Throws DomainError for eta outside [0,1] or eta == 1 with s <= 1.
double polylog(double s, double eta);

// Li_s(e^-gamma) evaluated from gamma directly, gamma >= 0. Near the branch
// point this avoids the cancellation in gamma = -log(eta).
double polylog_exp(double s, double gamma);

// Direct Dirichlet series with Neumaier summation. Valid for any real s and
// eta in [0,1); slow near eta = 1 (tail-bounded truncation).
double polylog_series(double s, double eta);

// Branch-point expansion of Li_s(e^-gamma) for non-integer s, 0 < gamma < 2 pi.
double polylog_branch(double s, double gamma);

enum class AtZero { reject, limit };

// d Li_s / d eta = Li_{s-1}(eta) / eta on (0,1). At eta = 0 the call is
// rejected unless AtZero::limit is given, in which case the limit 1 is returned.
double polylog_derivative(double s, double eta, AtZero at_zero = AtZero::reject);

// Leading behaviour Gamma(1-s) gamma^(s-1) as gamma -> 0+, for s < 1.
// Cross-check only; not an evaluator.
double polylog_asymptotic(double s, double gamma);

inline double fugacity_from_gamma(double gamma) { return std::exp(-gamma); }
inline double gamma_from_fugacity(double eta) { return -std::log(eta); }

}  // namespace statgeo::special

#pragma once

// Metric and third-derivative components of the ideal gases written out
// component by component, independent of the model code.

#include <array>

#include "statgeo/models.hpp"
#include "statgeo/polylog.hpp"

namespace statgeo::testing {

struct GasTable {
  double g_bb, g_bg, g_gg;
  double c_bbb, c_bbg, c_bgg, c_ggg;
};

// f[k] stands for the fugacity factor with order lowered k times:
// eta for the classical gas, Li_{5/2-k}(eta) for the Bose gas.
inline GasTable gas_table(double beta, const std::array<double, 4>& f, const Units& units) {
  const double inv_l3 = units.inverse_cubed_wavelength(beta);
  return {15.0 / 4.0 * inv_l3 / (beta * beta) * f[0],
          3.0 / 2.0 * inv_l3 / beta * f[1],
          inv_l3 * f[2],
          -105.0 / 8.0 * inv_l3 / (beta * beta * beta) * f[0],
          -15.0 / 4.0 * inv_l3 / (beta * beta) * f[1],
          -3.0 / 2.0 * inv_l3 / beta * f[2],
          -inv_l3 * f[3]};
}

inline GasTable classical_table(double beta, double gamma, const Units& units = Units::reduced()) {
  const double eta = std::exp(-gamma);
  return gas_table(beta, {eta, eta, eta, eta}, units);
}

inline GasTable bose_table(double beta, double gamma, const Units& units = Units::reduced()) {
  const double eta = std::exp(-gamma);
  using special::polylog;
  return gas_table(beta, {polylog(2.5, eta), polylog(1.5, eta), polylog(0.5, eta), polylog(-0.5, eta)},
                   units);
}

}  // namespace statgeo::testing

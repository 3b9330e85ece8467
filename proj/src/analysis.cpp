#include "statgeo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "statgeo/error.hpp"
#include "statgeo/polylog.hpp"

namespace statgeo {

WdvvResidual wdvv_residual(const MetricTensor& g, const SymmetricThirdTensor& c, double c_accuracy) {
  const std::size_t n = g.dimension();
  const Matrix& ginv = g.inverse();

  // P(i,j,k,l) = C_ija g^ab C_bkl
  std::vector<double> pair(n * n * n * n, 0.0);
  auto at = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * n + j) * n + k) * n + l;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          double s = 0.0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) s += c(i, j, a) * ginv(a, b) * c(b, k, l);
          pair[at(i, j, k, l)] = s;
        }

  WdvvResidual out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          out.max_abs = std::max(out.max_abs, std::abs(pair[at(i, j, k, l)] - pair[at(j, k, i, l)]));
        }
  const double cmax = c.tensor().max_abs();
  const double ginv_max = ginv.cwiseAbs().maxCoeff();
  out.scale = cmax * cmax * ginv_max;
  // Each side sums n^2 products C g^-1 C; perturbing both C factors by d
  // moves a product by at most |g^-1| (2 d |C| + d^2).
  const double nn = static_cast<double>(n * n);
  out.noise = 2.0 * nn * ginv_max * (2.0 * c_accuracy * cmax + c_accuracy * c_accuracy);
  return out;
}

double third_partial_accuracy(const PotentialModel& model, const MetricTensor& g,
                              const SymmetricThirdTensor& c) {
  if (model.exact_partials()) return 0.0;
  return kFiniteDifferenceAccuracy *
         std::max({1.0, g.matrix().cwiseAbs().maxCoeff(), c.tensor().max_abs()});
}

WdvvResidual wdvv_residual_at(const PotentialModel& model, std::span<const double> x) {
  const LocalGeometry geo = local_geometry(model, x, false);
  return wdvv_residual(geo.metric, geo.ac, third_partial_accuracy(model, geo.metric, geo.ac));
}

double bose_yukawa_closed_form(double beta, double gamma, const Units& units) {
  if (!(beta > 0.0)) throw DomainError("bose_yukawa_closed_form: requires beta > 0");
  if (!(gamma > 0.0)) throw DomainError("bose_yukawa_closed_form: requires gamma > 0");
  const double l5 = special::polylog_exp(2.5, gamma);
  const double l3 = special::polylog_exp(1.5, gamma);
  const double l1 = special::polylog_exp(0.5, gamma);
  const double lm1 = special::polylog_exp(-0.5, gamma);
  const double a = 5.0 * l5 * l1 - 3.0 * l3 * l3;
  if (std::abs(a) < 1e-300) throw std::runtime_error("bose_yukawa_closed_form: A vanishes");
  const double bracket = 5.0 * l5 * l5 * l3 * l1 * lm1 - 10.0 * l5 * l5 * l1 * l1 * l1 -
                         3.0 * l5 * l3 * l3 * l3 * lm1 + 11.0 * l5 * l3 * l3 * l1 * l1 -
                         3.0 * l3 * l3 * l3 * l3 * l1;
  return 20.0 * units.cubed_wavelength(beta) / (a * a * a) * bracket;
}

double bec_asymptote(double beta, double gamma, const Units& units) {
  if (!(beta > 0.0)) throw DomainError("bec_asymptote: requires beta > 0");
  if (!(gamma > 0.0)) throw DomainError("bec_asymptote: requires gamma > 0");
  const double zeta32 = special::zeta(1.5);
  const double zeta52 = special::zeta(2.5);
  return 2.0 * zeta32 * units.cubed_wavelength(beta) /
         (5.0 * std::sqrt(std::numbers::pi) * zeta52 * std::sqrt(gamma));
}

namespace {

using Poly = std::vector<double>;

Poly truncated_polylog(double s, int order) {
  Poly p(order + 1, 0.0);
  for (int k = 1; k <= order; ++k) p[k] = std::pow(static_cast<double>(k), -s);
  return p;
}

Poly multiply(const Poly& a, const Poly& b) {
  const std::size_t len = a.size();
  Poly out(len, 0.0);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly product(std::initializer_list<const Poly*> factors) {
  Poly out((*factors.begin())->size(), 0.0);
  out[0] = 1.0;
  for (const Poly* f : factors) out = multiply(out, *f);
  return out;
}

void accumulate(Poly& into, double weight, const Poly& term) {
  for (std::size_t k = 0; k < into.size(); ++k) into[k] += weight * term[k];
}

}  // namespace

PositivitySeries positivity_series(int order) {
  if (order < 0 || order > kMaxSeriesOrder) {
    throw std::invalid_argument("positivity_series: order must be in [0, " +
                                std::to_string(kMaxSeriesOrder) + "]");
  }
  const Poly l5 = truncated_polylog(2.5, order);
  const Poly l3 = truncated_polylog(1.5, order);
  const Poly l1 = truncated_polylog(0.5, order);
  const Poly lm1 = truncated_polylog(-0.5, order);

  Poly a(order + 1, 0.0);
  accumulate(a, 5.0, product({&l5, &l1}));
  accumulate(a, -3.0, product({&l3, &l3}));

  Poly bracket(order + 1, 0.0);
  accumulate(bracket, 5.0, product({&l5, &l5, &l3, &l1, &lm1}));
  accumulate(bracket, -10.0, product({&l5, &l5, &l1, &l1, &l1}));
  accumulate(bracket, -3.0, product({&l5, &l3, &l3, &l3, &lm1}));
  accumulate(bracket, 11.0, product({&l5, &l3, &l3, &l1, &l1}));
  accumulate(bracket, -3.0, product({&l3, &l3, &l3, &l3, &l1}));
  return {{std::move(a)}, {std::move(bracket)}};
}

// ---------------------------------------------------------------------------

double GridAxis::at(int i) const {
  if (count <= 1) return lo;
  if (i == count - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::size_t ScanGrid::size() const {
  if (axes.empty()) return 0;
  std::size_t total = 1;
  for (const auto& a : axes) total *= static_cast<std::size_t>(std::max(a.count, 0));
  return total;
}

Coords ScanGrid::point(std::size_t row) const {
  Coords x(axes.size());
  for (std::size_t q = axes.size(); q-- > 0;) {
    const auto count = static_cast<std::size_t>(axes[q].count);
    x[q] = axes[q].at(static_cast<int>(row % count));
    row /= count;
  }
  return x;
}

std::size_t ScanResult::succeeded() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.ok(); }));
}

ScanRow scan_point(const PotentialModel& model, std::span<const double> x,
                   std::span<const double> alphas) {
  ScanRow row;
  row.x.assign(x.begin(), x.end());
  try {
    const LocalGeometry geo = local_geometry(model, x, true);
    row.yukawa = yukawa_term(geo.metric, geo.ac);
    row.wdvv_residual = wdvv_residual(geo.metric, geo.ac).max_abs;
    row.det_g = geo.metric.determinant();
    const ConnectionField lc = levi_civita(geo, true);
    row.curvature.reserve(alphas.size());
    for (double alpha : alphas) {
      row.curvature.push_back(riemann_curvature(alpha_connection(lc, geo, alpha)).max_abs());
    }
  } catch (const DomainError& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.yukawa = row.wdvv_residual = row.det_g = nan;
    row.curvature.assign(alphas.size(), nan);
    row.error = e.what();
  }
  return row;
}

}  // namespace statgeo

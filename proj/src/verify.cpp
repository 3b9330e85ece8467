#include "statgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "statgeo/analysis.hpp"
#include "statgeo/error.hpp"
#include "statgeo/geometry.hpp"
#include "statgeo/transport.hpp"

namespace statgeo {

namespace {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table{
      {"frobenius-axioms", 1e-10},  {"prop3-identities", 1e-10}, {"dual-transport", 1e-6},
      {"flat-alpha", 1e-6},         {"wdvv-2d", 1e-9},           {"yukawa-consistency", 1e-8},
      {"series-positivity", 0.0},   {"classical-limit", 1e-3},
  };
  return table;
}

bool is_gas(const PotentialModel& model) {
  return dynamic_cast<const IdealGasModel*>(&model) != nullptr;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

CheckResult judge(CheckResult r, bool ok) {
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckResult skipped(CheckResult r, std::string reason) {
  r.status = CheckStatus::skipped;
  r.detail = std::move(reason);
  return r;
}

double max_diff(const Tensor3& a, const Tensor3& b) {
  double d = 0.0;
  for (std::size_t q = 0; q < a.data().size(); ++q) d = std::max(d, std::abs(a.data()[q] - b.data()[q]));
  return d;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

CheckResult frobenius_axioms(const PotentialModel& model, CheckResult r) {
  std::mt19937_64 rng(20240611);
  double worst_invariance = 0.0;
  double worst_commutativity = 0.0;
  double worst_symmetry = 0.0;
  for (const Coords& x : check_points(model)) {
    const LocalGeometry geo = local_geometry(model, x, false);
    const double cmax = geo.ac.tensor().max_abs();
    worst_symmetry = std::max(worst_symmetry, geo.ac.symmetry_defect() / std::max(cmax, 1e-300));
    for (int t = 0; t < 100; ++t) {
      const Vector a = random_vector(rng, model.dimension());
      const Vector b = random_vector(rng, model.dimension());
      const Vector c = random_vector(rng, model.dimension());
      const Vector ab = statistical_product(geo.metric, geo.ac, a, b);
      const Vector ba = statistical_product(geo.metric, geo.ac, b, a);
      worst_commutativity = std::max(worst_commutativity, (ab - ba).cwiseAbs().maxCoeff());
      const double lhs = geo.metric.inner(ab, c);
      const double rhs = geo.metric.inner(a, statistical_product(geo.metric, geo.ac, b, c));
      const double scale = std::max(cmax * a.lpNorm<1>() * b.lpNorm<1>() * c.lpNorm<1>(), 1e-300);
      worst_invariance = std::max(worst_invariance, std::abs(lhs - rhs) / scale);
    }
  }
  r.measured = worst_invariance;
  r.detail = "commutativity " + fmt(worst_commutativity) + ", C symmetry " + fmt(worst_symmetry) +
             ", invariance (scaled) " + fmt(worst_invariance);
  return judge(r, worst_commutativity == 0.0 && worst_symmetry <= r.tolerance &&
                      worst_invariance <= r.tolerance);
}

CheckResult prop3_identities(const PotentialModel& model, CheckResult r) {
  double worst = 0.0;
  for (const Coords& x : check_points(model)) {
    const LocalGeometry geo = local_geometry(model, x, true);
    const ConnectionField lc = levi_civita(geo, true);
    const ConnectionField primal = alpha_connection(lc, geo, -0.5);
    const ConnectionField dual = alpha_connection(lc, geo, 0.5);
    const double gmax = std::max(1.0, dual.gamma.max_abs());
    // Gamma* = 2 LC - Gamma
    worst = std::max(worst, max_diff(dual_connection(primal, lc).gamma, dual.gamma) / gmax);
    // C = Gamma* - Gamma, lowered
    const Tensor3 lowered_primal = lower(primal, geo.metric);
    const Tensor3 lowered_dual = lower(dual, geo.metric);
    const double cmax = std::max(1e-300, geo.ac.tensor().max_abs());
    double d = 0.0;
    for (std::size_t q = 0; q < lowered_dual.data().size(); ++q) {
      d = std::max(d, std::abs(lowered_dual.data()[q] - lowered_primal.data()[q] - geo.ac.tensor().data()[q]));
    }
    worst = std::max(worst, d / cmax);
    // LC = 1/2 (Gamma + Gamma*) reduces to 1/2 g^-1 C in Hessian coordinates.
    worst = std::max(worst, max_diff(lc.gamma, hessian_levi_civita(geo)) / gmax);
    // Pencil: dual of alpha is -alpha.
    const ConnectionField a = alpha_connection(lc, geo, 0.3);
    const ConnectionField minus_a = alpha_connection(lc, geo, -0.3);
    worst = std::max(worst, max_diff(dual_connection(a, lc).gamma, minus_a.gamma) / gmax);
  }
  r.measured = worst;
  r.detail = "max scaled deviation " + fmt(worst);
  return judge(r, worst <= r.tolerance);
}

CheckResult dual_transport(const PotentialModel& model, CheckResult r) {
  Coords from, to;
  if (is_gas(model)) {
    from = {0.8, 0.4};
    to = {1.6, 1.6};
  } else {
    const auto pts = check_points(model);
    from = pts[1];
    to = pts[2];
  }
  const Curve curve = straight_line(from, to);
  Vector x0 = Vector::Ones(model.dimension());
  Vector y0 = Vector::Zero(model.dimension());
  for (std::size_t i = 0; i < model.dimension(); ++i) y0(i) = (i % 2 == 0) ? 0.5 : -0.25;
  try {
    r.measured = dual_pairing_drift(model, 0.5, curve, x0, y0);
  } catch (const TransportError& e) {
    r.measured = std::numeric_limits<double>::infinity();
    r.detail = e.what();
    return judge(r, false);
  }
  const double single = pairing_drift(model, alpha_provider(model, -0.5), alpha_provider(model, -0.5),
                                      curve, x0, y0);
  r.detail = "dual pair drift " + fmt(r.measured) + ", both under Gamma: " + fmt(single);
  return judge(r, r.measured <= r.tolerance);
}

CheckResult flat_alpha(const PotentialModel& model, CheckResult r) {
  double worst = 0.0;
  double lc_curvature = 0.0;
  for (const Coords& x : check_points(model)) {
    const LocalGeometry geo = local_geometry(model, x, true);
    const ConnectionField lc = levi_civita(geo, true);
    for (double alpha : {-0.5, 0.5}) {
      const ConnectionField conn = alpha_connection(lc, geo, alpha);
      const double gmax = conn.gamma.max_abs();
      worst = std::max(worst, riemann_curvature(conn).max_abs() / (1.0 + gmax * gmax));
    }
    lc_curvature = std::max(lc_curvature, riemann_curvature(lc).max_abs());
  }
  r.measured = worst;
  r.detail = "alpha = +-1/2 scaled curvature " + fmt(worst) + ", Levi-Civita max |R| " + fmt(lc_curvature);
  return judge(r, worst <= r.tolerance);
}

CheckResult wdvv_2d(const PotentialModel& model, CheckResult r) {
  if (model.dimension() != 2) {
    return skipped(r, "model dimension is " + std::to_string(model.dimension()) + ", check needs n = 2");
  }
  double worst = 0.0;
  for (const Coords& x : check_points(model)) worst = std::max(worst, wdvv_residual_at(model, x).scaled());
  r.measured = worst;
  r.detail = "max scaled WDVV residual " + fmt(worst);
  return judge(r, worst <= r.tolerance);
}

CheckResult yukawa_consistency(const PotentialModel& model, CheckResult r) {
  const auto* bose = dynamic_cast<const BoseIdealGas*>(&model);
  if (bose == nullptr) return skipped(r, "closed form exists for the Bose gas only");
  double worst = 0.0;
  for (const Coords& x : check_points(model)) {
    const LocalGeometry geo = local_geometry(model, x, false);
    const double contraction = yukawa_term(geo.metric, geo.ac);
    const double closed = bose_yukawa_closed_form(x[0], x[1], bose->units());
    worst = std::max(worst, std::abs(contraction - closed) / std::abs(closed));
  }
  r.measured = worst;
  r.detail = "max relative gap " + fmt(worst);
  return judge(r, worst <= r.tolerance);
}

CheckResult series_positivity(CheckResult r) {
  const PositivitySeries s = positivity_series(kDefaultSeriesOrder);
  const auto& a = s.normalizer.a;
  const auto& b = s.bracket.a;
  bool ok = a[2] == 2.0 && a[3] > 2.2 && b[6] > 0.33 && b[7] > 1.29 && b[8] > 2.85;
  double min_coeff = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kDefaultSeriesOrder; ++k) {
    if (k >= 2) min_coeff = std::min(min_coeff, a[k]);
    if (k >= 6) min_coeff = std::min(min_coeff, b[k]);
    if (k < 2 && a[k] != 0.0) ok = false;
    if (k < 6 && std::abs(b[k]) > 1e-12) ok = false;
  }
  ok = ok && min_coeff > r.tolerance;
  r.measured = min_coeff;
  std::ostringstream d;
  d.precision(4);
  d << "A: a2=" << a[2] << " a3=" << a[3] << "; bracket: a6=" << b[6] << " a7=" << b[7] << " a8=" << b[8]
    << "; min positive coefficient " << min_coeff << " (N=" << kDefaultSeriesOrder << ")";
  r.detail = d.str();
  return judge(r, ok);
}

CheckResult classical_limit(const PotentialModel& model, CheckResult r) {
  const auto* bose = dynamic_cast<const BoseIdealGas*>(&model);
  if (bose == nullptr) return skipped(r, "compares the Bose gas against the classical gas");
  const ClassicalIdealGas classical(bose->units());
  double worst = 0.0;
  for (double beta : {0.5, 1.0, 2.0}) {
    for (double gamma : {8.0, 10.0, 12.0}) {
      const Coords x{beta, gamma};
      const Jet qb = model.jet(x, 3);
      const Jet qc = classical.jet(x, 3);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          worst = std::max(worst, std::abs(qb.d2(i, j) / qc.d2(i, j) - 1.0));
          for (std::size_t k = 0; k < 2; ++k) worst = std::max(worst, std::abs(qb.d3(i, j, k) / qc.d3(i, j, k) - 1.0));
        }
    }
  }
  r.measured = worst;
  r.detail = "max relative component gap for gamma >= 8: " + fmt(worst);
  return judge(r, worst <= r.tolerance);
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "frobenius-axioms", "prop3-identities",   "dual-transport",    "flat-alpha",
      "wdvv-2d",          "yukawa-consistency", "series-positivity", "classical-limit"};
  return names;
}

double default_tolerance(const std::string& name) {
  const auto it = default_tolerances().find(name);
  if (it == default_tolerances().end()) throw std::invalid_argument("unknown check '" + name + "'");
  return it->second;
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

std::vector<Coords> check_points(const PotentialModel& model) {
  std::vector<Coords> points;
  if (is_gas(model)) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) points.push_back({0.5 + 1.5 * i / 4.0, 0.1 + 2.9 * j / 4.0});
    return points;
  }
  const auto* fd = dynamic_cast<const FiniteDifferenceModel*>(&model);
  if (fd == nullptr) throw std::invalid_argument("check_points: unsupported model type");
  // Centre plus fixed offsets at up to 60% of each half-width.
  static constexpr double kPattern[5][6] = {{0, 0, 0, 0, 0, 0},
                                            {0.6, -0.4, 0.5, -0.3, 0.2, -0.1},
                                            {-0.5, 0.3, -0.6, 0.4, -0.2, 0.5},
                                            {0.25, 0.55, -0.35, -0.45, 0.6, 0.15},
                                            {-0.3, -0.6, 0.2, 0.55, -0.5, -0.4}};
  for (const auto& row : kPattern) {
    Coords x(model.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto [lo, hi] = fd->box().bounds[i];
      x[i] = 0.5 * (lo + hi) + row[i % 6] * 0.5 * (hi - lo);
    }
    points.push_back(std::move(x));
  }
  return points;
}

CheckResult run_check(const std::string& name, const PotentialModel& model,
                      std::optional<double> tolerance) {
  CheckResult r;
  r.check = name;
  r.model = name == "series-positivity" ? "-" : model.id();
  r.tolerance = tolerance.value_or(default_tolerance(name));
  if (name == "frobenius-axioms") return frobenius_axioms(model, r);
  if (name == "prop3-identities") return prop3_identities(model, r);
  if (name == "dual-transport") return dual_transport(model, r);
  if (name == "flat-alpha") return flat_alpha(model, r);
  if (name == "wdvv-2d") return wdvv_2d(model, r);
  if (name == "yukawa-consistency") return yukawa_consistency(model, r);
  if (name == "series-positivity") return series_positivity(r);
  if (name == "classical-limit") return classical_limit(model, r);
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace statgeo

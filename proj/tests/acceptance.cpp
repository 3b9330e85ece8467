// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gas_tables.hpp"
#include "statgeo/analysis.hpp"
#include "statgeo/geometry.hpp"
#include "statgeo/polylog.hpp"
#include "statgeo/transport.hpp"
#include "statgeo/verify.hpp"

using namespace statgeo;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ScanGrid gas_grid(int n) { return {{{"beta", 0.5, 2.0, n}, {"gamma", 0.1, 3.0, n}}}; }

Outcome c1_classical_yukawa() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto model = classical_ideal_gas();
  const ScanGrid grid = gas_grid(20);
  double worst_c = 0.0;
  double worst_full = 0.0;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const Coords x = grid.point(r);
    const LocalGeometry geo = local_geometry(*model, x, false);
    const YukawaParts y = yukawa_parts(geo.metric, geo.ac);
    const double unit = Units::reduced().cubed_wavelength(x[0]) * std::exp(x[1]);  // lambda^3 / eta
    worst_c = std::max(worst_c, std::abs(y.value()) / unit);
    worst_full = std::max(worst_full, std::abs(y.full / (20.0 / 3.0 * unit) - 1.0));
  }
  const double t = seconds_since(t0);
  return {worst_c <= 1e-9 && worst_full <= 1e-8 && t < 1.0,
          "max |C|/(lambda^3/eta) " + sci(worst_c) + ", first contraction rel err " + sci(worst_full) +
              ", " + fmt("%.3f s", t)};
}

Outcome c2_tables() {
  double worst = 0.0;
  for (const auto& model : {classical_ideal_gas(), bose_ideal_gas()}) {
    const bool bose = model->id() == "bose";
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const double beta = 0.5 + 1.5 * i / 4.0;
        const double gamma = 0.1 + 2.9 * j / 4.0;
        const auto t = bose ? testing::bose_table(beta, gamma) : testing::classical_table(beta, gamma);
        const Jet jet = model->jet(Coords{beta, gamma}, 3);
        const std::pair<double, double> pairs[] = {
            {jet.d2(0, 0), t.g_bb},       {jet.d2(0, 1), t.g_bg},       {jet.d2(1, 1), t.g_gg},
            {jet.d3(0, 0, 0), t.c_bbb},   {jet.d3(0, 0, 1), t.c_bbg},   {jet.d3(0, 1, 1), t.c_bgg},
            {jet.d3(1, 1, 1), t.c_ggg}};
        for (const auto& [got, want] : pairs) worst = std::max(worst, std::abs(got / want - 1.0));
      }
  }
  return {worst <= 1e-10, "max relative deviation over 2 x 25 points " + sci(worst)};
}

Outcome c3_yukawa_cross() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto model = bose_ideal_gas();
  const ScanGrid grid = gas_grid(20);
  double worst = 0.0;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const Coords x = grid.point(r);
    const LocalGeometry geo = local_geometry(*model, x, false);
    const double closed = bose_yukawa_closed_form(x[0], x[1]);
    worst = std::max(worst, std::abs(yukawa_term(geo.metric, geo.ac) / closed - 1.0));
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-8 && t < 5.0, "max relative gap " + sci(worst) + ", " + fmt("%.3f s", t)};
}

Outcome c4_asymptote() {
  std::string detail = "ratio";
  double prev = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double last = 0.0;
  for (double g : {1e-2, 1e-4, 1e-6}) {
    last = bose_yukawa_closed_form(1.0, g) / bec_asymptote(1.0, g);
    detail += " " + fmt("%.6f", last) + " (gamma=" + fmt("%g", g) + ")";
    monotone = monotone && std::abs(last - 1.0) < prev;
    prev = std::abs(last - 1.0);
  }
  // Tolerance 2% at gamma = 1e-6; the oracle ratio is 1.00102.
  return {last >= 0.98 && last <= 1.02 && monotone, detail + (monotone ? ", monotone" : ", not monotone")};
}

Outcome c5_nonnegativity() {
  const auto model = bose_ideal_gas();
  double min_y = std::numeric_limits<double>::infinity();
  for (const ScanGrid& grid : {gas_grid(20), ScanGrid{{{"beta", 0.5, 2.0, 10}, {"gamma", 1e-4, 3.0, 30}}}}) {
    const ScanResult r = scan(*model, grid, std::vector<double>{});
    for (const auto& row : r.rows) min_y = std::min(min_y, row.yukawa);
  }
  double worst_limit = 0.0;
  for (double beta : {0.5, 1.0, 2.0}) {
    const double lam3 = Units::reduced().cubed_wavelength(beta);
    const LocalGeometry geo = local_geometry(*model, Coords{beta, 10.0}, false);
    worst_limit = std::max(worst_limit, yukawa_term(geo.metric, geo.ac) / lam3);
  }
  const bool nonneg = min_y >= -1e-10;
  const bool limit = worst_limit <= 1e-6;
  return {nonneg && limit, "min yukawa " + sci(min_y) + (nonneg ? " (ok)" : " (negative)") +
                               "; at gamma=10 yukawa/lambda^3 = " + fmt("%.6f", worst_limit) +
                               (limit ? " (ok)" : " (limit is 20*2^-1.5/8 = 0.8839, not 0)")};
}

Outcome c6_series() {
  const CheckResult r = run_check("series-positivity", *classical_ideal_gas());
  return {r.status == CheckStatus::pass, r.detail};
}

Outcome run_checks(const std::string& name, const std::vector<ModelPtr>& models) {
  bool ok = true;
  std::string detail;
  for (const auto& m : models) {
    const CheckResult r = run_check(name, *m);
    ok = ok && r.status == CheckStatus::pass;
    detail += (detail.empty() ? "" : "; ") + m->id() + ": " + to_string(r.status) + " " + sci(r.measured);
  }
  return {ok, name + " " + detail};
}

Outcome c7_frobenius() { return run_checks("frobenius-axioms", {classical_ideal_gas(), bose_ideal_gas()}); }

Outcome c8_connections() {
  const Outcome prop3 = run_checks("prop3-identities", {classical_ideal_gas(), bose_ideal_gas()});
  const Outcome dual = run_checks("dual-transport", {classical_ideal_gas(), bose_ideal_gas()});
  const auto bose = bose_ideal_gas();
  const auto gamma = alpha_provider(*bose, -0.5);
  const Vector x0 = Vector::Ones(2);
  const Vector y0 = (Vector(2) << 0.5, -0.25).finished();
  const double single = pairing_drift(*bose, gamma, gamma, straight_line({0.8, 0.4}, {1.6, 1.6}), x0, y0);
  return {prop3.pass && dual.pass && single > 1e-3,
          prop3.detail + " | " + dual.detail + " | single-connection drift (bose) " + sci(single)};
}

Outcome c9_flatness() {
  const Outcome flat = run_checks("flat-alpha", {classical_ideal_gas(), bose_ideal_gas()});
  const auto bose = bose_ideal_gas();
  const Coords x{1.0, 0.5};
  const double r0 = riemann_curvature(alpha_connection_at(*bose, x, 0.0)).max_abs();
  // Finite-difference oracle: curvature from numerically differentiated Gamma.
  ConnectionField lc = alpha_connection_at(*bose, x, 0.0, false);
  Tensor4 d(2);
  for (std::size_t m = 0; m < 2; ++m) {
    const double h = 1e-5;
    Coords p = x, q = x;
    p[m] += h;
    q[m] -= h;
    const Tensor3 gp = alpha_connection_at(*bose, p, 0.0, false).gamma;
    const Tensor3 gq = alpha_connection_at(*bose, q, 0.0, false).gamma;
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) d(m, k, i, j) = (gp(k, i, j) - gq(k, i, j)) / (2 * h);
  }
  lc.dgamma = d;
  const double oracle = riemann_curvature(lc).max_abs();
  const bool agree = std::abs(r0 - oracle) <= 1e-6 * oracle;
  return {flat.pass && r0 > 1e-4 && agree,
          flat.detail + " | LC curvature (bose, 1, 0.5) " + sci(r0) + ", FD oracle " + sci(oracle)};
}

Outcome c10_wdvv() {
  std::vector<ModelPtr> two_d{classical_ideal_gas(), bose_ideal_gas(),
                              synthetic_potential(quadratic_spec(2))};
  bool ok = true;
  std::string detail = "2-D scaled residual:";
  for (const auto& m : two_d) {
    const CheckResult r = run_check("wdvv-2d", *m);
    ok = ok && r.status == CheckStatus::pass;
    detail += " " + m->id() + " " + sci(r.measured) + (r.status == CheckStatus::pass ? "" : " (FAIL)");
  }
  const auto cubic = synthetic_potential(cubic3d_spec());
  double min_scaled = std::numeric_limits<double>::infinity();
  double min_curv = std::numeric_limits<double>::infinity();
  for (const Coords& x : check_points(*cubic)) {
    if (x == Coords{0.0, 0.0, 0.0}) continue;  // not generic
    min_scaled = std::min(min_scaled, wdvv_residual_at(*cubic, x).scaled());
    min_curv = std::min(min_curv, riemann_curvature(alpha_connection_at(*cubic, x, 0.3)).max_abs());
  }
  const bool cubic_ok = min_scaled > 1e-3 && min_curv > 1e-6;
  return {ok && cubic_ok, detail + " | cubic3d min scaled residual " + sci(min_scaled) +
                              ", min Dubrovin curvature (alpha=0.3) " + sci(min_curv)};
}

Outcome c11_polylog() {
  using namespace special;
  double li1 = 0.0;
  for (int k = 1; k <= 50; ++k) {
    const double eta = (k - 0.5) / 50.0;
    li1 = std::max(li1, std::abs(polylog(1.0, eta) + std::log1p(-eta)) / std::max(1.0, -std::log1p(-eta)));
  }
  double branch = 0.0;
  const double eta = 1.0 - 1e-6;
  for (double s : {-0.5, 0.5, 1.5, 2.5}) {
    const double b = polylog_branch(s, -std::log(eta));
    branch = std::max(branch, std::abs(polylog_series(s, eta) / b - 1.0));
  }
  double rec = 0.0;
  for (double s : {-0.5, 0.5, 1.5, 2.5})
    for (int k = 0; k < 12; ++k) {
      const double e = std::pow(10.0, -3.0 + 3.0 * k / 12.0) * 0.99;
      const double h = 1e-6 * e;
      const double fd = (polylog(s, e + h) - polylog(s, e - h)) / (2 * h);
      rec = std::max(rec, std::abs(e * fd / polylog(s - 1, e) - 1.0));
    }
  return {li1 <= 1e-12 && branch <= 1e-9 && rec <= 1e-8,
          "Li_1 " + sci(li1) + ", series vs branch " + sci(branch) + ", recurrence " + sci(rec)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"classical-yukawa-identity", c1_classical_yukawa},
      {"metric-ac-tables", c2_tables},
      {"yukawa-cross-validation", c3_yukawa_cross},
      {"bec-asymptote", c4_asymptote},
      {"nonnegativity-and-classical-limit", c5_nonnegativity},
      {"series-positivity", c6_series},
      {"frobenius-axioms", c7_frobenius},
      {"connection-identities", c8_connections},
      {"flatness-loci", c9_flatness},
      {"wdvv-theorem", c10_wdvv},
      {"polylog-suite", c11_polylog},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s  %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "statgeo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "statgeo/analysis.hpp"
#include "statgeo/error.hpp"
#include "statgeo/export.hpp"
#include "statgeo/geometry.hpp"
#include "statgeo/verify.hpp"

namespace statgeo {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(what + ": '" + text + "' is not a number");
  return v;
}

// Destination for command output: --out file or the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct Common {
  std::string model;
  std::string units = "reduced";
  std::string format = "text";
  std::string out;
};

void add_units(CLI::App* cmd, Common& c) {
  cmd->add_option("--units", c.units, "reduced | physical:h,m,kB")->capture_default_str();
}

void add_output(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

// --------------------------------------------------------------------- point

struct PointArgs {
  Common common;
  std::optional<double> beta, gamma;
  std::vector<double> x;
  std::vector<double> alphas = kDefaultAlphas;
};

Coords point_coordinates(const PointArgs& a, const PotentialModel& model) {
  const bool named = a.beta || a.gamma;
  if (named && !a.x.empty()) throw UsageError("give either --x or --beta/--gamma, not both");
  Coords x;
  if (!a.x.empty()) {
    x = a.x;
  } else if (named) {
    if (!a.beta || !a.gamma) throw UsageError("--beta and --gamma must be given together");
    x = {*a.beta, *a.gamma};
  } else {
    throw UsageError("no point given: use --x or --beta/--gamma");
  }
  if (x.size() != model.dimension()) {
    throw UsageError("point has " + std::to_string(x.size()) + " coordinates but model '" + model.id() +
                     "' has dimension " + std::to_string(model.dimension()));
  }
  return x;
}

int cmd_point(const PointArgs& a, std::ostream& out) {
  const ModelPtr model = make_model(a.common.model, parse_units(a.common.units));
  const Coords x = point_coordinates(a, *model);
  const LocalGeometry geo = local_geometry(*model, x, true);
  const ConnectionField lc = levi_civita(geo, true);
  const WdvvResidual wdvv = wdvv_residual(geo.metric, geo.ac);
  const double yukawa = yukawa_term(geo.metric, geo.ac);
  std::vector<double> curvature;
  for (double alpha : a.alphas) curvature.push_back(riemann_curvature(alpha_connection(lc, geo, alpha)).max_abs());

  const std::size_t n = model->dimension();
  const auto names = model->coordinate_names();
  Sink sink(a.common.out, out);
  std::ostream& os = *sink;
  if (a.common.format == "json") {
    json doc;
    doc["model"] = model->id();
    doc["coordinates"] = names;
    doc["x"] = x;
    json g = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(geo.metric(i, j));
      g.push_back(row);
    }
    doc["metric"] = g;
    json c = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json slab = json::array();
      for (std::size_t j = 0; j < n; ++j) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) row.push_back(geo.ac(i, j, k));
        slab.push_back(row);
      }
      c.push_back(slab);
    }
    doc["ac_tensor"] = c;
    doc["det_g"] = geo.metric.determinant();
    doc["yukawa"] = yukawa;
    doc["wdvv_residual"] = wdvv.max_abs;
    doc["wdvv_scaled"] = wdvv.scaled();
    json curv = json::object();
    for (std::size_t q = 0; q < a.alphas.size(); ++q) curv[format_number(a.alphas[q])] = curvature[q];
    doc["curvature"] = curv;
    os << doc.dump(2) << "\n";
    return 0;
  }

  os << "model: " << model->id() << "\n";
  os << "point:";
  for (std::size_t i = 0; i < n; ++i) os << " " << names[i] << "=" << num(x[i]);
  os << "\nmetric g_ij:\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << " ";
    for (std::size_t j = 0; j < n; ++j) os << " " << num(geo.metric(i, j));
    os << "\n";
  }
  os << "det g: " << num(geo.metric.determinant()) << "\n";
  os << "AC tensor C_ijk (i <= j <= k):\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        os << "  C[" << names[i] << "," << names[j] << "," << names[k] << "] = " << num(geo.ac(i, j, k)) << "\n";
      }
  os << "yukawa: " << num(yukawa) << "\n";
  os << "wdvv residual: " << num(wdvv.max_abs) << " (scaled " << num(wdvv.scaled()) << ")\n";
  for (std::size_t q = 0; q < a.alphas.size(); ++q) {
    os << "curvature alpha=" << format_number(a.alphas[q]) << ": " << num(curvature[q]) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------- scan

struct ScanArgs {
  Common common;
  std::vector<std::string> grid;
  std::vector<double> alphas = kDefaultAlphas;
  int threads = 0;
};

GridAxis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("--grid expects axis=lo:hi:n, got '" + text + "'");
  const auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3) throw UsageError("--grid expects axis=lo:hi:n, got '" + text + "'");
  GridAxis axis;
  axis.name = text.substr(0, eq);
  axis.lo = parse_double(parts[0], "--grid " + axis.name + " lower bound");
  axis.hi = parse_double(parts[1], "--grid " + axis.name + " upper bound");
  const double count = parse_double(parts[2], "--grid " + axis.name + " count");
  if (count < 1 || count != std::floor(count) || count > 1e7) {
    throw UsageError("--grid " + axis.name + ": count must be a positive integer");
  }
  axis.count = static_cast<int>(count);
  return axis;
}

ScanGrid build_grid(const std::vector<std::string>& specs, const PotentialModel& model) {
  const auto names = model.coordinate_names();
  std::vector<std::optional<GridAxis>> axes(names.size());
  for (const auto& spec : specs) {
    GridAxis axis = parse_axis(spec);
    const auto it = std::find(names.begin(), names.end(), axis.name);
    if (it == names.end()) {
      std::string known;
      for (const auto& nm : names) known += (known.empty() ? "" : ", ") + nm;
      throw UsageError("--grid: unknown axis '" + axis.name + "' (model axes: " + known + ")");
    }
    auto& slot = axes[static_cast<std::size_t>(it - names.begin())];
    if (slot) throw UsageError("--grid: axis '" + axis.name + "' given twice");
    slot = axis;
  }
  ScanGrid grid;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!axes[i]) throw UsageError("--grid: missing axis '" + names[i] + "'");
    grid.axes.push_back(*axes[i]);
  }
  return grid;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const ModelPtr model = make_model(a.common.model, parse_units(a.common.units));
  const ScanGrid grid = build_grid(a.grid, *model);
  const ScanResult result = scan(*model, grid, a.alphas, a.threads);

  const std::size_t ok = result.succeeded();
  if (ok == 0) {
    const std::string reason = result.rows.empty() ? "empty grid" : result.rows.front().error;
    err << "error: no grid point lies in the model domain (" << reason << ")\n";
    return 2;
  }

  Sink sink(a.common.out, out);
  *sink << (a.common.format == "json" ? to_json(result) : to_csv(result));

  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  double residual = 0.0;
  for (const auto& row : result.rows) {
    if (!row.ok()) continue;
    ymin = std::min(ymin, row.yukawa);
    ymax = std::max(ymax, row.yukawa);
    residual = std::max(residual, row.wdvv_residual);
  }
  std::ostream& summary = sink.to_file() ? out : err;
  summary << "rows: " << result.rows.size() << " (ok " << ok << ", failed " << result.rows.size() - ok << ")\n"
          << "yukawa min: " << num(ymin) << "\n"
          << "yukawa max: " << num(ymax) << "\n"
          << "max |yukawa|: " << num(std::max(std::abs(ymin), std::abs(ymax))) << "\n"
          << "max wdvv residual: " << num(residual) << "\n";
  return 0;
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
  Common common;
  std::vector<std::string> checks;
  std::optional<double> tol;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Units units = parse_units(a.common.units);
  std::vector<ModelPtr> models;
  if (a.common.model.empty()) {
    models = {make_model("classical", units), make_model("bose", units)};
  } else {
    models = {make_model(a.common.model, units)};
  }
  std::vector<std::string> checks = a.checks.empty() ? check_names() : a.checks;
  for (const auto& c : checks) {
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end()) {
      throw UsageError("unknown check '" + c + "'");
    }
  }

  std::vector<CheckResult> results;
  for (const auto& name : checks) {
    if (name == "series-positivity") {
      results.push_back(run_check(name, *models.front(), a.tol));
      continue;
    }
    for (const auto& m : models) results.push_back(run_check(name, *m, a.tol));
  }

  Sink sink(a.common.out, out);
  std::ostream& os = *sink;
  bool failed = false;
  if (a.common.format == "json") {
    json doc = json::array();
    for (const auto& r : results) {
      doc.push_back({{"check", r.check},
                     {"model", r.model},
                     {"status", to_string(r.status)},
                     {"measured", number_or_null(r.measured)},
                     {"tolerance", r.tolerance},
                     {"detail", r.detail}});
    }
    os << doc.dump(2) << "\n";
  }
  for (const auto& r : results) {
    failed = failed || r.status == CheckStatus::fail;
    if (a.common.format == "json") continue;
    os << to_string(r.status) << "  " << r.check << " [" << r.model << "]";
    if (r.status != CheckStatus::skipped) os << " measured=" << num(r.measured) << " tol=" << num(r.tolerance);
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  return failed ? 1 : 0;
}

// -------------------------------------------------------------- bec-asymptote

struct BecArgs {
  Common common;
  double beta = 1.0;
  double gamma = 0.0;
};

int cmd_bec(const BecArgs& a, std::ostream& out) {
  const Units units = parse_units(a.common.units);
  const double asymptote = bec_asymptote(a.beta, a.gamma, units);
  const double closed = bose_yukawa_closed_form(a.beta, a.gamma, units);
  Sink sink(a.common.out, out);
  if (a.common.format == "json") {
    const json doc{{"beta", a.beta}, {"gamma", a.gamma}, {"asymptote", asymptote},
                   {"closed_form", closed}, {"ratio", closed / asymptote}};
    *sink << doc.dump(2) << "\n";
  } else {
    *sink << "beta: " << num(a.beta) << "\ngamma: " << num(a.gamma) << "\nasymptote: " << num(asymptote)
          << "\nclosed form: " << num(closed) << "\nratio: " << num(closed / asymptote) << "\n";
  }
  return 0;
}

// -------------------------------------------------------------------- series

struct SeriesArgs {
  Common common;
  int order = kDefaultSeriesOrder;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const PositivitySeries s = positivity_series(a.order);
  Sink sink(a.common.out, out);
  if (a.common.format == "json") {
    const json doc{{"order", a.order}, {"normalizer", s.normalizer.a}, {"bracket", s.bracket.a}};
    *sink << doc.dump(2) << "\n";
    return 0;
  }
  *sink << "k  A(eta)  C A^3/(20 lambda^3)\n";
  for (int k = 0; k <= a.order; ++k) {
    *sink << k << "  " << num(s.normalizer.a[k]) << "  " << num(s.bracket.a[k]) << "\n";
  }
  return 0;
}

}  // namespace

ModelPtr make_model(const std::string& id, const Units& units) {
  if (id == "classical") return classical_ideal_gas(units);
  if (id == "bose") return bose_ideal_gas(units);
  const std::string prefix = "synthetic:";
  if (id.rfind(prefix, 0) == 0 && id.size() > prefix.size()) {
    return synthetic_potential(load_synthetic_spec(id.substr(prefix.size())));
  }
  throw UsageError("unknown model '" + id + "' (expected classical, bose or synthetic:<file>)");
}

Units parse_units(const std::string& text) {
  if (text == "reduced") return Units::reduced();
  const std::string prefix = "physical:";
  if (text.rfind(prefix, 0) != 0) throw UsageError("--units expects reduced or physical:h,m,kB");
  const auto parts = split(text.substr(prefix.size()), ',');
  if (parts.size() != 3) throw UsageError("--units physical needs three values h,m,kB");
  Units u;
  u.planck = parse_double(parts[0], "--units h");
  u.mass = parse_double(parts[1], "--units m");
  u.boltzmann = parse_double(parts[2], "--units kB");
  if (!(u.planck > 0.0 && u.mass > 0.0 && u.boltzmann > 0.0)) {
    throw UsageError("--units: h, m and kB must be positive");
  }
  return u;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius-manifold geometry of statistical models"};
  app.name("statgeo");
  app.require_subcommand(1);

  PointArgs point;
  auto* p = app.add_subcommand("point", "Metric, AC tensor, Yukawa term and curvature at one point");
  p->add_option("--model", point.common.model, "classical | bose | synthetic:<file>")->required();
  p->add_option("--beta", point.beta, "Inverse temperature (gas models)");
  p->add_option("--gamma", point.gamma, "-ln(fugacity) (gas models)");
  p->add_option("--x", point.x, "Comma-separated coordinates")->delimiter(',');
  p->add_option("--alphas", point.alphas, "Comma-separated alpha values")->delimiter(',');
  add_units(p, point.common);
  add_output(p, point.common, {"text", "json"});

  ScanArgs sc;
  sc.common.format = "csv";
  auto* s = app.add_subcommand("scan", "Evaluate a grid and export csv or json");
  s->add_option("--model", sc.common.model, "classical | bose | synthetic:<file>")->required();
  s->add_option("--grid", sc.grid, "axis=lo:hi:n, one per coordinate")->required();
  s->add_option("--alphas", sc.alphas, "Comma-separated alpha values")->delimiter(',');
  s->add_option("--threads", sc.threads, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  add_units(s, sc.common);
  add_output(s, sc.common, {"csv", "json"});

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run the named structural checks");
  v->add_option("--model", ver.common.model, "Model to check (default: classical and bose)");
  v->add_option("--check", ver.checks, "Check name (repeatable; default: all)");
  v->add_option("--tol", ver.tol, "Tolerance replacing each check's default")->check(CLI::PositiveNumber);
  add_units(v, ver.common);
  add_output(v, ver.common, {"text", "json"});

  BecArgs bec;
  auto* b = app.add_subcommand("bec-asymptote", "Condensation asymptote of the Bose-gas Yukawa term");
  b->add_option("--beta", bec.beta, "Inverse temperature")->capture_default_str();
  b->add_option("--gamma", bec.gamma, "-ln(fugacity), small and positive")->required();
  add_units(b, bec.common);
  add_output(b, bec.common, {"text", "json"});

  SeriesArgs ser;
  auto* r = app.add_subcommand("series", "Taylor coefficients behind the positivity argument");
  r->add_option("--order", ser.order, "Highest power of eta")
      ->check(CLI::Range(0, kMaxSeriesOrder))
      ->capture_default_str();
  add_output(r, ser.common, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*p) return cmd_point(point, out);
    if (*s) return cmd_scan(sc, out, err);
    if (*v) return cmd_verify(ver, out);
    if (*b) return cmd_bec(bec, out);
    if (*r) return cmd_series(ser, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace statgeo

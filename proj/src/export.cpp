#include "statgeo/export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace statgeo {

namespace {

std::string full_precision(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::vector<std::string> scan_columns(const ScanResult& result) {
  std::vector<std::string> cols = result.coordinate_names;
  cols.emplace_back("yukawa");
  cols.emplace_back("wdvv_residual");
  for (double a : result.alphas) cols.push_back("curv_alpha_" + format_number(a));
  cols.emplace_back("det_g");
  cols.emplace_back("status");
  return cols;
}

std::string to_csv(const ScanResult& result) {
  std::ostringstream out;
  const auto cols = scan_columns(result);
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
  out << '\n';
  for (const auto& row : result.rows) {
    for (double x : row.x) out << full_precision(x) << ',';
    out << full_precision(row.yukawa) << ',' << full_precision(row.wdvv_residual) << ',';
    for (double k : row.curvature) out << full_precision(k) << ',';
    out << full_precision(row.det_g) << ',' << (row.ok() ? "ok" : csv_escape(row.error)) << '\n';
  }
  return out.str();
}

std::string to_json(const ScanResult& result) {
  auto number = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < row.x.size(); ++i) obj[result.coordinate_names[i]] = row.x[i];
    obj["yukawa"] = number(row.yukawa);
    obj["wdvv_residual"] = number(row.wdvv_residual);
    for (std::size_t a = 0; a < result.alphas.size(); ++a) {
      obj["curv_alpha_" + format_number(result.alphas[a])] = number(row.curvature[a]);
    }
    obj["det_g"] = number(row.det_g);
    obj["status"] = row.ok() ? "ok" : row.error;
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

}  // namespace statgeo

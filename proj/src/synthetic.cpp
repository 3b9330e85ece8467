#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "statgeo/models.hpp"

namespace statgeo {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void malformed(int line, const std::string& why) {
  throw std::invalid_argument("synthetic spec line " + std::to_string(line) + ": " + why);
}

template <typename T>
T number(const std::string& text, int line, const char* what) {
  std::istringstream in(text);
  T v{};
  if (!(in >> v) || !(in >> std::ws).eof()) malformed(line, std::string("bad ") + what + " '" + text + "'");
  return v;
}

// Whitespace-separated numbers; any non-numeric token is an error.
template <typename T>
std::vector<T> numbers(std::istringstream& fields, int line, const char* what) {
  std::vector<T> out;
  std::string token;
  while (fields >> token) out.push_back(number<T>(token, line, what));
  return out;
}

}  // namespace

double SyntheticSpec::evaluate(std::span<const double> x) const {
  double total = 0.0;
  for (const auto& m : monomials) {
    double term = m.coefficient;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int e = 0; e < m.exponents[i]; ++e) term *= x[i];
    }
    total += term;
  }
  for (const auto& e : exponentials) {
    double arg = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) arg += e.rates[i] * x[i];
    total += e.coefficient * std::exp(arg);
  }
  return total;
}

SyntheticSpec parse_synthetic_spec(const std::string& text) {
  SyntheticSpec spec;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  struct Pending {
    int line;
    std::string key;
    std::string body;
  };
  std::vector<Pending> terms;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) malformed(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string body = trim(line.substr(eq + 1));
    if (key == "dimension") {
      const long d = number<long>(body, line_no, "dimension");
      if (d <= 0) malformed(line_no, "dimension must be a positive integer");
      spec.dimension = static_cast<std::size_t>(d);
    } else if (key == "name") {
      spec.name = body;
    } else if (key == "monomial" || key == "exp" || key == "box") {
      terms.push_back({line_no, key, body});
    } else {
      malformed(line_no, "unknown key '" + key + "'");
    }
  }
  if (spec.dimension == 0) throw std::invalid_argument("synthetic spec: missing dimension");

  for (const auto& t : terms) {
    std::istringstream fields(t.body);
    if (t.key == "box") {
      if (!spec.box.bounds.empty()) malformed(t.line, "box given twice");
      std::string range;
      while (fields >> range) {
        const auto colon = range.find(':');
        if (colon == std::string::npos) malformed(t.line, "box entries must be lo:hi");
        const double lo = number<double>(range.substr(0, colon), t.line, "box bound");
        const double hi = number<double>(range.substr(colon + 1), t.line, "box bound");
        if (!(lo < hi)) malformed(t.line, "box requires lo < hi");
        spec.box.bounds.emplace_back(lo, hi);
      }
      if (spec.box.bounds.size() != spec.dimension) malformed(t.line, "box needs one range per axis");
      continue;
    }
    std::string first;
    if (!(fields >> first)) malformed(t.line, "missing coefficient");
    const double coefficient = number<double>(first, t.line, "coefficient");
    if (t.key == "monomial") {
      SyntheticSpec::Monomial m{coefficient, numbers<int>(fields, t.line, "exponent")};
      for (int e : m.exponents) {
        if (e < 0) malformed(t.line, "exponents must be non-negative");
      }
      if (m.exponents.size() != spec.dimension) malformed(t.line, "monomial needs one exponent per axis");
      spec.monomials.push_back(std::move(m));
    } else {
      SyntheticSpec::Exponential x{coefficient, numbers<double>(fields, t.line, "rate")};
      if (x.rates.size() != spec.dimension) malformed(t.line, "exp needs one rate per axis");
      spec.exponentials.push_back(std::move(x));
    }
  }
  if (spec.box.bounds.empty()) throw std::invalid_argument("synthetic spec: missing box");
  return spec;
}

SyntheticSpec load_synthetic_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open synthetic spec '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  SyntheticSpec spec = parse_synthetic_spec(buffer.str());
  if (spec.name == "synthetic") spec.name = "synthetic:" + path;
  return spec;
}

ModelPtr synthetic_potential(const SyntheticSpec& spec) {
  auto psi = [spec](std::span<const double> x) { return spec.evaluate(x); };
  return std::make_shared<FiniteDifferenceModel>(spec.name, spec.dimension, psi, spec.box);
}

SyntheticSpec quadratic_spec(std::size_t n) {
  SyntheticSpec spec;
  spec.name = "quadratic";
  spec.dimension = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 2;
    spec.monomials.push_back({0.5, e});
    spec.box.bounds.emplace_back(-2.0, 2.0);
  }
  return spec;
}

SyntheticSpec cubic3d_spec() {
  SyntheticSpec spec = quadratic_spec(3);
  spec.name = "cubic3d";
  spec.monomials.push_back({1.0, {1, 1, 1}});
  spec.monomials.push_back({1.0, {4, 0, 0}});
  spec.box.bounds.assign(3, {-0.4, 0.4});
  return spec;
}

}  // namespace statgeo

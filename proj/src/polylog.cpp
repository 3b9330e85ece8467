#include "statgeo/polylog.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "statgeo/error.hpp"

namespace statgeo::special {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double s) { return std::floor(s) == s; }

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Borwein's algorithm 2 coefficients d_0..d_n for n = 40.
constexpr int kBorweinN = 40;

std::array<double, kBorweinN + 1> borwein_coefficients() {
  std::array<double, kBorweinN + 1> d{};
  const int n = kBorweinN;
  // term_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), built by ratio.
  double term = 1.0;  // i = 0: n (n-1)! / n! = 1
  double acc = term;
  d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
    acc += term;
    d[i] = acc;
  }
  return d;
}

const std::array<double, kBorweinN + 1>& borwein_table() {
  static const auto table = borwein_coefficients();
  return table;
}

// Dirichlet eta(s) = sum (-1)^(k-1) / k^s, accelerated.
double dirichlet_eta(double s) {
  const auto& d = borwein_table();
  const double dn = d[kBorweinN];
  CompensatedSum sum;
  for (int k = 0; k < kBorweinN; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum.add(sign * (dn - d[k]) / std::pow(k + 1.0, s));
  }
  return sum.value() / dn;
}

// k^-s with a fast path for integer and half-integer orders.
class InversePower {
 public:
  explicit InversePower(double s) : s_(s) {
    const double twice = 2.0 * s;
    half_integer_ = is_integer(twice) && std::abs(twice) < 64.0;
    if (half_integer_) {
      whole_ = static_cast<int>(std::floor(s));
      has_half_ = (twice - 2.0 * whole_) != 0.0;
    }
  }

  double operator()(double k) const {
    if (!half_integer_) return std::pow(k, -s_);
    double r = 1.0;
    int e = whole_;
    const double base = e >= 0 ? 1.0 / k : k;
    for (int m = std::abs(e); m > 0; --m) r *= base;
    if (has_half_) r /= std::sqrt(k);
    return r;
  }

 private:
  double s_;
  bool half_integer_ = false;
  bool has_half_ = false;
  int whole_ = 0;
};

// Li_{-n}(eta) = sum_{k=0}^{n-1} A(n,k) eta^(k+1) / (1-eta)^(n+1), n >= 0,
// with A the Eulerian numbers; n = 0 gives eta/(1-eta).
double polylog_negative_integer(int n, double eta, double one_minus_eta) {
  if (n == 0) return eta / one_minus_eta;
  std::vector<double> row{1.0};  // A(1, 0) = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<double> next(m, 0.0);
    for (int k = 0; k < m; ++k) {
      const double left = k < static_cast<int>(row.size()) ? row[k] : 0.0;
      const double down = k >= 1 ? row[k - 1] : 0.0;
      next[k] = (k + 1) * left + (m - k) * down;
    }
    row = std::move(next);
  }
  // Horner in eta.
  double poly = 0.0;
  for (int k = n - 1; k >= 0; --k) poly = poly * eta + row[k];
  return eta * poly / std::pow(one_minus_eta, n + 1);
}

// Integer s >= 2 about the branch point, mu = -gamma:
// Li_n(e^mu) = mu^(n-1)/(n-1)! [H_{n-1} - log(-mu)] + sum_{k != n-1} zeta(n-k) mu^k / k!
double polylog_branch_integer(int n, double gamma) {
  const double mu = -gamma;
  double harmonic = 0.0;
  for (int j = 1; j < n; ++j) harmonic += 1.0 / j;
  double factorial = 1.0;
  for (int j = 2; j < n; ++j) factorial *= j;
  CompensatedSum sum;
  sum.add(std::pow(mu, n - 1) / factorial * (harmonic - std::log(gamma)));
  double power = 1.0;  // mu^k / k!
  int small_run = 0;
  for (int k = 0; k < 400; ++k) {
    if (k > 0) power *= mu / k;
    if (k == n - 1) continue;
    const double term = zeta(static_cast<double>(n - k)) * power;
    sum.add(term);
    if (std::abs(term) < 1e-17 * std::abs(sum.value())) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  return sum.value();
}

void check_fugacity(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("polylog: fugacity must lie in [0,1], got " + std::to_string(eta));
  }
}

}  // namespace

double zeta(double s) {
  if (!std::isfinite(s)) throw DomainError("zeta: non-finite argument");
  if (s == 1.0) throw DomainError("zeta: pole at s = 1");
  if (s == 0.0) return -0.5;
  if (s >= 0.5) return dirichlet_eta(s) / (1.0 - std::exp2(1.0 - s));
  // Trivial zeros.
  if (is_integer(s) && std::fmod(-s, 2.0) == 0.0) return 0.0;
  // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
  const double reflected = zeta(1.0 - s);
  return std::exp2(s) * std::pow(kPi, s - 1.0) * std::sin(0.5 * kPi * s) * std::tgamma(1.0 - s) *
         reflected;
}

double polylog_series(double s, double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw DomainError("polylog_series: requires eta in [0,1)");
  }
  if (eta == 0.0) return 0.0;
  const InversePower inv(s);
  const double log_eta = std::log(eta);
  CompensatedSum sum;
  double power = eta;
  // Re-anchor eta^k periodically so the running product does not accumulate error.
  constexpr long kAnchor = 256;
  for (long k = 1;; ++k) {
    if (k % kAnchor == 0) power = std::exp(static_cast<double>(k) * log_eta);
    const double term = power * inv(static_cast<double>(k));
    sum.add(term);
    // Tail bound: once the ratio of successive terms r < 1, the tail is
    // at most term * r / (1 - r).
    const double growth = s < 0.0 ? std::pow(1.0 + 1.0 / k, -s) : 1.0;
    const double ratio = eta * growth;
    if (ratio < 1.0) {
      const double tail = term * ratio / (1.0 - ratio);
      if (tail <= 1e-17 * sum.value()) break;
    }
    power *= eta;
  }
  return sum.value();
}

double polylog_branch(double s, double gamma) {
  if (is_integer(s)) throw DomainError("polylog_branch: integer order has a logarithmic term");
  if (!(gamma > 0.0 && gamma < 2.0 * kPi)) {
    throw DomainError("polylog_branch: requires 0 < gamma < 2 pi");
  }
  CompensatedSum sum;
  sum.add(std::tgamma(1.0 - s) * std::pow(gamma, s - 1.0));
  double power = 1.0;  // (-gamma)^k / k!
  int small_run = 0;
  for (int k = 0; k < 400; ++k) {
    if (k > 0) power *= -gamma / k;
    const double term = zeta(s - k) * power;
    sum.add(term);
    if (std::abs(term) < 1e-17 * std::abs(sum.value())) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  return sum.value();
}

double polylog_exp(double s, double gamma) {
  if (!(gamma >= 0.0)) throw DomainError("polylog: requires gamma >= 0");
  if (std::isinf(gamma)) return 0.0;
  if (gamma == 0.0) {
    if (s <= 1.0) throw DomainError("polylog: Li_s(1) diverges for s <= 1");
    return zeta(s);
  }
  const double eta = std::exp(-gamma);
  if (is_integer(s) && s <= 1.0) {
    if (s == 1.0) return -std::log(-std::expm1(-gamma));
    // 1 - eta computed from gamma to keep precision near the branch point.
    return polylog_negative_integer(static_cast<int>(-s), eta, -std::expm1(-gamma));
  }
  if (eta <= kSeriesCutoff) return polylog_series(s, eta);
  if (is_integer(s)) return polylog_branch_integer(static_cast<int>(s), gamma);
  return polylog_branch(s, gamma);
}

double polylog(double s, double eta) {
  check_fugacity(eta);
  if (!std::isfinite(s)) throw DomainError("polylog: non-finite order");
  if (eta == 0.0) return 0.0;
  if (eta == 1.0) {
    if (s <= 1.0) throw DomainError("polylog: Li_s(1) diverges for s <= 1");
    return zeta(s);
  }
  if (is_integer(s) && s <= 1.0) {
    if (s == 1.0) return -std::log1p(-eta);
    return polylog_negative_integer(static_cast<int>(-s), eta, 1.0 - eta);
  }
  if (eta <= kSeriesCutoff) return polylog_series(s, eta);
  return polylog_exp(s, -std::log(eta));
}

double polylog_derivative(double s, double eta, AtZero at_zero) {
  check_fugacity(eta);
  if (eta == 0.0) {
    if (at_zero == AtZero::limit) return 1.0;
    throw DomainError("polylog_derivative: eta = 0 requires the explicit limit flag");
  }
  if (eta >= 1.0) throw DomainError("polylog_derivative: requires eta < 1");
  return polylog(s - 1.0, eta) / eta;
}

double polylog_asymptotic(double s, double gamma) {
  if (!(s < 1.0)) throw DomainError("polylog_asymptotic: requires s < 1");
  if (!(gamma > 0.0)) throw DomainError("polylog_asymptotic: requires gamma > 0");
  return std::tgamma(1.0 - s) * std::pow(gamma, s - 1.0);
}

}  // namespace statgeo::special

#include "statgeo/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "statgeo/error.hpp"
#include "statgeo/polylog.hpp"

namespace statgeo {

// ---------------------------------------------------------------------------
// Units

double Units::wavelength_prefactor() const {
  return std::pow(2.0 * std::numbers::pi * mass * boltzmann / (planck * planck), 1.5);
}

double Units::inverse_cubed_wavelength(double beta) const {
  return wavelength_prefactor() * std::pow(beta, -1.5);
}

double Units::cubed_wavelength(double beta) const { return 1.0 / inverse_cubed_wavelength(beta); }

// ---------------------------------------------------------------------------
// Jet

Jet::Jet(std::size_t n, int order) : n_(n), order_(order) {
  if (order < 1 || order > 4) throw std::invalid_argument("Jet: order must be 1..4");
  d1_.assign(n, 0.0);
  if (order >= 2) d2_.assign(n * n, 0.0);
  if (order >= 3) d3_.assign(n * n * n, 0.0);
  if (order >= 4) d4_.assign(n * n * n * n, 0.0);
}

namespace {

std::size_t flat_index(std::span<const std::size_t> index, std::size_t n) {
  std::size_t flat = 0;
  for (std::size_t i : index) flat = flat * n + i;
  return flat;
}

// Every ordering of a sorted multi-index, used to fill symmetric slots.
template <typename F>
void for_each_permutation(std::vector<std::size_t> sorted, F&& f) {
  do {
    f(std::span<const std::size_t>(sorted));
  } while (std::next_permutation(sorted.begin(), sorted.end()));
}

// Calls f on each non-decreasing multi-index of length `order` over n axes.
template <typename F>
void for_each_sorted_index(std::size_t n, int order, F&& f) {
  std::vector<std::size_t> idx(order, 0);
  while (true) {
    f(idx);
    int pos = order - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int q = pos + 1; q < order; ++q) idx[q] = idx[pos];
  }
}

void check_index(const PotentialModel& model, std::span<const std::size_t> index) {
  if (index.empty() || index.size() > 4) {
    throw std::invalid_argument("partial: derivative order must be 1..4");
  }
  for (std::size_t i : index) {
    if (i >= model.dimension()) throw std::invalid_argument("partial: index out of range");
  }
}

}  // namespace

double Jet::at(std::span<const std::size_t> index) const {
  switch (index.size()) {
    case 1: return d1_.at(index[0]);
    case 2: return d2_.at(flat_index(index, n_));
    case 3: return d3_.at(flat_index(index, n_));
    case 4: return d4_.at(flat_index(index, n_));
    default: throw std::invalid_argument("Jet::at: order must be 1..4");
  }
}

void Jet::set(std::span<const std::size_t> index, double v) {
  switch (index.size()) {
    case 1: d1_.at(index[0]) = v; break;
    case 2: d2_.at(flat_index(index, n_)) = v; break;
    case 3: d3_.at(flat_index(index, n_)) = v; break;
    case 4: d4_.at(flat_index(index, n_)) = v; break;
    default: throw std::invalid_argument("Jet::set: order must be 1..4");
  }
}

// ---------------------------------------------------------------------------
// PotentialModel

std::vector<std::string> PotentialModel::coordinate_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dimension(); ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

Jet PotentialModel::jet(std::span<const double> x, int max_order) const {
  check_domain(x);
  const std::size_t n = dimension();
  Jet jet(n, max_order);
  jet.value = value(x);
  for (int order = 1; order <= max_order; ++order) {
    for_each_sorted_index(n, order, [&](const std::vector<std::size_t>& idx) {
      const double v = partial(x, idx);
      for_each_permutation(idx, [&](std::span<const std::size_t> p) { jet.set(p, v); });
    });
  }
  return jet;
}

double partials(const PotentialModel& model, std::span<const double> x,
                std::span<const std::size_t> index) {
  check_index(model, index);
  model.check_domain(x);
  return model.partial(x, index);
}

// ---------------------------------------------------------------------------
// Ideal gases

namespace {

// d^a/dbeta^a of beta^(-3/2), as a multiple of beta^(-3/2 - a).
double power_law_derivative(double beta, int a) {
  double coeff = 1.0;
  for (int j = 0; j < a; ++j) coeff *= -1.5 - j;
  return coeff * std::pow(beta, -1.5 - a);
}

}  // namespace

void IdealGasModel::check_domain(std::span<const double> x) const {
  if (x.size() != 2) throw DomainError(id() + ": expects coordinates (beta, gamma)");
  if (!(x[0] > 0.0)) throw DomainError(id() + ": requires beta > 0");
  if (!(x[1] > 0.0)) throw DomainError(id() + ": requires gamma > 0");
}

double IdealGasModel::value(std::span<const double> x) const {
  check_domain(x);
  return units_.inverse_cubed_wavelength(x[0]) * fugacity_factor(x[1], 0);
}

double IdealGasModel::partial(std::span<const double> x, std::span<const std::size_t> index) const {
  check_index(*this, index);
  check_domain(x);
  const int a = static_cast<int>(std::count(index.begin(), index.end(), std::size_t{0}));
  const int b = static_cast<int>(index.size()) - a;
  return units_.wavelength_prefactor() * power_law_derivative(x[0], a) * fugacity_factor(x[1], b);
}

Jet IdealGasModel::jet(std::span<const double> x, int max_order) const {
  check_domain(x);
  std::array<double, 5> beta_part{};
  std::array<double, 5> gamma_part{};
  const double c = units_.wavelength_prefactor();
  for (int k = 0; k <= max_order; ++k) {
    beta_part[k] = c * power_law_derivative(x[0], k);
    gamma_part[k] = fugacity_factor(x[1], k);
  }
  Jet jet(2, max_order);
  jet.value = beta_part[0] * gamma_part[0];
  auto entry = [&](std::initializer_list<std::size_t> idx) {
    const int a = static_cast<int>(std::count(idx.begin(), idx.end(), std::size_t{0}));
    const int b = static_cast<int>(idx.size()) - a;
    return beta_part[a] * gamma_part[b];
  };
  for (std::size_t i = 0; i < 2; ++i) {
    jet.d1(i) = entry({i});
    if (max_order < 2) continue;
    for (std::size_t j = 0; j < 2; ++j) {
      jet.d2(i, j) = entry({i, j});
      if (max_order < 3) continue;
      for (std::size_t k = 0; k < 2; ++k) {
        jet.d3(i, j, k) = entry({i, j, k});
        if (max_order < 4) continue;
        for (std::size_t l = 0; l < 2; ++l) jet.d4(i, j, k, l) = entry({i, j, k, l});
      }
    }
  }
  return jet;
}

double ClassicalIdealGas::fugacity_factor(double gamma, int order) const {
  const double eta = std::exp(-gamma);
  return (order % 2 == 0) ? eta : -eta;
}

double BoseIdealGas::fugacity_factor(double gamma, int order) const {
  const double li = special::polylog_exp(2.5 - order, gamma);
  return (order % 2 == 0) ? li : -li;
}

ModelPtr classical_ideal_gas(Units units) { return std::make_shared<ClassicalIdealGas>(units); }

ModelPtr bose_ideal_gas(Units units) { return std::make_shared<BoseIdealGas>(units); }

// ---------------------------------------------------------------------------
// Finite differences

bool Box::contains(std::span<const double> x) const {
  if (x.size() != bounds.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= bounds[i].first && x[i] <= bounds[i].second)) return false;
  }
  return true;
}

FiniteDifferenceModel::FiniteDifferenceModel(std::string id, std::size_t n, Function psi, Box box)
    : id_(std::move(id)), n_(n), psi_(std::move(psi)), box_(std::move(box)) {
  if (n_ == 0) throw std::invalid_argument("FiniteDifferenceModel: dimension must be positive");
  if (box_.bounds.size() != n_) {
    throw std::invalid_argument("FiniteDifferenceModel: box dimension mismatch");
  }
}

void FiniteDifferenceModel::check_domain(std::span<const double> x) const {
  if (x.size() != n_) {
    throw DomainError(id_ + ": expected " + std::to_string(n_) + " coordinates");
  }
  if (!box_.contains(x)) {
    std::ostringstream msg;
    msg << id_ << ": point outside the declared box";
    throw DomainError(msg.str());
  }
}

double FiniteDifferenceModel::value(std::span<const double> x) const {
  check_domain(x);
  return psi_(x);
}

double FiniteDifferenceModel::step(int order, double xi) {
  // Balances O(h^4) truncation (after Richardson) against eps / h^order roundoff.
  static constexpr std::array<double, 5> kBase{0.0, 1e-3, 2e-3, 5e-3, 1e-2};
  return kBase.at(order) * std::max(1.0, std::abs(xi));
}

namespace {

struct Stencil {
  std::vector<int> offsets;
  std::vector<double> weights;
};

// Second-order central stencils for the m-th derivative, unit spacing.
const Stencil& central_stencil(int m) {
  static const std::array<Stencil, 5> table{{
      {{0}, {1.0}},
      {{-1, 1}, {-0.5, 0.5}},
      {{-1, 0, 1}, {1.0, -2.0, 1.0}},
      {{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}},
      {{-2, -1, 0, 1, 2}, {1.0, -4.0, 6.0, -4.0, 1.0}},
  }};
  return table.at(m);
}

}  // namespace

double FiniteDifferenceModel::partial(std::span<const double> x,
                                      std::span<const std::size_t> index) const {
  check_index(*this, index);
  check_domain(x);
  const int order = static_cast<int>(index.size());

  struct Axis {
    std::size_t axis;
    int count;
    double h;
  };
  std::vector<Axis> axes;
  for (std::size_t a = 0; a < n_; ++a) {
    const int count = static_cast<int>(std::count(index.begin(), index.end(), a));
    if (count > 0) axes.push_back({a, count, step(order, x[a])});
  }

  auto estimate = [&](double scale) {
    std::vector<std::size_t> cursor(axes.size(), 0);
    std::vector<double> point(x.begin(), x.end());
    double total = 0.0;
    double denom = 1.0;
    for (const auto& ax : axes) denom *= std::pow(scale * ax.h, ax.count);
    while (true) {
      double weight = 1.0;
      for (std::size_t q = 0; q < axes.size(); ++q) {
        const Stencil& st = central_stencil(axes[q].count);
        weight *= st.weights[cursor[q]];
        point[axes[q].axis] = x[axes[q].axis] + st.offsets[cursor[q]] * scale * axes[q].h;
      }
      total += weight * psi_(point);
      std::size_t q = 0;
      for (; q < axes.size(); ++q) {
        if (++cursor[q] < central_stencil(axes[q].count).offsets.size()) break;
        cursor[q] = 0;
      }
      if (q == axes.size()) break;
    }
    return total / denom;
  };

  const double coarse = estimate(1.0);
  const double fine = estimate(0.5);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace statgeo

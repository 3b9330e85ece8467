#pragma once

// Statistical manifolds given by a convex potential Psi in dually-flat
// coordinates. The metric is the Hessian of Psi and the Amari-Chentsov
// tensor its third derivative, so every model exposes partials up to order 4.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace statgeo {

using Coords = std::vector<double>;

// Physical constants entering the thermal wavelength
// lambda = h / sqrt(2 pi m k_B T). Reduced units set all three to one.
struct Units {
  double planck = 1.0;
  double mass = 1.0;
  double boltzmann = 1.0;

  static Units reduced() { return {}; }

  // c in lambda^-3 = c * beta^(-3/2); c = (2 pi m k_B / h^2)^(3/2).
  double wavelength_prefactor() const;
  double inverse_cubed_wavelength(double beta) const;  // lambda^-3
  double cubed_wavelength(double beta) const;          // lambda^3
};

// Dense table of all partial derivatives of Psi through `order` at a point.
class Jet {
 public:
  Jet(std::size_t n, int order);

  std::size_t dimension() const { return n_; }
  int order() const { return order_; }

  double value = 0.0;
  double& d1(std::size_t i) { return d1_[i]; }
  double d1(std::size_t i) const { return d1_[i]; }
  double& d2(std::size_t i, std::size_t j) { return d2_[i * n_ + j]; }
  double d2(std::size_t i, std::size_t j) const { return d2_[i * n_ + j]; }
  double& d3(std::size_t i, std::size_t j, std::size_t k) { return d3_[(i * n_ + j) * n_ + k]; }
  double d3(std::size_t i, std::size_t j, std::size_t k) const {
    return d3_[(i * n_ + j) * n_ + k];
  }
  double& d4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return d4_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  double d4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return d4_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  // Entry for an arbitrary multi-index of length 1..order.
  double at(std::span<const std::size_t> index) const;
  void set(std::span<const std::size_t> index, double v);

 private:
  std::size_t n_;
  int order_;
  std::vector<double> d1_, d2_, d3_, d4_;
};

class PotentialModel {
 public:
  virtual ~PotentialModel() = default;

  virtual std::size_t dimension() const = 0;
  virtual std::string id() const = 0;
  virtual std::vector<std::string> coordinate_names() const;

  // Throws DomainError naming the violated condition.
  virtual void check_domain(std::span<const double> x) const = 0;

  virtual double value(std::span<const double> x) const = 0;

  // Partial derivative for a multi-index of order 1..4 (entries < dimension()).
  virtual double partial(std::span<const double> x, std::span<const std::size_t> index) const = 0;

  // All partials through max_order (1..4). The default fills from partial(),
  // visiting each unordered multi-index once.
  virtual Jet jet(std::span<const double> x, int max_order) const;

  virtual bool exact_partials() const = 0;
};

using ModelPtr = std::shared_ptr<const PotentialModel>;

// Grand-canonical ideal gases in coordinates x = (beta, gamma), beta = 1/T,
// gamma = -ln(fugacity). Psi = lambda^-3 * Phi(gamma) separates, so each
// partial is a beta-derivative of c beta^(-3/2) times a gamma-derivative of Phi.
class IdealGasModel : public PotentialModel {
 public:
  explicit IdealGasModel(Units units) : units_(units) {}

  std::size_t dimension() const override { return 2; }
  std::vector<std::string> coordinate_names() const override { return {"beta", "gamma"}; }
  void check_domain(std::span<const double> x) const override;
  double value(std::span<const double> x) const override;
  double partial(std::span<const double> x, std::span<const std::size_t> index) const override;
  Jet jet(std::span<const double> x, int max_order) const override;
  bool exact_partials() const override { return true; }

  const Units& units() const { return units_; }

  // d^order/d gamma^order of Phi at gamma; order 0..4.
  virtual double fugacity_factor(double gamma, int order) const = 0;

 private:
  Units units_;
};

// Psi = eta * lambda^-3.
class ClassicalIdealGas final : public IdealGasModel {
 public:
  using IdealGasModel::IdealGasModel;
  std::string id() const override { return "classical"; }
  double fugacity_factor(double gamma, int order) const override;
};

// Psi = Li_{5/2}(eta) * lambda^-3. d/dgamma Li_s(e^-gamma) = -Li_{s-1}(e^-gamma).
class BoseIdealGas final : public IdealGasModel {
 public:
  using IdealGasModel::IdealGasModel;
  std::string id() const override { return "bose"; }
  double fugacity_factor(double gamma, int order) const override;
};

ModelPtr classical_ideal_gas(Units units = Units::reduced());
ModelPtr bose_ideal_gas(Units units = Units::reduced());

// Axis-aligned box [lo_i, hi_i].
struct Box {
  std::vector<std::pair<double, double>> bounds;
  bool contains(std::span<const double> x) const;
};

// Potential known only through values; partials by central differences with
// one Richardson level.
class FiniteDifferenceModel final : public PotentialModel {
 public:
  using Function = std::function<double(std::span<const double>)>;

  FiniteDifferenceModel(std::string id, std::size_t n, Function psi, Box box);

  std::size_t dimension() const override { return n_; }
  std::string id() const override { return id_; }
  void check_domain(std::span<const double> x) const override;
  double value(std::span<const double> x) const override;
  double partial(std::span<const double> x, std::span<const std::size_t> index) const override;
  bool exact_partials() const override { return false; }

  const Box& box() const { return box_; }

  // Base step for a derivative of the given total order at coordinate value xi.
  static double step(int order, double xi);

 private:
  std::string id_;
  std::size_t n_;
  Function psi_;
  Box box_;
};

// A sum of monomials c * prod x_i^e_i and exponentials c * exp(a . x).
struct SyntheticSpec {
  struct Monomial {
    double coefficient;
    std::vector<int> exponents;
  };
  struct Exponential {
    double coefficient;
    std::vector<double> rates;
  };

  std::string name = "synthetic";
  std::size_t dimension = 0;
  std::vector<Monomial> monomials;
  std::vector<Exponential> exponentials;
  Box box;

  double evaluate(std::span<const double> x) const;
};

// Plain-text key/value format:
//   dimension = 3
//   monomial  = 0.5 2 0 0        # coefficient, then one exponent per axis
//   exp       = 1.0 0.3 0 0      # coefficient, then one rate per axis
//   box       = -1:1 -1:1 -1:1
// '#' starts a comment. Throws std::invalid_argument on malformed input.
SyntheticSpec parse_synthetic_spec(const std::string& text);
SyntheticSpec load_synthetic_spec(const std::string& path);

ModelPtr synthetic_potential(const SyntheticSpec& spec);

// Psi = 1/2 |x|^2 on [-2,2]^n.
SyntheticSpec quadratic_spec(std::size_t n);
// Psi = 1/2 |x|^2 + x1 x2 x3 + x1^4 on [-0.4,0.4]^3; not associative.
SyntheticSpec cubic3d_spec();

// Checked entry point for a single partial of order 1..4.
double partials(const PotentialModel& model, std::span<const double> x,
                std::span<const std::size_t> index);

}  // namespace statgeo

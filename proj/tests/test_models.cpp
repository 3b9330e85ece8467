#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "gas_tables.hpp"
#include "statgeo/error.hpp"
#include "statgeo/models.hpp"

using namespace statgeo;

namespace {

constexpr std::size_t B = 0;
constexpr std::size_t G = 1;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void check_table(const PotentialModel& model, double beta, double gamma, const testing::GasTable& t,
                 double tol) {
  const Jet j = model.jet(Coords{beta, gamma}, 3);
  CHECK(rel(j.d2(B, B), t.g_bb) <= tol);
  CHECK(rel(j.d2(B, G), t.g_bg) <= tol);
  CHECK(rel(j.d2(G, B), t.g_bg) <= tol);
  CHECK(rel(j.d2(G, G), t.g_gg) <= tol);
  CHECK(rel(j.d3(B, B, B), t.c_bbb) <= tol);
  CHECK(rel(j.d3(B, B, G), t.c_bbg) <= tol);
  CHECK(rel(j.d3(G, B, B), t.c_bbg) <= tol);
  CHECK(rel(j.d3(B, G, G), t.c_bgg) <= tol);
  CHECK(rel(j.d3(G, G, B), t.c_bgg) <= tol);
  CHECK(rel(j.d3(G, G, G), t.c_ggg) <= tol);
}

// Central difference of order-(k-1) partials of the exact model.
double fd_partial(const PotentialModel& m, Coords x, std::vector<std::size_t> idx) {
  const std::size_t axis = idx.back();
  idx.pop_back();
  const double h = 1e-4 * std::max(1.0, std::abs(x[axis]));
  auto eval = [&](double shift) {
    Coords y = x;
    y[axis] += shift;
    return idx.empty() ? m.value(y) : m.partial(y, idx);
  };
  return (-eval(2 * h) + 8 * eval(h) - 8 * eval(-h) + eval(-2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("units") {
  const Units r = Units::reduced();
  CHECK(r.wavelength_prefactor() == doctest::Approx(std::pow(2 * std::numbers::pi, 1.5)).epsilon(1e-15));
  CHECK(r.cubed_wavelength(1.0) == doctest::Approx(0.063493635934240969786).epsilon(1e-15));
  CHECK(r.cubed_wavelength(2.0) * r.inverse_cubed_wavelength(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  const Units phys{2.0, 3.0, 0.5};
  // lambda = h / sqrt(2 pi m kB T)
  const double beta = 1.7;
  const double lambda = 2.0 / std::sqrt(2 * std::numbers::pi * 3.0 * 0.5 / beta);
  CHECK(phys.cubed_wavelength(beta) == doctest::Approx(lambda * lambda * lambda).epsilon(1e-14));
}

TEST_CASE("classical gas reproduces the component table") {
  const auto model = classical_ideal_gas();
  for (double beta : {0.5, 1.0, 1.3, 2.0})
    for (double gamma : {0.1, std::log(2.0), 1.5, 3.0}) check_table(*model, beta, gamma, testing::classical_table(beta, gamma), 1e-13);
  const double g = model->partial(Coords{1.0, std::log(2.0)}, std::vector<std::size_t>{G, G});
  CHECK(g == doctest::Approx(0.5 / Units::reduced().cubed_wavelength(1.0)).epsilon(1e-14));
}

TEST_CASE("bose gas reproduces the component table") {
  const auto model = bose_ideal_gas();
  for (double beta : {0.5, 1.0, 1.3, 2.0})
    for (double gamma : {1e-4, 0.1, 1.0, 3.0}) check_table(*model, beta, gamma, testing::bose_table(beta, gamma), 1e-13);
}

TEST_CASE("physical units scale every component by lambda^-3") {
  const Units phys{1.3, 0.7, 2.1};
  const auto model = bose_ideal_gas(phys);
  check_table(*model, 0.9, 0.4, testing::bose_table(0.9, 0.4, phys), 1e-13);
}

TEST_CASE("exact partials agree with finite differences") {
  for (const auto& model : {classical_ideal_gas(), bose_ideal_gas()}) {
    for (double beta : {0.5, 1.2, 2.0})
      for (double gamma : {0.1, 0.8, 3.0}) {
        const Coords x{beta, gamma};
        for (std::vector<std::size_t> idx : std::vector<std::vector<std::size_t>>{
                 {B, B}, {B, G}, {G, G}, {B, B, B}, {B, B, G}, {B, G, G}, {G, G, G}, {G, G, G, G}, {B, G, G, B}}) {
          CAPTURE(model->id());
          CAPTURE(beta);
          CAPTURE(gamma);
          const double exact = model->partial(x, idx);
          CHECK(rel(fd_partial(*model, x, idx), exact) <= 1e-6);
        }
      }
  }
}

TEST_CASE("partials are symmetric under permutation") {
  const auto model = bose_ideal_gas();
  const Coords x{1.1, 0.7};
  const std::vector<std::size_t> a{B, G, B}, b{G, B, B}, c{B, B, G};
  CHECK(model->partial(x, a) == model->partial(x, b));
  CHECK(model->partial(x, a) == model->partial(x, c));
  const Jet j = model->jet(x, 4);
  CHECK(j.d4(B, G, G, B) == j.d4(G, B, B, G));
  CHECK(j.d4(G, G, G, B) == j.d4(B, G, G, G));
}

TEST_CASE("classical determinant identity") {
  const auto model = classical_ideal_gas();
  for (double beta : {0.5, 1.0, 2.0})
    for (double gamma : {0.1, 1.0}) {
      const Jet j = model->jet(Coords{beta, gamma}, 2);
      const double det = j.d2(B, B) * j.d2(G, G) - j.d2(B, G) * j.d2(G, B);
      const double il3 = Units::reduced().inverse_cubed_wavelength(beta);
      const double eta = std::exp(-gamma);
      CHECK(det == doctest::Approx(1.5 * il3 * il3 * eta * eta / (beta * beta)).epsilon(1e-13));
    }
}

TEST_CASE("bose components approach the classical ones for large gamma") {
  const auto bose = bose_ideal_gas();
  const auto classical = classical_ideal_gas();
  for (double gamma : {8.0, 12.0}) {
    const Jet a = bose->jet(Coords{1.0, gamma}, 3);
    const Jet b = classical->jet(Coords{1.0, gamma}, 3);
    CHECK(rel(a.d2(G, G), b.d2(G, G)) <= 1e-3);
    CHECK(rel(a.d3(G, G, G), b.d3(G, G, G)) <= 1e-3);
  }
}

TEST_CASE("gas domain guards") {
  const auto model = bose_ideal_gas();
  const std::vector<std::size_t> idx{G, G};
  CHECK_THROWS_WITH_AS(partials(*model, Coords{1.0, 0.0}, idx), doctest::Contains("gamma > 0"), DomainError);
  CHECK_THROWS_WITH_AS(partials(*model, Coords{-1.0, 0.5}, idx), doctest::Contains("beta > 0"), DomainError);
  CHECK_THROWS_AS(partials(*model, Coords{1.0}, idx), DomainError);
  const std::vector<std::size_t> bad{G, 2};
  CHECK_THROWS_AS(partials(*model, Coords{1.0, 0.5}, bad), std::invalid_argument);
}

TEST_CASE("finite-difference model on the quadratic potential") {
  const auto model = synthetic_potential(quadratic_spec(3));
  const Coords x{0.3, -1.2, 1.0};
  const Jet j = model->jet(x, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(j.d2(i, k) == doctest::Approx(i == k ? 1.0 : 0.0).epsilon(1e-8));
      for (std::size_t l = 0; l < 3; ++l) CHECK(std::abs(j.d3(i, k, l)) <= 1e-7);
    }
  CHECK_THROWS_AS(model->check_domain(Coords{2.5, 0.0, 0.0}), DomainError);
}

TEST_CASE("finite-difference accuracy on the cubic potential") {
  const auto model = synthetic_potential(cubic3d_spec());
  const Coords x{0.21, -0.13, 0.3};
  auto exact3 = [&](std::size_t i, std::size_t j, std::size_t k) {
    int c[3] = {0, 0, 0};
    ++c[i];
    ++c[j];
    ++c[k];
    if (c[0] == 1 && c[1] == 1 && c[2] == 1) return 1.0;
    if (c[0] == 3) return 24.0 * x[0];
    return 0.0;
  };
  const Jet j = model->jet(x, 4);
  CHECK(j.d2(0, 0) == doctest::Approx(1.0 + 12 * x[0] * x[0]).epsilon(1e-6));
  CHECK(j.d2(0, 1) == doctest::Approx(x[2]).epsilon(1e-6));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(j.d3(a, b, c) - exact3(a, b, c)) <= 1e-6);
  CHECK(j.d4(0, 0, 0, 0) == doctest::Approx(24.0).epsilon(1e-4));
  CHECK(std::abs(j.d4(0, 1, 2, 2)) <= 1e-4);
}

TEST_CASE("synthetic spec parsing") {
  const SyntheticSpec spec = parse_synthetic_spec(
      "# comment\n"
      "dimension = 2\n"
      "name = demo\n"
      "monomial = 0.5 2 0   # x^2 / 2\n"
      "monomial = 0.5 0 2\n"
      "exp = 2.0 1 -1\n"
      "box = -1:1 -2:2\n");
  CHECK(spec.dimension == 2);
  CHECK(spec.name == "demo");
  CHECK(spec.monomials.size() == 2);
  CHECK(spec.exponentials.size() == 1);
  CHECK(spec.evaluate(Coords{1.0, 0.0}) == doctest::Approx(0.5 + 2.0 * std::exp(1.0)));
  CHECK(spec.box.bounds[1].second == 2.0);

  CHECK_THROWS_AS(parse_synthetic_spec("monomial = 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_synthetic_spec("dimension = 2\nmonomial = 1 2\nbox = -1:1 -1:1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_synthetic_spec("dimension = 2\nmonomial = 1 2 0\nbox = 1:-1 -1:1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_synthetic_spec("dimension = 2\nfoo = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_synthetic_spec("dimension = x\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_synthetic_spec("/nonexistent/spec.cfg"), std::invalid_argument);
}

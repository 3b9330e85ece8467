#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "statgeo/analysis.hpp"
#include "statgeo/error.hpp"
#include "statgeo/polylog.hpp"

using namespace statgeo;

TEST_CASE("WDVV residual") {
  const auto classical = classical_ideal_gas();
  for (double gamma : {0.1, 1.0, 3.0}) CHECK(wdvv_residual_at(*classical, Coords{1.0, gamma}).scaled() <= 1e-9);
  const auto quad = synthetic_potential(quadratic_spec(3));
  CHECK(wdvv_residual_at(*quad, Coords{0.2, 0.3, -0.4}).max_abs <= 1e-12);
  const auto cubic = synthetic_potential(cubic3d_spec());
  for (const Coords& x : {Coords{0.1, -0.2, 0.15}, Coords{0.3, 0.25, -0.1}}) {
    const WdvvResidual r = wdvv_residual_at(*cubic, x);
    CHECK(r.scaled() > 1e-3);
  }
}

TEST_CASE("WDVV residual of the bose gas is not zero") {
  // In two dimensions WDVV still constrains C; the bose gas does not satisfy it.
  const WdvvResidual r = wdvv_residual_at(*bose_ideal_gas(), Coords{1.0, 0.5});
  CHECK(r.scaled() > 1e-3);
}

TEST_CASE("closed-form Yukawa term") {
  CHECK(bose_yukawa_closed_form(1.0, 0.5) == doctest::Approx(0.072817715783493123257).epsilon(1e-11));
  CHECK(bose_yukawa_closed_form(1.0, 10.0) == doctest::Approx(0.056121616348526643922).epsilon(1e-9));
  // lambda^3 scaling in beta
  CHECK(bose_yukawa_closed_form(4.0, 0.5) / bose_yukawa_closed_form(1.0, 0.5) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK_THROWS_AS(bose_yukawa_closed_form(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(bose_yukawa_closed_form(0.0, 1.0), DomainError);
}

TEST_CASE("condensation asymptote") {
  const double lam3 = Units::reduced().cubed_wavelength(1.0);
  const double expected = 2 * 2.6123753486854883433 * lam3 /
                          (5 * std::sqrt(std::numbers::pi) * 1.3414872572509171798 * std::sqrt(1e-4));
  CHECK(bec_asymptote(1.0, 1e-4) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(bec_asymptote(1.3, 4e-3) / bec_asymptote(1.3, 1e-3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(bec_asymptote(1.0, 0.0), DomainError);

  // Ratios from a 40-digit evaluation of the closed form.
  const double oracle[] = {1.10454425537489, 1.01023585210628, 1.00102139553654};
  const double gammas[] = {1e-2, 1e-4, 1e-6};
  double prev = 1e300;
  for (int q = 0; q < 3; ++q) {
    const double ratio = bose_yukawa_closed_form(1.0, gammas[q]) / bec_asymptote(1.0, gammas[q]);
    CHECK(ratio == doctest::Approx(oracle[q]).epsilon(1e-9));
    CHECK(std::abs(ratio - 1.0) < prev);
    prev = std::abs(ratio - 1.0);
  }
}

TEST_CASE("positivity series coefficients") {
  const PositivitySeries s = positivity_series(12);
  REQUIRE(s.normalizer.a.size() == 13);
  REQUIRE(s.bracket.a.size() == 13);
  const double a[] = {0, 0, 2.0, 2.2980970388562795, 2.3028009571186694, 2.235116678429223, 2.1501905859309408,
                      2.0647364014614472, 1.9840747894485145, 1.9096619937657435, 1.8415614851954371,
                      1.7793441346945696, 1.7224361231717882};
  const double b[] = {0, 0, 0, 0, 0, 0, 0.35355339059327376, 1.3076504785593347, 2.9942516649378366,
                      5.4705442679169632, 8.7499179336443464, 12.821180866151632, 17.659895393544769};
  for (int k = 0; k <= 12; ++k) {
    CAPTURE(k);
    CHECK(s.normalizer.a[k] == doctest::Approx(a[k]).epsilon(1e-13));
    CHECK(std::abs(s.bracket.a[k] - b[k]) <= 1e-12 * std::max(1.0, b[k]));
  }
  CHECK(s.normalizer.a[2] == 2.0);
  CHECK(positivity_series(0).normalizer.a.size() == 1);
  CHECK(positivity_series(30).bracket.a[30] > 0.0);
  CHECK_THROWS_AS(positivity_series(31), std::invalid_argument);
  CHECK_THROWS_AS(positivity_series(-1), std::invalid_argument);
}

TEST_CASE("series agrees with the evaluated bracket for small eta") {
  const double eta = 0.01;
  const double gamma = -std::log(eta);
  const PositivitySeries s = positivity_series(20);
  double a_sum = 0.0;
  double b_sum = 0.0;
  for (int k = 20; k >= 0; --k) {
    a_sum = a_sum * eta + s.normalizer.a[k];
    b_sum = b_sum * eta + s.bracket.a[k];
  }
  const double lam3 = Units::reduced().cubed_wavelength(1.0);
  const double l5 = special::polylog(2.5, eta), l3 = special::polylog(1.5, eta), l1 = special::polylog(0.5, eta);
  const double a = 5 * l5 * l1 - 3 * l3 * l3;
  CHECK(a_sum == doctest::Approx(a).epsilon(1e-12));
  CHECK(b_sum == doctest::Approx(bose_yukawa_closed_form(1.0, gamma) * a * a * a / (20 * lam3)).epsilon(1e-8));
}

TEST_CASE("grid indexing") {
  const ScanGrid grid{{{"a", 0.0, 1.0, 3}, {"b", 10.0, 20.0, 2}}};
  CHECK(grid.size() == 6);
  CHECK(grid.point(0) == Coords{0.0, 10.0});
  CHECK(grid.point(1) == Coords{0.0, 20.0});
  CHECK(grid.point(2) == Coords{0.5, 10.0});
  CHECK(grid.point(5) == Coords{1.0, 20.0});
  CHECK(GridAxis{"c", 2.0, 3.0, 1}.at(0) == 2.0);
}

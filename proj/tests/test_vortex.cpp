#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vortexlab/numerics.hpp"
#include "vortexlab/vortex.hpp"

using namespace vortexlab;

namespace {

VortexParams reference_params() {
  // Gamma 1, nu 1, Omega 2pi, n 16: the parameter set used across the suite.
  return VortexParams{1.0, 1.0, 2.0 * std::numbers::pi, 16.0};
}

}  // namespace

TEST_CASE("parameter validation rejects out-of-range fields") {
  VortexParams p = reference_params();
  CHECK_NOTHROW(p.validate());
  p.nu = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = reference_params();
  p.omega_cap = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = reference_params();
  p.n_offset = 1.0;  // spread would touch zero once per cycle
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = reference_params();
  p.gamma = std::nan("");
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("viscosity oscillates as nu cos(Omega t)") {
  const VortexParams p = reference_params();
  CHECK(viscosity_at(0.0, p) == doctest::Approx(1.0));
  CHECK(std::abs(viscosity_at(0.25, p)) < 1e-12);        // quarter period
  CHECK(viscosity_at(0.5, p) == doctest::Approx(-1.0));  // half period
}

TEST_CASE("spread stays positive and returns after one period") {
  const VortexParams p = reference_params();
  CHECK(std::abs(sigma_at(0.0, p) - 2.5464790894703253723) < 1e-15);
  CHECK(std::abs(sigma_at(0.37, p) - 2.662498049883357177) < 1e-15);
  const double period = 2.0 * std::numbers::pi / p.omega_cap;
  for (double t = 0.0; t < 1.0; t += 0.07) {
    CHECK(sigma_at(t, p) > 0.0);
    CHECK(std::abs(sigma_at(t + period, p) - sigma_at(t, p)) < 1e-14);
  }
  // spread is the antiderivative of the viscosity
  const double h = 1e-6;
  for (double t : {0.1, 0.4, 0.83}) {
    const double d = (sigma_at(t + h, p) - sigma_at(t - h, p)) / (2.0 * h);
    CHECK(std::abs(d - viscosity_at(t, p)) < 1e-8);
  }
}

TEST_CASE("vorticity is a normalized Gaussian in r") {
  const VortexParams p = reference_params();
  CHECK(std::abs(vorticity_at(0.0, 0.0, p) - 0.098174770424681038702) < 1e-15);
  CHECK(std::abs(vorticity_at(0.0, 0.37, p) - 0.093896782388611471759) < 1e-15);
  const double s = sigma_at(0.2, p);
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    const double expected = p.gamma / (4.0 * s) * std::exp(-r * r / (4.0 * s));
    CHECK(vorticity_at(r, 0.2, p) == doctest::Approx(expected).epsilon(1e-14));
  }
  // total strength integrates to Gamma/2 regardless of the spread
  const double total = num::adaptive_simpson(
      [&](double r) { return vorticity_at(r, 0.2, p) * r; }, 0.0, 60.0, 1e-13);
  CHECK(std::abs(total - 0.5 * p.gamma) < 1e-10);
}

TEST_CASE("orbital speed matches its small-r series and far-field tail") {
  const double spread = 2.3;
  const double gamma = 1.7;
  CHECK(velocity_profile(0.0, spread, gamma) == 0.0);
  // below the series switch the linear term is exact to rounding
  const double r_small = 1e-12;
  CHECK(std::abs(velocity_profile(r_small, spread, gamma) - gamma * r_small / (8.0 * spread)) <
        1e-25);
  // just above the switch the full expression still matches the linear term
  // (the next series correction is r^2/(8 spread) ~ 1e-17 relative)
  const double r_sw = 1.001e-8 * std::sqrt(spread);
  CHECK(velocity_profile(r_sw, spread, gamma) ==
        doctest::Approx(gamma * r_sw / (8.0 * spread)).epsilon(1e-12));
  // far field decays like a point vortex
  const double r_far = 80.0;
  CHECK(velocity_profile(r_far, spread, gamma) ==
        doctest::Approx(gamma / (2.0 * r_far)).epsilon(1e-12));
}

TEST_CASE("velocity_over_r is finite at the axis and consistent elsewhere") {
  const double spread = 0.9;
  const double gamma = -2.5;
  CHECK(velocity_over_r_profile(0.0, spread, gamma) ==
        doctest::Approx(gamma / (8.0 * spread)).epsilon(1e-14));
  for (double r : {0.3, 1.1, 2.9}) {
    CHECK(velocity_over_r_profile(r, spread, gamma) ==
          doctest::Approx(velocity_profile(r, spread, gamma) / r).epsilon(1e-14));
  }
}

TEST_CASE("profiles reject a non-positive spread") {
  CHECK_THROWS_AS(vorticity_profile(1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(velocity_profile(1.0, -2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(velocity_over_r_profile(1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("constant-viscosity spread grows linearly") {
  CHECK(lamb_oseen_spread(0.0, 0.7, 1.5) == doctest::Approx(2.25));
  CHECK(lamb_oseen_spread(2.0, 0.7, 1.5) == doctest::Approx(0.7 * 2.0 + 2.25));
}

TEST_CASE("wall constant solves ln(2a+1) = a in (1, 2)") {
  const WallConstant wc = solve_wall_constant();
  CHECK(std::abs(wc.a0 - 1.256431208626169676982738) < 1e-13);
  CHECK(std::abs(wc.residual) < 1e-12);
  CHECK(wall_constant() == doctest::Approx(wc.a0).epsilon(1e-15));
  // the defining property, restated independently
  CHECK(std::abs(std::log(2.0 * wc.a0 + 1.0) - wc.a0) < 1e-12);
}

TEST_CASE("core radius sits at the argmax of the speed profile") {
  const VortexParams p = reference_params();
  CHECK(std::abs(core_radius_at(0.0, p) - 3.5774157153590461503) < 1e-13);
  for (double t : {0.0, 0.37, 0.81}) {
    const double rc = core_radius_at(t, p);
    CHECK(rc == doctest::Approx(2.0 * std::sqrt(wall_constant() * sigma_at(t, p))).epsilon(1e-15));
    const double rstar = num::golden_section_max(
        [&](double r) { return velocity_at(r, t, p); }, 0.1 * rc, 4.0 * rc, 1e-12);
    CHECK(std::abs(rstar - rc) < 1e-7 * rc);
    // speed rises below the peak and falls beyond it
    CHECK(velocity_at(0.9 * rc, t, p) < velocity_at(rc, t, p));
    CHECK(velocity_at(1.1 * rc, t, p) < velocity_at(rc, t, p));
  }
}

TEST_CASE("sampled profiles agree with pointwise evaluation") {
  const VortexParams p = reference_params();
  const std::vector<double> grid{0.0, 0.5, 1.0, 2.0, 3.5, 6.0};
  const auto vort = sample_radial_field(ProfileKind::vorticity, grid, 0.37, p);
  const auto spd = sample_radial_field(ProfileKind::speed, grid, 0.37, p);
  REQUIRE(vort.values.size() == grid.size());
  REQUIRE(spd.values.size() == grid.size());
  CHECK(vort.kind == ProfileKind::vorticity);
  CHECK(spd.kind == ProfileKind::speed);
  CHECK(vort.time == doctest::Approx(0.37));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(vort.values[i] == doctest::Approx(vorticity_at(grid[i], 0.37, p)).epsilon(1e-15));
    CHECK(spd.values[i] == doctest::Approx(velocity_at(grid[i], 0.37, p)).epsilon(1e-15));
  }
}

TEST_CASE("sampling validates the grid") {
  const VortexParams p = reference_params();
  const std::vector<double> empty;
  CHECK_THROWS_AS(sample_radial_field(ProfileKind::speed, empty, 0.0, p), std::invalid_argument);
  const std::vector<double> negative{-1.0, 0.0, 1.0};
  CHECK_THROWS_AS(sample_radial_field(ProfileKind::speed, negative, 0.0, p),
                  std::invalid_argument);
  const std::vector<double> repeated{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(sample_radial_field(ProfileKind::speed, repeated, 0.0, p),
                  std::invalid_argument);
}

TEST_CASE("speed integrates the vorticity flux") {
  // r v(r) equals the integral of w r' dr' from the axis out to r
  const VortexParams p = reference_params();
  for (double t : {0.0, 0.37}) {
    for (double r : {0.8, 2.0, 4.5}) {
      const double flux = num::adaptive_simpson(
          [&](double s) { return vorticity_at(s, t, p) * s; }, 0.0, r, 1e-14);
      CHECK(std::abs(r * velocity_at(r, t, p) - flux) < 1e-12);
    }
  }
}

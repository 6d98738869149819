#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vortexlab/spin.hpp"

using namespace vortexlab;

namespace {

constexpr double kPi = std::numbers::pi;

double spinor_distance(const Spinor& a, const Spinor& b) {
  return std::sqrt(std::norm(a.up - b.up) + std::norm(a.down - b.down));
}

}  // namespace

TEST_CASE("drive magnitude and default spinor") {
  CHECK(DriveField{3.0, 4.0, 12.0}.magnitude() == doctest::Approx(13.0));
  const Spinor psi;
  CHECK(psi.norm() == doctest::Approx(1.0));
  CHECK(psi.up == std::complex<double>(1.0, 0.0));
}

TEST_CASE("angular velocity of a tube-only loop is a uniform rotation") {
  // b1 = 0, omega1 = 0: a circle in the xz plane turning about -y
  RingParams p;
  p.a0 = 1.4;
  p.b1 = 0.0;
  p.omega0 = 2.3;
  p.omega1 = 0.0;
  for (double t : {0.1, 0.7, 2.2}) {
    const Vec3 om = angular_velocity(t, p);
    CHECK(std::abs(om.x) < 1e-14);
    CHECK(om.y == doctest::Approx(-p.omega0).epsilon(1e-13));
    CHECK(std::abs(om.z) < 1e-14);
  }
}

TEST_CASE("angular velocity is perpendicular to the position") {
  RingParams p;
  p.a0 = 1.0;
  p.b1 = 0.0;
  p.omega0 = 1.0;
  p.omega1 = 0.5;
  for (double t = 0.05; t < 4.0 * kPi; t += 0.41) {
    const Vec3 r = ring_position(t, p);
    const Vec3 om = angular_velocity(t, p);
    CHECK(std::abs(dot(r, om)) < 1e-13 * norm(om));
    // and it reconstructs the velocity component normal to r
    const Vec3 v = ring_velocity(t, p);
    CHECK(norm(cross(om, r) - v) < 1e-12);
  }
}

TEST_CASE("angular velocity rejects a loop through the origin") {
  RingParams p;
  p.a0 = 1.0;
  p.b1 = 1.0;
  p.omega0 = 1.0;
  p.omega1 = 0.3;
  CHECK_THROWS_AS(angular_velocity(kPi, p), std::invalid_argument);  // rho = 0 there
}

TEST_CASE("closed-form drive components at t = 0") {
  const double w = 1.7;
  const auto op = omega_plus(0.0, w);
  CHECK(std::abs(op.real()) < 1e-15);
  CHECK(op.imag() == doctest::Approx(0.5 * w));
  CHECK(omega_minus(0.0, w) == std::conj(op));
  const Vec3 o = omega_closed_form(0.0, w);
  CHECK(std::abs(o.x) < 1e-15);
  CHECK(o.y == doctest::Approx(0.5 * w));
  CHECK(o.z == doctest::Approx(w));
}

TEST_CASE("conjugate pair relation holds at all times") {
  const double w = 0.9;
  for (double t = 0.0; t < 7.0; t += 0.61) {
    CHECK(omega_minus(t, w) == std::conj(omega_plus(t, w)));
    const Vec3 o = omega_closed_form(t, w);
    CHECK(o.z == doctest::Approx(w * std::cos(w * t)).epsilon(1e-14));
  }
}

TEST_CASE("the two drive routes disagree and the gap is reported as-is") {
  const double w = 1.0;
  std::vector<double> times;
  for (int i = 0; i <= 32; ++i) times.push_back(4.0 * kPi * i / 32.0);
  const auto cmp = compare_omega(w, times);
  REQUIRE(cmp.rows.size() == times.size());

  // at t = 0 the curve route gives (0, -w, w/2), the closed form (0, w/2, w)
  const auto& r0 = cmp.rows.front();
  CHECK(std::abs(r0.from_curve.x) < 1e-14);
  CHECK(r0.from_curve.y == doctest::Approx(-w));
  CHECK(r0.from_curve.z == doctest::Approx(0.5 * w));
  CHECK(r0.from_closed_form.y == doctest::Approx(0.5 * w));
  CHECK(r0.from_closed_form.z == doctest::Approx(w));
  CHECK(r0.deviation.y == doctest::Approx(-1.5 * w));
  CHECK(r0.deviation.z == doctest::Approx(-0.5 * w));

  // rows are self-consistent and the maxima summarize them
  double worst = 0.0;
  for (const auto& row : cmp.rows) {
    CHECK(row.deviation.x == doctest::Approx(row.from_curve.x - row.from_closed_form.x));
    worst = std::max({worst, std::abs(row.deviation.x), std::abs(row.deviation.y),
                      std::abs(row.deviation.z)});
  }
  CHECK(cmp.max_deviation == doctest::Approx(worst));
  CHECK(cmp.max_deviation > 0.5 * w);  // the routes genuinely differ
}

TEST_CASE("drive from angular velocity scales by hbar") {
  const DriveField d = drive_from_omega(Vec3{1.0, -2.0, 0.5}, 3.0);
  CHECK(d.theta_x == doctest::Approx(3.0));
  CHECK(d.theta_y == doctest::Approx(-6.0));
  CHECK(d.theta_z == doctest::Approx(1.5));
}

TEST_CASE("hamiltonian matrix layout and hermiticity") {
  const auto h = hamiltonian_matrix(DriveField{0.3, -0.7, 1.1});
  CHECK(h[0] == std::complex<double>(1.1, 0.0));
  CHECK(h[1] == std::complex<double>(0.3, 0.7));
  CHECK(h[2] == std::complex<double>(0.3, -0.7));
  CHECK(h[3] == std::complex<double>(-1.1, 0.0));
  CHECK(h[1] == std::conj(h[2]));
  CHECK(std::abs((h[0] + h[3]).real()) < 1e-15);  // traceless
}

TEST_CASE("constant z drive advances the two phases oppositely") {
  const double thz = 0.8;
  auto drive = [thz](double) { return DriveField{0.0, 0.0, thz}; };
  Spinor psi0;
  psi0.up = std::complex<double>(std::sqrt(0.5), 0.0);
  psi0.down = std::complex<double>(0.0, std::sqrt(0.5));
  const double t = 1.9;
  const auto trace = evolve_spinor(psi0, drive, 0.0, t, 50);
  const std::complex<double> i(0.0, 1.0);
  const Spinor expect{psi0.up * std::exp(-i * thz * t), psi0.down * std::exp(i * thz * t)};
  CHECK(spinor_distance(trace.spinors.back(), expect) < 1e-13);
}

TEST_CASE("transverse drive produces full-contrast oscillation") {
  const double thx = 0.5;
  auto drive = [thx](double) { return DriveField{thx, 0.0, 0.0}; };
  for (double t : {0.3, 1.0, 2.6}) {
    const auto trace = evolve_spinor(Spinor{}, drive, 0.0, t, 64);
    const auto& psi = trace.spinors.back();
    CHECK(std::norm(psi.up) == doctest::Approx(std::cos(thx * t) * std::cos(thx * t)).epsilon(1e-12));
    CHECK(std::norm(psi.down) == doctest::Approx(std::sin(thx * t) * std::sin(thx * t)).epsilon(1e-12));
  }
}

TEST_CASE("one full turn of the state flips its sign, two turns restore it") {
  // constant drive of magnitude |theta|: the state axis turns at 2|theta|/hbar,
  // so t = pi hbar / |theta| is one revolution and only the overall sign moves
  const DriveField d{0.3, -0.2, 0.6};
  const double mag = d.magnitude();
  const double hbar = 1.0;
  auto drive = [d](double) { return d; };
  Spinor psi0;
  psi0.up = std::complex<double>(0.6, 0.0);
  psi0.down = std::complex<double>(0.0, 0.8);

  const auto one = evolve_spinor(psi0, drive, 0.0, kPi * hbar / mag, 200, hbar);
  Spinor minus;
  minus.up = -psi0.up;
  minus.down = -psi0.down;
  CHECK(spinor_distance(one.spinors.back(), minus) < 1e-9);

  const auto two = evolve_spinor(psi0, drive, 0.0, 2.0 * kPi * hbar / mag, 200, hbar);
  CHECK(spinor_distance(two.spinors.back(), psi0) < 1e-9);
}

TEST_CASE("norm is preserved under a time-dependent drive") {
  const double w = 1.0;
  auto drive = [w](double t) { return drive_from_omega(omega_closed_form(t, w), 1.0); };
  const auto trace = evolve_spinor(Spinor{}, drive, 0.0, 4.0 * kPi / w, 400);
  REQUIRE(trace.norms.size() == 401);
  for (double n : trace.norms) CHECK(std::abs(n - 1.0) < 1e-12);
  CHECK(trace.times.front() == 0.0);
  CHECK(trace.times.back() == doctest::Approx(4.0 * kPi / w));
}

TEST_CASE("midpoint stepping converges at second order") {
  const double w = 1.0;
  auto drive = [w](double t) { return drive_from_omega(omega_closed_form(t, w), 1.0); };
  const double t_end = 2.0;
  auto endpoint = [&](int steps) {
    return evolve_spinor(Spinor{}, drive, 0.0, t_end, steps).spinors.back();
  };
  const Spinor ref = endpoint(3200);
  const double e100 = spinor_distance(endpoint(100), ref);
  const double e200 = spinor_distance(endpoint(200), ref);
  CHECK(e200 < e100);
  const double order = std::log2(e100 / e200);
  CHECK(order > 1.7);
  CHECK(order < 2.3);
}

TEST_CASE("spinor evolution input validation") {
  auto drive = [](double) { return DriveField{0.0, 0.0, 1.0}; };
  CHECK_THROWS_AS(evolve_spinor(Spinor{}, drive, 0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(evolve_spinor(Spinor{}, drive, 0.0, std::nan(""), 10), std::invalid_argument);
  CHECK_THROWS_AS(evolve_spinor(Spinor{}, drive, 0.0, 1.0, 10, 0.0), std::invalid_argument);
  Spinor unnormalized;
  unnormalized.up = std::complex<double>(0.5, 0.0);
  CHECK_THROWS_AS(evolve_spinor(unnormalized, drive, 0.0, 1.0, 10), std::invalid_argument);
}

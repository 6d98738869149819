#include "vortexlab/vortex.hpp"

#include <cmath>
#include <stdexcept>

#include "vortexlab/numerics.hpp"

namespace vortexlab {

void VortexParams::validate() const {
  if (!std::isfinite(gamma) || !std::isfinite(nu) || !std::isfinite(omega_cap) ||
      !std::isfinite(n_offset))
    throw std::invalid_argument("VortexParams: non-finite field");
  if (nu <= 0.0) throw std::invalid_argument("VortexParams: nu must be positive");
  if (omega_cap <= 0.0) throw std::invalid_argument("VortexParams: omega_cap must be positive");
  if (n_offset <= 1.0) throw std::invalid_argument("VortexParams: n_offset must exceed 1");
}

double viscosity_at(double t, const VortexParams& p) {
  p.validate();
  return p.nu * std::cos(p.omega_cap * t);
}

double sigma_at(double t, const VortexParams& p) {
  p.validate();
  return p.nu / p.omega_cap * (std::sin(p.omega_cap * t) + p.n_offset);
}

double vorticity_profile(double r, double spread, double gamma) {
  if (!(spread > 0.0)) throw std::invalid_argument("vorticity_profile: spread must be positive");
  return gamma / (4.0 * spread) * std::exp(-r * r / (4.0 * spread));
}

double velocity_profile(double r, double spread, double gamma) {
  if (!(spread > 0.0)) throw std::invalid_argument("velocity_profile: spread must be positive");
  if (r == 0.0) return 0.0;
  if (std::abs(r) < 1e-8 * std::sqrt(spread))
    return gamma * r / (8.0 * spread);  // series limit, avoids 0/0 cancellation
  return gamma / (2.0 * r) * (-std::expm1(-r * r / (4.0 * spread)));
}

double velocity_over_r_profile(double r, double spread, double gamma) {
  if (!(spread > 0.0))
    throw std::invalid_argument("velocity_over_r_profile: spread must be positive");
  if (std::abs(r) < 1e-8 * std::sqrt(spread)) return gamma / (8.0 * spread);
  return gamma / (2.0 * r * r) * (-std::expm1(-r * r / (4.0 * spread)));
}

double lamb_oseen_spread(double t, double nu, double sigma0) {
  return nu * t + sigma0 * sigma0;
}

double vorticity_at(double r, double t, const VortexParams& p) {
  return vorticity_profile(r, sigma_at(t, p), p.gamma);
}

double velocity_at(double r, double t, const VortexParams& p) {
  return velocity_profile(r, sigma_at(t, p), p.gamma);
}

WallConstant solve_wall_constant(double tol) {
  const auto f = [](double a) { return std::log(2.0 * a + 1.0) - a; };
  const auto df = [](double a) { return 2.0 / (2.0 * a + 1.0) - 1.0; };
  // f(1) = ln3 - 1 > 0, f(2) = ln5 - 2 < 0: the nontrivial root is bracketed.
  const double a0 = num::bisect_newton(f, df, 1.0, 2.0, tol);
  return WallConstant{a0, f(a0)};
}

double wall_constant() {
  static const double a0 = solve_wall_constant().a0;
  return a0;
}

double core_radius_at(double t, const VortexParams& p) {
  return 2.0 * std::sqrt(wall_constant() * sigma_at(t, p));
}

RadialProfile sample_radial_field(ProfileKind kind, std::span<const double> grid, double t,
                                  const VortexParams& p) {
  p.validate();
  if (grid.empty()) throw std::invalid_argument("sample_radial_field: empty grid");
  if (grid[0] < 0.0) throw std::invalid_argument("sample_radial_field: negative radius");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("sample_radial_field: grid not strictly increasing");

  const double spread = sigma_at(t, p);
  RadialProfile out;
  out.radii.assign(grid.begin(), grid.end());
  out.values.resize(grid.size());
  out.time = t;
  out.kind = kind;
  for (size_t i = 0; i < grid.size(); ++i)
    out.values[i] = kind == ProfileKind::vorticity ? vorticity_profile(grid[i], spread, p.gamma)
                                                   : velocity_profile(grid[i], spread, p.gamma);
  return out;
}

}  // namespace vortexlab

#pragma once

#include <span>
#include <vector>

// Axisymmetric Gaussian vortex with an oscillating kinematic viscosity
//
//   nu(t)     = nu * cos(Omega*t)
//   Sigma(t)  = (nu/Omega) * (sin(Omega*t) + n)        effective spread
//   omega(r,t)= Gamma/(4*Sigma) * exp(-r^2/(4*Sigma))  vorticity
//   v(r,t)    = Gamma/(2*r) * (1 - exp(-r^2/(4*Sigma)))  orbital speed
//
// For n > 1 the spread stays positive and the profile is periodic in t with
// period 2*pi/Omega: the vortex neither decays nor blows up.  With a constant
// viscosity the same profile under Sigma = nu*t + sigma^2 is the classical
// Lamb-Oseen vortex; the *_profile entry points take Sigma directly so both
// families share one implementation.

namespace vortexlab {

struct VortexParams {
  double gamma;      // circulation Gamma [length^2/time], either sign
  double nu;         // viscosity amplitude [length^2/time], > 0
  double omega_cap;  // oscillation frequency Omega [1/time], > 0
  double n_offset;   // dimensionless spread offset n, > 1 (sigma^2 = n*nu/Omega)

  void validate() const;  // throws std::invalid_argument
};

enum class ProfileKind { vorticity, speed };

// Radial samples of one field at a fixed time.
struct RadialProfile {
  std::vector<double> radii;
  std::vector<double> values;
  double time = 0.0;
  ProfileKind kind = ProfileKind::vorticity;
};

double viscosity_at(double t, const VortexParams& p);
double sigma_at(double t, const VortexParams& p);
double vorticity_at(double r, double t, const VortexParams& p);
double velocity_at(double r, double t, const VortexParams& p);

// Same profiles parameterized by an explicit spread (spread > 0).
double vorticity_profile(double r, double spread, double gamma);
double velocity_profile(double r, double spread, double gamma);
// Ratio v(r)/r, finite at r = 0; the planar field (vx,vy) = (-y,x)*this.
double velocity_over_r_profile(double r, double spread, double gamma);
// Constant-viscosity (Lamb-Oseen) spread: nu*t + sigma0^2.
double lamb_oseen_spread(double t, double nu, double sigma0);

// The wall constant a0 solves ln(2*a0+1) = a0 on (1, 2); the orbital speed
// peaks at r = 2*sqrt(a0*Sigma).
struct WallConstant {
  double a0;
  double residual;  // ln(2*a0+1) - a0 at the returned root
};

WallConstant solve_wall_constant(double tol = 1e-12);
double wall_constant();  // cached a0

// Radius of maximum orbital speed, 2*sqrt(a0*Sigma(t)).
double core_radius_at(double t, const VortexParams& p);

// Tabulates vorticity or speed on a strictly increasing grid of radii >= 0.
RadialProfile sample_radial_field(ProfileKind kind, std::span<const double> grid, double t,
                                  const VortexParams& p);

}  // namespace vortexlab

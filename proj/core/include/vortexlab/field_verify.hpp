#pragma once

// Independent numerical checks of the closed-form vortex solution: pointwise
// residuals of the radial diffusion equation
//   dw/dt = nu(t) (d2w/dr2 + (1/r) dw/dr)
// under second-order central differences, divergence/curl probes of the
// planar velocity field, and a mode-wise spectral evolver used as an
// evolution oracle. The evolver expands the profile in an order-zero
// Fourier-Bessel basis and advances each coefficient by the exact factor
// exp(-k^2 (Sigma(t1) - Sigma(t0))); no forward time stepping is involved,
// so legs with negative net viscosity (anti-diffusion) are handled exactly
// instead of blowing up. Modes indistinguishable from the measurement noise
// of the sampled input (the high-mode plateau of the spectrum) are zeroed
// before the update; contraction can therefore never amplify sampling noise,
// at the cost of limiting fidelity to what the input resolution supports.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vortexlab/vortex.hpp"

namespace vortexlab {

// Spread/viscosity pair defining one radial diffusion problem. sigma must be
// the antiderivative of nu up to the constant offset: nu(t) = dSigma/dt.
struct RadialDiffusionModel {
  double gamma = 1.0;
  std::function<double(double)> sigma;
  std::function<double(double)> nu;
};

RadialDiffusionModel oscillating_vortex_model(const VortexParams& p);
RadialDiffusionModel lamb_oseen_model(double nu, double sigma0, double gamma);

struct ResidualReport {
  std::vector<double> grid;
  std::vector<double> residuals;
  double norm_inf = 0.0;  // max |residual|
  double scale = 0.0;     // max |finite-difference dw/dt|, the normalizer
};

// Uniform Cartesian grids with velocity samples, vx/vy indexed [iy*nx + ix].
struct PlanarField {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> vx;
  std::vector<double> vy;
};

struct PlanarDerivatives {
  std::vector<double> divergence;
  std::vector<double> curl_z;
};

struct TransformEvolverSpec {
  double r_max = 40.0;
  int modes = 256;
  std::string quadrature = "composite_gauss_legendre_12";

  void validate() const;  // modes >= 16, r_max > 0
};

struct ProfileDistance {
  double sup = 0.0;
  double l2 = 0.0;           // sqrt(mean spacing * sum of squared errors)
  double rel_to_peak = 0.0;  // sup / max(peak(a), peak(b))
};

struct SpreadExceedsDomainError : std::runtime_error {
  explicit SpreadExceedsDomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NonDecayingProfileError : std::runtime_error {
  explicit NonDecayingProfileError(const std::string& what) : std::runtime_error(what) {}
};

// Central-difference residual of the diffusion equation evaluated on the
// closed-form vorticity. Grid points must keep r - h_r positive; the 1/r
// term rules out r = 0.
ResidualReport pde_residual(const RadialDiffusionModel& m, const std::vector<double>& grid,
                            double t, double h_r, double h_t);
ResidualReport pde_residual(const VortexParams& p, const std::vector<double>& grid, double t,
                            double h_r, double h_t);

// Samples the in-plane field vx = -(v/r) y, vy = (v/r) x on a uniform grid.
PlanarField make_planar_vortex_field(const VortexParams& p, double t, double x_min,
                                     double x_max, int nx, double y_min, double y_max,
                                     int ny);

// Second-order divergence and z-curl: central differences inside, one-sided
// three-point stencils on the boundary (exact for fields quadratic in x, y).
PlanarDerivatives planar_divergence_curl(const PlanarField& f);

// Advances a vorticity profile from its own time to t1 through the exact
// per-mode exponential. Requires t1 >= profile time, a profile that has
// decayed by its last sample, and 2*sqrt(Sigma(t)) <= r_max/5 throughout
// the interval. Off-grid quadrature nodes read the profile through a
// not-a-knot spline, held constant below the first sample and zero beyond
// the last.
RadialProfile spectral_evolve(const RadialProfile& initial, const RadialDiffusionModel& m,
                              double t1, const TransformEvolverSpec& spec);
RadialProfile spectral_evolve(const RadialProfile& initial, const VortexParams& p, double t1,
                              const TransformEvolverSpec& spec);

// Norm distances between two profiles on the same grid and kind.
ProfileDistance compare_profiles(const RadialProfile& a, const RadialProfile& b);

}  // namespace vortexlab

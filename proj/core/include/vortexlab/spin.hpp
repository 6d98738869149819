#pragma once

// Spin-1/2 dynamics on the closed loop: the angular velocity Omega =
// (r x v)/|r|^2 of a point moving along the curve, the closed-form drive
//   Omega_+ = Omega_x + i*Omega_y = -(w/2) e^{i w t/2} (2 sin wt - i cos wt),
//   Omega_z = w cos wt,
// and unitary evolution of a two-component spinor under
//   i hbar d/dt (psi_up, psi_dn) = [[th_z, th_x - i th_y],
//                                   [th_x + i th_y, -th_z]] (psi_up, psi_dn).
// The two Omega routes disagree; compare_omega reports the gap as data and
// makes no attempt to reconcile them.

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "vortexlab/ring.hpp"

namespace vortexlab {

// Energy components (th_x, th_y, th_z) entering the two-level Hamiltonian.
struct DriveField {
  double theta_x = 0.0;
  double theta_y = 0.0;
  double theta_z = 0.0;

  double magnitude() const;
};

struct Spinor {
  std::complex<double> up{1.0, 0.0};
  std::complex<double> down{0.0, 0.0};

  double norm() const;  // sqrt(|up|^2 + |down|^2)
};

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<Spinor> spinors;
  std::vector<double> norms;
};

struct OmegaComparisonRow {
  double t = 0.0;
  Vec3 from_curve;        // (r x v)/|r|^2 with b1 = 0, omega1 = omega0/2
  Vec3 from_closed_form;  // the printed exponential form with w = omega0
  Vec3 deviation;         // from_curve - from_closed_form
};

struct OmegaComparison {
  std::vector<OmegaComparisonRow> rows;
  Vec3 max_abs_deviation;     // componentwise max |deviation|
  double max_deviation = 0;   // max over components and rows
};

// (r x v)/|r|^2 evaluated on the loop. Throws std::invalid_argument when the
// position passes through the origin (only reachable at b1 = a0).
Vec3 angular_velocity(double t, const RingParams& p);

// The printed complex pair; omega_minus is the conjugate of omega_plus.
std::complex<double> omega_plus(double t, double omega);
std::complex<double> omega_minus(double t, double omega);

// (Re Omega_+, Im Omega_+, w cos wt).
Vec3 omega_closed_form(double t, double omega);

// Tabulates both Omega routes over the given times and records the
// componentwise gap. Reports, never judges: the routes genuinely differ.
OmegaComparison compare_omega(double omega0, const std::vector<double>& times);

// theta_i = hbar * Omega_i.
DriveField drive_from_omega(const Vec3& omegavec, double hbar);

// Row-major [[th_z, th_x - i th_y], [th_x + i th_y, -th_z]]; Hermitian by
// construction.
std::array<std::complex<double>, 4> hamiltonian_matrix(const DriveField& d);

// Midpoint-sampled piecewise-constant propagation: each step applies the
// exact Pauli exponential exp(-i H dt / hbar), so every intermediate state
// is unit-norm to rounding and the global error is O(dt^2) for smooth
// drives. Throws std::invalid_argument for steps < 1, non-finite spans,
// or |psi0| off 1 by more than 1e-12.
EvolutionTrace evolve_spinor(const Spinor& psi0,
                             const std::function<DriveField(double)>& drive, double t_begin,
                             double t_end, int steps, double hbar = 1.0);

}  // namespace vortexlab

#include "vortexlab/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace vortexlab {

double DriveField::magnitude() const {
  return std::sqrt(theta_x * theta_x + theta_y * theta_y + theta_z * theta_z);
}

double Spinor::norm() const { return std::sqrt(std::norm(up) + std::norm(down)); }

Vec3 angular_velocity(double t, const RingParams& p) {
  const Vec3 r = ring_position(t, p);
  const double r2 = dot(r, r);
  // The smallest |r| a loop can reach is |a0 - b1|, so this tolerance only
  // ever trips for loops that genuinely pass through the origin (b1 == a0),
  // where rounding noise in the trig would otherwise masquerade as a position.
  const double scale = p.a0 + p.b1;
  if (r2 <= 1e-24 * scale * scale)
    throw std::invalid_argument("angular_velocity: position at the origin");
  return (1.0 / r2) * cross(r, ring_velocity(t, p));
}

std::complex<double> omega_plus(double t, double omega) {
  const std::complex<double> i(0.0, 1.0);
  const double wt = omega * t;
  return -0.5 * omega * std::exp(i * (0.5 * wt)) *
         (2.0 * std::sin(wt) - i * std::cos(wt));
}

std::complex<double> omega_minus(double t, double omega) {
  return std::conj(omega_plus(t, omega));
}

Vec3 omega_closed_form(double t, double omega) {
  const std::complex<double> op = omega_plus(t, omega);
  return {op.real(), op.imag(), omega * std::cos(omega * t)};
}

OmegaComparison compare_omega(double omega0, const std::vector<double>& times) {
  RingParams p;
  p.a0 = 1.0;
  p.b1 = 0.0;
  p.omega0 = omega0;
  p.omega1 = 0.5 * omega0;
  OmegaComparison out;
  out.rows.reserve(times.size());
  for (double t : times) {
    OmegaComparisonRow row;
    row.t = t;
    row.from_curve = angular_velocity(t, p);
    row.from_closed_form = omega_closed_form(t, omega0);
    row.deviation = row.from_curve - row.from_closed_form;
    out.max_abs_deviation.x = std::max(out.max_abs_deviation.x, std::abs(row.deviation.x));
    out.max_abs_deviation.y = std::max(out.max_abs_deviation.y, std::abs(row.deviation.y));
    out.max_abs_deviation.z = std::max(out.max_abs_deviation.z, std::abs(row.deviation.z));
    out.rows.push_back(row);
  }
  out.max_deviation = std::max(
      {out.max_abs_deviation.x, out.max_abs_deviation.y, out.max_abs_deviation.z});
  return out;
}

DriveField drive_from_omega(const Vec3& omegavec, double hbar) {
  return {hbar * omegavec.x, hbar * omegavec.y, hbar * omegavec.z};
}

std::array<std::complex<double>, 4> hamiltonian_matrix(const DriveField& d) {
  return {std::complex<double>(d.theta_z, 0.0),
          std::complex<double>(d.theta_x, -d.theta_y),
          std::complex<double>(d.theta_x, d.theta_y),
          std::complex<double>(-d.theta_z, 0.0)};
}

namespace {

// psi <- exp(-i (theta . sigma) dt / hbar) psi, evaluated in closed form:
// exp(-i phi n.sigma) = cos(phi) I - i sin(phi) n.sigma with phi = |theta| dt / hbar.
void apply_step(Spinor& psi, const DriveField& d, double dt, double hbar) {
  const double mag = d.magnitude();
  if (mag == 0.0) return;
  const double phi = mag * dt / hbar;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double nx = d.theta_x / mag, ny = d.theta_y / mag, nz = d.theta_z / mag;
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> a = c - i * s * nz;           // acts on up from up
  const std::complex<double> b = -i * s * (nx - i * ny);   // acts on up from down
  const std::complex<double> cc = -i * s * (nx + i * ny);  // acts on down from up
  const std::complex<double> dd = c + i * s * nz;          // acts on down from down
  const std::complex<double> up = a * psi.up + b * psi.down;
  const std::complex<double> down = cc * psi.up + dd * psi.down;
  psi.up = up;
  psi.down = down;
}

}  // namespace

EvolutionTrace evolve_spinor(const Spinor& psi0,
                             const std::function<DriveField(double)>& drive, double t_begin,
                             double t_end, int steps, double hbar) {
  if (steps < 1) throw std::invalid_argument("evolve_spinor: steps must be at least 1");
  if (!std::isfinite(t_begin) || !std::isfinite(t_end))
    throw std::invalid_argument("evolve_spinor: non-finite time span");
  if (!(hbar > 0.0)) throw std::invalid_argument("evolve_spinor: hbar must be positive");
  if (std::abs(psi0.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("evolve_spinor: psi0 must be normalized");

  EvolutionTrace trace;
  trace.times.reserve(steps + 1);
  trace.spinors.reserve(steps + 1);
  trace.norms.reserve(steps + 1);

  const double dt = (t_end - t_begin) / steps;
  Spinor psi = psi0;
  trace.times.push_back(t_begin);
  trace.spinors.push_back(psi);
  trace.norms.push_back(psi.norm());
  for (int k = 0; k < steps; ++k) {
    const double t_mid = t_begin + (k + 0.5) * dt;
    apply_step(psi, drive(t_mid), dt, hbar);
    trace.times.push_back(t_begin + (k + 1) * dt);
    trace.spinors.push_back(psi);
    trace.norms.push_back(psi.norm());
  }
  return trace;
}

}  // namespace vortexlab

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

// Helicoidal vortex ring: a curve winding around a torus of radii (b1, a0)
// at tube frequency omega0 while revolving about the z axis at omega1,
//
//   x = (b1 + a0*cos(omega0*t + phi0)) * cos(omega1*t + phi1)
//   y = (b1 + a0*cos(omega0*t + phi0)) * sin(omega1*t + phi1)
//   z =  a0*sin(omega0*t + phi0)
//
// For b1 = 0 the curve lies on the sphere of radius a0 (a "vortex ball").
// The curve closes iff omega1/omega0 is rational; for omega1 = omega0/n it is
// an n-associated loop closing after n tube revolutions.

namespace vortexlab {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

struct RingParams {
  double a0;      // tube radius [length], > 0
  double b1;      // torus radius [length], >= 0
  double omega0;  // tube-revolution frequency [1/time]
  double omega1;  // torus-revolution frequency [1/time]
  double phi0 = 0.0;
  double phi1 = 0.0;

  void validate() const;  // throws std::invalid_argument
};

// Loop taxonomy. n_associated covers omega1/omega0 = 1/n; frequency ratios
// p/q with p != 1 still close (period 2*pi*q/|omega0|) and are reported as
// rational_closed, a case the 1/n taxonomy cannot express.
struct LoopClass {
  enum class Kind { degenerate, n_associated, rational_closed, non_closing };
  Kind kind = Kind::non_closing;
  int n = 0;            // n_associated: omega1 = omega0/n
  long long p = 0, q = 0;  // rational_closed: omega1/omega0 = p/q reduced, q > 0
};

// A coincidence of two curve passes. For self-intersections t1 < t2 on the
// same loop; for pair intersections t1 parameterizes loop A and t2 loop B.
struct IntersectionPoint {
  double t1 = 0.0, t2 = 0.0;
  Vec3 point;
  double gap = 0.0;  // |position(t1) - position(t2)| after refinement
};

struct SummaryVelocity {
  Vec3 v_plus;   // ring_velocity(t1, pa)
  Vec3 v_minus;  // ring_velocity(t2, pb)
  Vec3 v_star;   // v_plus + v_minus
};

struct LoopSamples {
  std::vector<double> params;  // curve parameter of each sample
  std::vector<Vec3> points;
  double span = 0.0;    // parameter span covered (period for closed loops)
  bool closed = false;  // false: open preview over one torus revolution
};

struct NonClosingLoopError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LoopsCoincideError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vec3 ring_position(double t, const RingParams& p);
Vec3 ring_velocity(double t, const RingParams& p);  // analytic derivative

// Smallest T > 0 with position(t+T) == position(t); nullopt when
// omega1/omega0 is irrational beyond the rational tolerance (1e-9,
// denominator cap 64).
std::optional<double> loop_period(const RingParams& p);

LoopClass classify_loop(const RingParams& p);

// All distinct-pass coincidence points over one period: dense scan of the
// (t1, t2) parameter torus (>= 4096 samples/period) followed by damped
// Gauss-Newton refinement to gap <= tol, deduplicated within 10*tol.
std::vector<IntersectionPoint> find_self_intersections(const RingParams& p, double tol);

// Coincidence points between two distinct closed loops; t1 on A, t2 on B.
std::vector<IntersectionPoint> find_pair_intersections(const RingParams& pa, const RingParams& pb,
                                                       double tol);

// v* = v(t1, pa) + v(t2, pb) at an intersection, with its two branches.
SummaryVelocity summary_velocity(const RingParams& pa, const RingParams& pb,
                                 const IntersectionPoint& ip);

// count >= 2 points at uniform parameter spacing over one period (closed) or
// over one torus revolution 2*pi/|omega1| (non-closing, flagged open).
LoopSamples sample_loop(const RingParams& p, int count);

}  // namespace vortexlab

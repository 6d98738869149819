#pragma once

#include <functional>
#include <span>
#include <vector>

// Small numerical toolkit shared by the physics modules and their
// verification suites: root bracketing, 1-D quadrature, unimodal
// maximization, Gauss-Legendre rules, Bessel J0 zeros and a cubic spline.

namespace vortexlab::num {

using Fn = std::function<double(double)>;

// Root of f on [lo, hi] (f(lo), f(hi) of opposite sign): bisection down to
// |hi-lo| <= tol, then a single Newton polish with derivative df.
double bisect_newton(const Fn& f, const Fn& df, double lo, double hi, double tol);

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const Fn& f, double a, double b, double tol);

// Argmax of a unimodal f on [a, b] by golden-section search; the interval is
// shrunk below tol and the midpoint returned.
double golden_section_max(const Fn& f, double a, double b, double tol);

// n-point Gauss-Legendre rule on [-1, 1]; nodes ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Composite Gauss-Legendre rule: [a, b] split into `panels` equal panels with
// an `order`-point rule on each.
QuadratureGrid composite_gauss_legendre(double a, double b, int panels, int order);

// Uniform trapezoid rule with n points (n >= 2) including both endpoints.
QuadratureGrid trapezoid_rule(double a, double b, int n);

// First `count` positive zeros of the Bessel function J0, via McMahon's
// asymptotic estimate refined by Newton iteration (J0' = -J1).
std::vector<double> bessel_j0_zeros(int count);

// Thomas algorithm for a tridiagonal system; diagonals (lower, main, upper)
// overwrite nothing, the solution is returned. main.size() == n,
// lower/upper.size() == n-1.
std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> main,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

// Not-a-knot cubic spline through (x, y); x strictly increasing, size >= 4.
// Evaluation outside [x.front(), x.back()] extrapolates the end cubics.
class CubicSpline {
 public:
  CubicSpline(std::span<const double> x, std::span<const double> y);
  double operator()(double xq) const;

 private:
  std::vector<double> x_, y_, b_, c_, d_;  // piecewise y + b*dx + c*dx^2 + d*dx^3
};

}  // namespace vortexlab::num

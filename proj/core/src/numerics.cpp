#include "vortexlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vortexlab::num {

double bisect_newton(const Fn& f, const Fn& df, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("bisect_newton: empty bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("bisect_newton: no sign change on bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval exhausted at this precision
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  const double d = df(x);
  if (d != 0.0) {
    const double polished = x - f(x) / d;
    if (polished >= lo && polished <= hi) x = polished;
  }
  return x;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const Fn& f, double a, double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const Fn& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double golden_section_max(const Fn& f, double a, double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("golden_section_max: empty interval");
  constexpr double invphi = 0.6180339887498948482;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev estimate of the i-th root of P_n, then Newton.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

QuadratureGrid composite_gauss_legendre(double a, double b, int panels, int order) {
  if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: panels must be positive");
  std::vector<double> xs, ws;
  gauss_legendre(order, xs, ws);
  QuadratureGrid g;
  g.nodes.reserve(static_cast<size_t>(panels) * order);
  g.weights.reserve(static_cast<size_t>(panels) * order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * h;
    const double mid = left + 0.5 * h;
    for (int k = 0; k < order; ++k) {
      g.nodes.push_back(mid + 0.5 * h * xs[k]);
      g.weights.push_back(0.5 * h * ws[k]);
    }
  }
  return g;
}

QuadratureGrid trapezoid_rule(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("trapezoid_rule: need at least two points");
  QuadratureGrid g;
  const double h = (b - a) / (n - 1);
  g.nodes.resize(n);
  g.weights.assign(n, h);
  for (int i = 0; i < n; ++i) g.nodes[i] = a + i * h;
  g.weights.front() = 0.5 * h;
  g.weights.back() = 0.5 * h;
  return g;
}

std::vector<double> bessel_j0_zeros(int count) {
  if (count < 1) throw std::invalid_argument("bessel_j0_zeros: count must be positive");
  std::vector<double> zeros(count);
  for (int k = 1; k <= count; ++k) {
    // McMahon expansion about beta = (k - 1/4)*pi.
    const double beta = (k - 0.25) * M_PI;
    const double b2 = beta * beta;
    double x = beta + 1.0 / (8.0 * beta) * (1.0 - 124.0 / (3.0 * 8.0 * 8.0 * b2));
    for (int iter = 0; iter < 50; ++iter) {
      const double j0 = std::cyl_bessel_j(0, x);
      const double j1 = std::cyl_bessel_j(1, x);
      const double dx = j0 / j1;  // J0' = -J1
      x += dx;
      if (std::abs(dx) < 1e-15 * x) break;
    }
    zeros[k - 1] = x;
  }
  return zeros;
}

std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> main,
                                      std::span<const double> upper,
                                      std::span<const double> rhs) {
  const size_t n = main.size();
  if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n)
    throw std::invalid_argument("solve_tridiagonal: inconsistent band sizes");
  std::vector<double> c(n - 1), x(n);
  double beta = main[0];
  if (beta == 0.0) throw std::runtime_error("solve_tridiagonal: singular pivot");
  x[0] = rhs[0] / beta;
  for (size_t i = 1; i < n; ++i) {
    c[i - 1] = upper[i - 1] / beta;
    beta = main[i] - lower[i - 1] * c[i - 1];
    if (beta == 0.0) throw std::runtime_error("solve_tridiagonal: singular pivot");
    x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / beta;
  }
  for (size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

CubicSpline::CubicSpline(std::span<const double> x, std::span<const double> y) {
  const size_t n = x.size();
  if (n < 4 || y.size() != n)
    throw std::invalid_argument("CubicSpline: need >= 4 matched points");
  for (size_t i = 1; i < n; ++i)
    if (!(x[i] > x[i - 1])) throw std::invalid_argument("CubicSpline: abscissae not increasing");
  x_.assign(x.begin(), x.end());
  y_.assign(y.begin(), y.end());

  // Solve for second derivatives m_i with not-a-knot end conditions
  // (third derivative continuous across the first and last interior knots).
  std::vector<double> h(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

  // Unknowns: the interior second derivatives m_1..m_{n-2}. The end values
  // follow from the not-a-knot conditions (m linear across the first and
  // last pair of intervals):
  //   m0      = ((h0+h1) m1 - h0 m2) / h1
  //   m_{n-1} = ((h_{n-3}+h_{n-2}) m_{n-2} - h_{n-2} m_{n-3}) / h_{n-3}
  // substituted into the first and last interior continuity rows.
  const size_t k = n - 2;
  std::vector<double> lower(k - 1, 0.0), diag(k, 0.0), upper(k - 1, 0.0), rhs(k, 0.0);
  for (size_t i = 1; i + 1 < n; ++i) {
    const size_t j = i - 1;
    if (j > 0) lower[j - 1] = h[i - 1];
    diag[j] = 2.0 * (h[i - 1] + h[i]);
    if (j + 1 < k) upper[j] = h[i];
    rhs[j] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
  }
  diag[0] += h[0] * (h[0] + h[1]) / h[1];
  upper[0] -= h[0] * h[0] / h[1];
  diag[k - 1] += h[n - 2] * (h[n - 3] + h[n - 2]) / h[n - 3];
  lower[k - 2] -= h[n - 2] * h[n - 2] / h[n - 3];

  const std::vector<double> mi = solve_tridiagonal(lower, diag, upper, rhs);
  std::vector<double> m(n);
  for (size_t j = 0; j < k; ++j) m[j + 1] = mi[j];
  m[0] = ((h[0] + h[1]) * m[1] - h[0] * m[2]) / h[1];
  m[n - 1] = ((h[n - 3] + h[n - 2]) * m[n - 2] - h[n - 2] * m[n - 3]) / h[n - 3];

  b_.resize(n - 1);
  c_.resize(n - 1);
  d_.resize(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    b_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
    c_[i] = 0.5 * m[i];
    d_[i] = (m[i + 1] - m[i]) / (6.0 * h[i]);
  }
}

double CubicSpline::operator()(double xq) const {
  size_t i;
  if (xq <= x_.front()) {
    i = 0;
  } else if (xq >= x_.back()) {
    i = x_.size() - 2;
  } else {
    i = static_cast<size_t>(std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin()) - 1;
  }
  const double dx = xq - x_[i];
  return y_[i] + dx * (b_[i] + dx * (c_[i] + dx * d_[i]));
}

}  // namespace vortexlab::num

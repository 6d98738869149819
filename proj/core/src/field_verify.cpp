#include "vortexlab/field_verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "vortexlab/numerics.hpp"

namespace vortexlab {

RadialDiffusionModel oscillating_vortex_model(const VortexParams& p) {
  p.validate();
  RadialDiffusionModel m;
  m.gamma = p.gamma;
  m.sigma = [p](double t) { return sigma_at(t, p); };
  m.nu = [p](double t) { return viscosity_at(t, p); };
  return m;
}

RadialDiffusionModel lamb_oseen_model(double nu, double sigma0, double gamma) {
  if (!(nu >= 0.0) || !(sigma0 >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("lamb_oseen_model: need nu >= 0, sigma0 >= 0, finite gamma");
  RadialDiffusionModel m;
  m.gamma = gamma;
  m.sigma = [nu, sigma0](double t) { return lamb_oseen_spread(t, nu, sigma0); };
  m.nu = [nu](double) { return nu; };
  return m;
}

void TransformEvolverSpec::validate() const {
  if (modes < 16) throw std::invalid_argument("TransformEvolverSpec: modes must be >= 16");
  if (!(r_max > 0.0)) throw std::invalid_argument("TransformEvolverSpec: r_max must be positive");
}

ResidualReport pde_residual(const RadialDiffusionModel& m, const std::vector<double>& grid,
                            double t, double h_r, double h_t) {
  if (!(h_r > 0.0) || !(h_t > 0.0))
    throw std::invalid_argument("pde_residual: steps must be positive");
  if (grid.empty()) throw std::invalid_argument("pde_residual: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] - h_r <= 0.0)
      throw std::invalid_argument("pde_residual: grid touches r = 0 (need r - h_r > 0)");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("pde_residual: grid must be strictly increasing");
  }
  if (grid.size() >= 2 && h_r > grid.back() - grid.front())
    throw std::invalid_argument("pde_residual: h_r exceeds the grid span");

  ResidualReport rep;
  rep.grid = grid;
  rep.residuals.resize(grid.size());
  const double nu_t = m.nu(t);
  const double s0 = m.sigma(t);
  const double sp = m.sigma(t + h_t);
  const double sm = m.sigma(t - h_t);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double w0 = vorticity_profile(r, s0, m.gamma);
    const double d_t =
        (vorticity_profile(r, sp, m.gamma) - vorticity_profile(r, sm, m.gamma)) / (2.0 * h_t);
    const double wp = vorticity_profile(r + h_r, s0, m.gamma);
    const double wm = vorticity_profile(r - h_r, s0, m.gamma);
    const double d_rr = (wp - 2.0 * w0 + wm) / (h_r * h_r);
    const double d_r = (wp - wm) / (2.0 * h_r);
    rep.residuals[i] = d_t - nu_t * (d_rr + d_r / r);
    rep.norm_inf = std::max(rep.norm_inf, std::abs(rep.residuals[i]));
    rep.scale = std::max(rep.scale, std::abs(d_t));
  }
  return rep;
}

ResidualReport pde_residual(const VortexParams& p, const std::vector<double>& grid, double t,
                            double h_r, double h_t) {
  return pde_residual(oscillating_vortex_model(p), grid, t, h_r, h_t);
}

PlanarField make_planar_vortex_field(const VortexParams& p, double t, double x_min,
                                     double x_max, int nx, double y_min, double y_max,
                                     int ny) {
  p.validate();
  if (nx < 3 || ny < 3)
    throw std::invalid_argument("make_planar_vortex_field: need at least a 3x3 grid");
  if (!(x_max > x_min) || !(y_max > y_min))
    throw std::invalid_argument("make_planar_vortex_field: empty extent");
  PlanarField f;
  f.x.resize(nx);
  f.y.resize(ny);
  for (int i = 0; i < nx; ++i) f.x[i] = x_min + (x_max - x_min) * i / (nx - 1);
  for (int j = 0; j < ny; ++j) f.y[j] = y_min + (y_max - y_min) * j / (ny - 1);
  const double spread = sigma_at(t, p);
  f.vx.resize(static_cast<std::size_t>(nx) * ny);
  f.vy.resize(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double r = std::hypot(f.x[i], f.y[j]);
      const double g = velocity_over_r_profile(r, spread, p.gamma);
      f.vx[static_cast<std::size_t>(j) * nx + i] = -g * f.y[j];
      f.vy[static_cast<std::size_t>(j) * nx + i] = g * f.x[i];
    }
  }
  return f;
}

namespace {

void check_uniform(const std::vector<double>& g, const char* axis) {
  if (g.size() < 3)
    throw std::invalid_argument(std::string("planar_divergence_curl: ") + axis +
                                " grid needs at least 3 points");
  const double h = g[1] - g[0];
  if (!(h > 0.0))
    throw std::invalid_argument(std::string("planar_divergence_curl: ") + axis +
                                " grid must increase");
  for (std::size_t i = 2; i < g.size(); ++i)
    if (std::abs((g[i] - g[i - 1]) - h) > 1e-9 * std::abs(h))
      throw std::invalid_argument(std::string("planar_divergence_curl: ") + axis +
                                  " grid not uniform");
}

// d/du along one index of a row-major array; central inside, three-point
// one-sided at the ends.
double stencil(const std::vector<double>& a, std::size_t idx, std::ptrdiff_t stride, int pos,
               int last, double h) {
  if (pos == 0) return (-3.0 * a[idx] + 4.0 * a[idx + stride] - a[idx + 2 * stride]) / (2.0 * h);
  if (pos == last)
    return (3.0 * a[idx] - 4.0 * a[idx - stride] + a[idx - 2 * stride]) / (2.0 * h);
  return (a[idx + stride] - a[idx - stride]) / (2.0 * h);
}

}  // namespace

PlanarDerivatives planar_divergence_curl(const PlanarField& f) {
  check_uniform(f.x, "x");
  check_uniform(f.y, "y");
  const int nx = static_cast<int>(f.x.size());
  const int ny = static_cast<int>(f.y.size());
  if (f.vx.size() != static_cast<std::size_t>(nx) * ny || f.vx.size() != f.vy.size())
    throw std::invalid_argument("planar_divergence_curl: component shape mismatch");
  const double hx = f.x[1] - f.x[0];
  const double hy = f.y[1] - f.y[0];
  PlanarDerivatives out;
  out.divergence.resize(f.vx.size());
  out.curl_z.resize(f.vx.size());
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * nx + i;
      const double dvx_dx = stencil(f.vx, idx, 1, i, nx - 1, hx);
      const double dvy_dy = stencil(f.vy, idx, nx, j, ny - 1, hy);
      const double dvy_dx = stencil(f.vy, idx, 1, i, nx - 1, hx);
      const double dvx_dy = stencil(f.vx, idx, nx, j, ny - 1, hy);
      out.divergence[idx] = dvx_dx + dvy_dy;
      out.curl_z[idx] = dvy_dx - dvx_dy;
    }
  }
  return out;
}

namespace {

struct ForwardTables {
  num::QuadratureGrid quad;       // nodes and r-weighted weights on [0, r_max]
  std::vector<double> zeros;      // j_k, k = 1..modes
  std::vector<double> basis;      // modes x nodes: J0(j_k q / r_max)
  std::vector<double> inv_norms;  // 1 / ((r_max^2 / 2) J1(j_k)^2)
};

std::mutex g_cache_mutex;
std::map<std::tuple<double, int>, std::shared_ptr<const ForwardTables>> g_forward_cache;
std::map<std::tuple<double, int, std::vector<double>>, std::shared_ptr<const std::vector<double>>>
    g_recon_cache;

std::shared_ptr<const ForwardTables> forward_tables(double r_max, int modes) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  const auto key = std::make_tuple(r_max, modes);
  if (auto it = g_forward_cache.find(key); it != g_forward_cache.end()) return it->second;

  auto tab = std::make_shared<ForwardTables>();
  const int panels = static_cast<int>(std::ceil(0.7 * modes)) + 8;
  tab->quad = num::composite_gauss_legendre(0.0, r_max, panels, 12);
  tab->zeros = num::bessel_j0_zeros(modes);
  const std::size_t q = tab->quad.nodes.size();
  tab->basis.resize(static_cast<std::size_t>(modes) * q);
  tab->inv_norms.resize(modes);
  for (int k = 0; k < modes; ++k) {
    const double jk = tab->zeros[k];
    for (std::size_t i = 0; i < q; ++i)
      tab->basis[static_cast<std::size_t>(k) * q + i] =
          std::cyl_bessel_j(0.0, jk * tab->quad.nodes[i] / r_max);
    const double j1 = std::cyl_bessel_j(1.0, jk);
    tab->inv_norms[k] = 2.0 / (r_max * r_max * j1 * j1);
  }
  if (g_forward_cache.size() > 8) g_forward_cache.clear();
  g_forward_cache.emplace(key, tab);
  return tab;
}

std::shared_ptr<const std::vector<double>> recon_matrix(double r_max,
                                                        const std::vector<double>& zeros,
                                                        const std::vector<double>& radii) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  const auto key = std::make_tuple(r_max, static_cast<int>(zeros.size()), radii);
  if (auto it = g_recon_cache.find(key); it != g_recon_cache.end()) return it->second;

  const std::size_t modes = zeros.size();
  const std::size_t n = radii.size();
  auto mat = std::make_shared<std::vector<double>>(modes * n);
  for (std::size_t k = 0; k < modes; ++k)
    for (std::size_t i = 0; i < n; ++i)
      (*mat)[k * n + i] = std::cyl_bessel_j(0.0, zeros[k] * radii[i] / r_max);
  if (g_recon_cache.size() > 8) g_recon_cache.clear();
  g_recon_cache.emplace(key, mat);
  return mat;
}

// Floor applied to mode coefficients before the exponential update.
// Shrinking spread amplifies mode k by exp(k^2 |dSigma|), up to ~1e28 at the
// basis edge; coefficients at measurement-noise level must be zeroed first or
// they dominate the reconstruction. kCoeffFloor is the hard floor relative to
// the spectrum peak; on top of it the floor is calibrated per call against
// the observed noise plateau (spline resampling error scales like h^4, so a
// 513-point profile measures coefficients only down to ~1e-9 of the peak).
constexpr double kCoeffFloor = 1e-13;
constexpr double kPlateauMargin = 8.0;

}  // namespace

RadialProfile spectral_evolve(const RadialProfile& initial, const RadialDiffusionModel& m,
                              double t1, const TransformEvolverSpec& spec) {
  spec.validate();
  if (initial.kind != ProfileKind::vorticity)
    throw std::invalid_argument("spectral_evolve: initial profile must be a vorticity profile");
  const std::size_t n = initial.radii.size();
  if (n < 8) throw std::invalid_argument("spectral_evolve: need at least 8 samples");
  if (initial.values.size() != n)
    throw std::invalid_argument("spectral_evolve: radii/values size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (initial.radii[i] < 0.0 || (i > 0 && initial.radii[i] <= initial.radii[i - 1]))
      throw std::invalid_argument("spectral_evolve: radii must be nonnegative and increasing");
  }
  const double t0 = initial.time;
  if (!(t1 >= t0)) throw std::invalid_argument("spectral_evolve: t1 must be >= profile time");

  double peak = 0.0;
  for (double v : initial.values) peak = std::max(peak, std::abs(v));
  const std::size_t tail = std::max<std::size_t>(3, n / 50);
  for (std::size_t i = n - tail; i < n; ++i) {
    if (std::abs(initial.values[i]) > 1e-6 * peak)
      throw NonDecayingProfileError(
          "spectral_evolve: profile has not decayed by its last samples");
  }

  // Width check over the whole leg: Sigma may peak between the endpoints.
  double sigma_max = 0.0;
  for (int s = 0; s <= 64; ++s) sigma_max = std::max(sigma_max, m.sigma(t0 + (t1 - t0) * s / 64));
  if (2.0 * std::sqrt(sigma_max) > spec.r_max / 5.0)
    throw SpreadExceedsDomainError("spectral_evolve: Gaussian width exceeds r_max/5");

  const auto tab = forward_tables(spec.r_max, spec.modes);
  const std::size_t q = tab->quad.nodes.size();

  // Resample the profile onto the quadrature nodes: spline inside the data,
  // constant below the first sample, zero beyond the last.
  const num::CubicSpline spline(initial.radii, initial.values);
  std::vector<double> fq(q);
  for (std::size_t i = 0; i < q; ++i) {
    const double r = tab->quad.nodes[i];
    if (r <= initial.radii.front())
      fq[i] = initial.values.front();
    else if (r >= initial.radii.back())
      fq[i] = 0.0;
    else
      fq[i] = spline(r);
  }

  std::vector<double> coeff(spec.modes);
  double cmax = 0.0;
  for (int k = 0; k < spec.modes; ++k) {
    double acc = 0.0;
    const double* row = tab->basis.data() + static_cast<std::size_t>(k) * q;
    for (std::size_t i = 0; i < q; ++i)
      acc += tab->quad.weights[i] * tab->quad.nodes[i] * fq[i] * row[i];
    coeff[k] = acc * tab->inv_norms[k];
    cmax = std::max(cmax, std::abs(coeff[k]));
  }

  // Admissible spectra decay to measurement noise well inside the band, so
  // the top quarter of the band estimates the noise plateau. Anything within
  // a small margin of it is indistinguishable from zero and is dropped:
  // contracting legs (d_sigma < 0) amplify exactly those modes the hardest.
  std::vector<double> tail_mag;
  for (int k = 3 * spec.modes / 4; k < spec.modes; ++k) tail_mag.push_back(std::abs(coeff[k]));
  std::nth_element(tail_mag.begin(), tail_mag.begin() + tail_mag.size() / 2, tail_mag.end());
  const double plateau = tail_mag[tail_mag.size() / 2];
  const double floor = std::max(kCoeffFloor * cmax, kPlateauMargin * plateau);

  const double d_sigma = m.sigma(t1) - m.sigma(t0);
  const double gain_cap = cmax > 0.0 ? std::log(4.0 * cmax / floor) : 0.0;
  for (int k = 0; k < spec.modes; ++k) {
    if (std::abs(coeff[k]) < floor || cmax == 0.0) {
      coeff[k] = 0.0;
      continue;
    }
    const double wave = tab->zeros[k] / spec.r_max;
    const double log_gain = -wave * wave * d_sigma;
    // A gain beyond the measurable dynamic range would lift this mode's own
    // noise past the spectrum peak; no trustworthy signal survives that.
    if (log_gain > gain_cap) {
      coeff[k] = 0.0;
      continue;
    }
    coeff[k] *= std::exp(log_gain);
  }

  const auto recon = recon_matrix(spec.r_max, tab->zeros, initial.radii);
  RadialProfile out;
  out.radii = initial.radii;
  out.values.assign(n, 0.0);
  out.time = t1;
  out.kind = ProfileKind::vorticity;
  for (int k = 0; k < spec.modes; ++k) {
    if (coeff[k] == 0.0) continue;
    const double* row = recon->data() + static_cast<std::size_t>(k) * n;
    for (std::size_t i = 0; i < n; ++i) out.values[i] += coeff[k] * row[i];
  }
  return out;
}

RadialProfile spectral_evolve(const RadialProfile& initial, const VortexParams& p, double t1,
                              const TransformEvolverSpec& spec) {
  return spectral_evolve(initial, oscillating_vortex_model(p), t1, spec);
}

ProfileDistance compare_profiles(const RadialProfile& a, const RadialProfile& b) {
  if (a.kind != b.kind) throw std::invalid_argument("compare_profiles: kind mismatch");
  if (a.radii != b.radii) throw std::invalid_argument("compare_profiles: grid mismatch");
  if (a.values.size() != a.radii.size() || b.values.size() != b.radii.size())
    throw std::invalid_argument("compare_profiles: ragged profile");
  ProfileDistance d;
  double sum_sq = 0.0;
  double peak = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double e = std::abs(a.values[i] - b.values[i]);
    d.sup = std::max(d.sup, e);
    sum_sq += e * e;
    peak = std::max({peak, std::abs(a.values[i]), std::abs(b.values[i])});
  }
  const std::size_t n = a.values.size();
  const double mean_spacing = n >= 2 ? (a.radii.back() - a.radii.front()) / (n - 1) : 1.0;
  d.l2 = std::sqrt(mean_spacing * sum_sq);
  d.rel_to_peak = peak > 0.0 ? d.sup / peak : 0.0;
  return d;
}

}  // namespace vortexlab

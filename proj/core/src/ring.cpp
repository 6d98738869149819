#include "vortexlab/ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace vortexlab {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

void RingParams::validate() const {
  if (!std::isfinite(a0) || !std::isfinite(b1) || !std::isfinite(omega0) ||
      !std::isfinite(omega1) || !std::isfinite(phi0) || !std::isfinite(phi1))
    throw std::invalid_argument("RingParams: non-finite field");
  if (a0 <= 0.0) throw std::invalid_argument("RingParams: a0 must be positive");
  if (b1 < 0.0) throw std::invalid_argument("RingParams: b1 must be nonnegative");
}

Vec3 ring_position(double t, const RingParams& p) {
  p.validate();
  const double th0 = p.omega0 * t + p.phi0;
  const double th1 = p.omega1 * t + p.phi1;
  const double rho = p.b1 + p.a0 * std::cos(th0);
  return {rho * std::cos(th1), rho * std::sin(th1), p.a0 * std::sin(th0)};
}

Vec3 ring_velocity(double t, const RingParams& p) {
  p.validate();
  const double th0 = p.omega0 * t + p.phi0;
  const double th1 = p.omega1 * t + p.phi1;
  const double s0 = std::sin(th0), c0 = std::cos(th0);
  const double s1 = std::sin(th1), c1 = std::cos(th1);
  const double rho = p.b1 + p.a0 * c0;
  return {-p.a0 * p.omega0 * s0 * c1 - rho * p.omega1 * s1,
          -p.a0 * p.omega0 * s0 * s1 + rho * p.omega1 * c1, p.a0 * p.omega0 * c0};
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kRationalTol = 1e-9;
constexpr long long kDenominatorCap = 64;

// Best rational p/q (q <= cap) with |x - p/q| <= tol*max(1,|x|), via
// continued-fraction convergents; nullopt when none qualifies.
std::optional<std::pair<long long, long long>> rational_approx(double x, double tol,
                                                               long long cap) {
  const double scale = std::max(1.0, std::abs(x));
  long long p_prev = 1, q_prev = 0;  // convergent k-1
  long long p = 0, q = 1;            // convergent k (seeded below)
  double xi = x;
  for (int level = 0; level < 64; ++level) {
    const double af = std::floor(xi);
    if (std::abs(af) > 1e15) break;  // coefficient overflow: treat as non-rational
    const long long a = static_cast<long long>(af);
    if (level == 0) {
      p = a;
      q = 1;
    } else {
      const long long pn = a * p + p_prev;
      const long long qn = a * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = pn;
      q = qn;
    }
    if (q > cap) return std::nullopt;
    if (std::abs(x - static_cast<double>(p) / static_cast<double>(q)) <= tol * scale)
      return std::make_pair(p, q);
    const double frac = xi - af;
    if (frac < 1e-15) break;
    xi = 1.0 / frac;
  }
  return std::nullopt;
}

// Distance of angle a to the nearest multiple of 2*pi.
double angle_to_turn(double a) {
  const double m = std::fmod(std::abs(a), kTwoPi);
  return std::min(m, kTwoPi - m);
}

// Distance of dt to the nearest multiple of T (parameter-circle metric).
double circle_dist(double dt, double T) {
  const double m = std::fmod(std::abs(dt), T);
  return std::min(m, T - m);
}

double wrap_to_span(double t, double T) {
  double m = std::fmod(t, T);
  if (m < 0.0) m += T;
  return m;
}

struct Candidate {
  double t1, t2, gap;
  Vec3 point;
};

// Damped Gauss-Newton on F(t1,t2) = posA(t1) - posB(t2); true when the
// residual reached target or could not be improved further.
bool refine_pair(const RingParams& pa, const RingParams& pb, double& t1, double& t2,
                 double target) {
  Vec3 F = ring_position(t1, pa) - ring_position(t2, pb);
  double f2 = dot(F, F);
  for (int iter = 0; iter < 80; ++iter) {
    if (std::sqrt(f2) <= target) return true;
    const Vec3 j1 = ring_velocity(t1, pa);
    const Vec3 j2 = -1.0 * ring_velocity(t2, pb);
    double a = dot(j1, j1), b = dot(j1, j2), c = dot(j2, j2);
    const double g1 = dot(j1, F), g2 = dot(j2, F);
    double det = a * c - b * b;
    if (det <= 1e-14 * (a * c + 1e-300)) {  // near-parallel tangents: regularize
      const double lam = 1e-8 * (a + c) + 1e-300;
      a += lam;
      c += lam;
      det = a * c - b * b;
      if (det == 0.0) return std::sqrt(f2) <= target;
    }
    const double d1 = -(c * g1 - b * g2) / det;
    const double d2 = -(-b * g1 + a * g2) / det;
    double step = 1.0;
    bool improved = false;
    for (int h = 0; h < 40; ++h) {
      const double n1 = t1 + step * d1;
      const double n2 = t2 + step * d2;
      const Vec3 Fn = ring_position(n1, pa) - ring_position(n2, pb);
      const double fn2 = dot(Fn, Fn);
      if (fn2 < f2) {
        t1 = n1;
        t2 = n2;
        F = Fn;
        f2 = fn2;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return std::sqrt(f2) <= target;
}

double speed_bound(const RingParams& p) {
  return p.a0 * std::abs(p.omega0) + (p.b1 + p.a0) * std::abs(p.omega1);
}

std::vector<IntersectionPoint> scan_intersections(const RingParams& pa, const RingParams& pb,
                                                  double Ta, double Tb, double tol, bool self) {
  const int M = 4096;
  const double da = Ta / M, db = Tb / M;

  std::vector<Vec3> A(M), B(M);
  for (int i = 0; i < M; ++i) A[i] = ring_position(i * da, pa);
  if (self) {
    B = A;
  } else {
    for (int j = 0; j < M; ++j) B[j] = ring_position(j * db, pb);
  }

  const double capture =
      std::max({3.0 * speed_bound(pa) * da, 3.0 * speed_bound(pb) * db, 10.0 * tol});
  const double cap2 = capture * capture;
  const double band = std::min(Ta, Tb) / 1000.0;

  // One seed per 1-D local minimum of the squared distance along each row.
  std::vector<Candidate> seeds;
  int touching_rows = 0;
  std::vector<double> row(M);
  for (int i = 0; i < M; ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < M; ++j) {
      const Vec3 d = A[i] - B[j];
      row[j] = dot(d, d);
      row_min = std::min(row_min, row[j]);
    }
    if (row_min < tol * tol) ++touching_rows;
    for (int j = 0; j < M; ++j) {
      if (row[j] > cap2) continue;
      const double left = row[(j + M - 1) % M];
      const double right = row[(j + 1) % M];
      if (row[j] > left || row[j] > right) continue;
      if (self && circle_dist(i * da - j * db, Ta) <= band) continue;
      seeds.push_back({i * da, j * db, std::sqrt(row[j]), {}});
    }
  }

  // A continuum of touching rows means the two parameter sets trace the same
  // point set; refinement would return an arbitrary subset of a continuum.
  if (!self && touching_rows > M / 4)
    throw LoopsCoincideError("find_pair_intersections: loops coincide");

  std::vector<IntersectionPoint> accepted;
  for (const Candidate& s : seeds) {
    double t1 = s.t1, t2 = s.t2;
    if (!refine_pair(pa, pb, t1, t2, 1e-3 * tol) &&
        norm(ring_position(t1, pa) - ring_position(t2, pb)) > tol)
      continue;
    t1 = wrap_to_span(t1, Ta);
    t2 = wrap_to_span(t2, Tb);
    if (self) {
      if (circle_dist(t1 - t2, Ta) <= band) continue;  // same pass, not a crossing
      // Passes at equal tube phase coincide only where the tube circle
      // collapses onto the rotation axis (radius b1 + a0*cos(theta0) = 0);
      // for every b1 > 0 those passes miss each other, so the coincidence is
      // a parametrization degeneracy rather than a genuine path crossing.
      // The margin must exceed the parameter slop of tangential refinement,
      // which is ~sqrt(tol/curvature), far below 1e-3 for any sane tol.
      if (angle_to_turn(pa.omega0 * (t1 - t2)) < 1e-3) continue;
      if (t1 > t2) std::swap(t1, t2);
    }
    const Vec3 x1 = ring_position(t1, pa);
    const Vec3 x2 = ring_position(t2, pb);
    const double gap = norm(x1 - x2);
    if (gap > tol) continue;
    const Vec3 point = 0.5 * (x1 + x2);
    // Tangential touches refine to a spread of parameter pairs around one
    // spatial point; the merge radius covers that spread (~sqrt(tol) in the
    // parameter, times the speed) as well as plain refinement jitter.
    const double merge = std::max(10.0 * tol, 5e-5 * std::max(pa.a0, pb.a0));
    bool duplicate = false;
    for (IntersectionPoint& q : accepted) {
      if (norm(q.point - point) < merge) {
        if (gap < q.gap) q = IntersectionPoint{t1, t2, point, gap};
        duplicate = true;
        break;
      }
    }
    if (!duplicate) accepted.push_back({t1, t2, point, gap});
  }

  std::sort(accepted.begin(), accepted.end(), [](const auto& a, const auto& b) {
    return a.t1 != b.t1 ? a.t1 < b.t1 : a.t2 < b.t2;
  });
  return accepted;
}

}  // namespace

std::optional<double> loop_period(const RingParams& p) {
  p.validate();
  if (p.omega0 == 0.0 && p.omega1 == 0.0)
    throw std::invalid_argument("loop_period: omega0 and omega1 both zero (stationary point)");
  if (p.omega0 == 0.0) return kTwoPi / std::abs(p.omega1);
  if (p.omega1 == 0.0) return kTwoPi / std::abs(p.omega0);
  const auto pq = rational_approx(p.omega1 / p.omega0, kRationalTol, kDenominatorCap);
  if (!pq) return std::nullopt;
  return kTwoPi * static_cast<double>(pq->second) / std::abs(p.omega0);
}

LoopClass classify_loop(const RingParams& p) {
  p.validate();
  LoopClass c;
  if (p.omega0 == 0.0) {
    c.kind = LoopClass::Kind::degenerate;
    return c;
  }
  if (p.omega1 == 0.0) {
    c.kind = LoopClass::Kind::rational_closed;
    c.p = 0;
    c.q = 1;
    return c;
  }
  const auto pq = rational_approx(p.omega1 / p.omega0, kRationalTol, kDenominatorCap);
  if (!pq) {
    c.kind = LoopClass::Kind::non_closing;
    return c;
  }
  if (pq->first == 1) {
    c.kind = LoopClass::Kind::n_associated;
    c.n = static_cast<int>(pq->second);
  } else {
    c.kind = LoopClass::Kind::rational_closed;
  }
  c.p = pq->first;
  c.q = pq->second;
  return c;
}

std::vector<IntersectionPoint> find_self_intersections(const RingParams& p, double tol) {
  p.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("find_self_intersections: tol must be positive");
  if (!(p.b1 < p.a0))
    throw std::invalid_argument("find_self_intersections: requires b1 < a0 (penetration regime)");
  const auto T = loop_period(p);
  if (!T) throw NonClosingLoopError("find_self_intersections: loop does not close");
  return scan_intersections(p, p, *T, *T, tol, true);
}

std::vector<IntersectionPoint> find_pair_intersections(const RingParams& pa, const RingParams& pb,
                                                       double tol) {
  pa.validate();
  pb.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("find_pair_intersections: tol must be positive");
  const auto Ta = loop_period(pa);
  const auto Tb = loop_period(pb);
  if (!Ta || !Tb) throw NonClosingLoopError("find_pair_intersections: loop does not close");
  const bool same_params = pa.a0 == pb.a0 && pa.b1 == pb.b1 && pa.omega0 == pb.omega0 &&
                           pa.omega1 == pb.omega1 &&
                           angle_to_turn(pa.phi0 - pb.phi0) < 1e-12 &&
                           angle_to_turn(pa.phi1 - pb.phi1) < 1e-12;
  if (same_params) throw LoopsCoincideError("find_pair_intersections: loops coincide");
  return scan_intersections(pa, pb, *Ta, *Tb, tol, false);
}

SummaryVelocity summary_velocity(const RingParams& pa, const RingParams& pb,
                                 const IntersectionPoint& ip) {
  SummaryVelocity sv;
  sv.v_plus = ring_velocity(ip.t1, pa);
  sv.v_minus = ring_velocity(ip.t2, pb);
  sv.v_star = sv.v_plus + sv.v_minus;
  return sv;
}

LoopSamples sample_loop(const RingParams& p, int count) {
  p.validate();
  if (count < 2) throw std::invalid_argument("sample_loop: count must be at least 2");
  LoopSamples out;
  const auto T = loop_period(p);
  if (T) {
    out.span = *T;
    out.closed = true;
  } else {
    out.span = kTwoPi / std::abs(p.omega1);  // one torus revolution as an open preview
    out.closed = false;
  }
  out.params.resize(count);
  out.points.resize(count);
  for (int i = 0; i < count; ++i) {
    out.params[i] = out.span * i / count;
    out.points[i] = ring_position(out.params[i], p);
  }
  return out;
}

}  // namespace vortexlab

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "run_config.hpp"
#include "vortexlab/field_verify.hpp"
#include "vortexlab/moment.hpp"
#include "vortexlab/ring.hpp"
#include "vortexlab/spin.hpp"
#include "vortexlab/table.hpp"
#include "vortexlab/verify.hpp"
#include "vortexlab/vortex.hpp"

#ifndef VORTEXLAB_VERSION
#define VORTEXLAB_VERSION "0.0.0"
#endif

namespace vortexlab::cli {

namespace {

constexpr double kPi = 3.141592653589793238462643;
using nlohmann::json;

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw std::runtime_error("grid: point count must be at least 1");
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = a;
    return g;
  }
  for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1);
  return g;
}

json table_json(const Table& t) {
  json cols = json::array();
  for (const auto& c : t.columns) cols.push_back(c.name);
  json rows = json::array();
  const std::size_t n = t.rows();
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (t.columns[c].type == Table::ColumnType::integer)
        row.push_back(static_cast<long long>(t.at(r, c)));
      else
        row.push_back(t.at(r, c));
    }
    rows.push_back(std::move(row));
  }
  return json{{"columns", std::move(cols)}, {"rows", std::move(rows)}};
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

json make_meta(const std::string& subcommand, json parameters) {
  return json{{"tool", "vortexlab"},
              {"version", VORTEXLAB_VERSION},
              {"subcommand", subcommand},
              {"parameters", std::move(parameters)}};
}

// Single-table emission honoring --format/--out; CSV runs with --out gain a
// sidecar <out>.meta.json so parameters survive next to the data.
void emit_table(const Table& t, const CommonOptions& common, const json& meta) {
  if (common.format == "json") {
    const json doc{{"meta", meta}, {"data", table_json(t)}};
    const std::string text = doc.dump(2) + "\n";
    if (common.out_path.empty())
      std::cout << text;
    else
      write_text_file(common.out_path, text);
    return;
  }
  const std::string csv = to_csv(t);
  if (common.out_path.empty()) {
    std::cout << csv;
    return;
  }
  write_text_file(common.out_path, csv);
  write_text_file(common.out_path + ".meta.json", json{{"meta", meta}}.dump(2) + "\n");
}

// ---------------------------------------------------------------- field

struct FieldOpts {
  CommonOptions common;
  double gamma = 1.0, nu = 1.0, omega_cap = 2.0 * kPi, n_offset = 16.0;
  double r_min = 0.0, r_max = 8.0, t_min = 0.0, t_max = 3.0;
  int r_count = 161, t_count = 61;
  std::string kind = "both";
};

Table field_table(const FieldOpts& o, const VortexParams& p, ProfileKind kind,
                  const std::vector<double>& grid, const std::vector<double>& times) {
  Table t;
  t.columns = {{"r", Table::ColumnType::real},
               {"t", Table::ColumnType::real},
               {"value", Table::ColumnType::real}};
  for (double time : times) {
    const RadialProfile prof = sample_radial_field(kind, grid, time, p);
    for (std::size_t i = 0; i < grid.size(); ++i) t.append_row({grid[i], time, prof.values[i]});
  }
  (void)o;
  return t;
}

int run_field(const CLI::App& sub, FieldOpts& o) {
  ConfigMerge cm(o.common.config_path);
  cm.apply(sub, "gamma", o.gamma);
  cm.apply(sub, "nu", o.nu);
  cm.apply(sub, "omega_cap", o.omega_cap);
  cm.apply(sub, "n_offset", o.n_offset);
  cm.apply(sub, "r_min", o.r_min);
  cm.apply(sub, "r_max", o.r_max);
  cm.apply(sub, "t_min", o.t_min);
  cm.apply(sub, "t_max", o.t_max);
  cm.apply(sub, "r_count", o.r_count);
  cm.apply(sub, "t_count", o.t_count);
  cm.apply(sub, "kind", o.kind);
  cm.apply(sub, "out", o.common.out_path);
  cm.apply(sub, "format", o.common.format);
  cm.apply(sub, "seed", o.common.seed);
  cm.finish();

  if (o.kind != "vorticity" && o.kind != "speed" && o.kind != "both")
    throw std::runtime_error("field: kind must be vorticity, speed, or both");

  VortexParams p;
  p.gamma = o.gamma;
  p.nu = o.nu;
  p.omega_cap = o.omega_cap;
  p.n_offset = o.n_offset;
  p.validate();

  const std::vector<double> grid = linspace(o.r_min, o.r_max, o.r_count);
  const std::vector<double> times = linspace(o.t_min, o.t_max, o.t_count);

  const json meta = make_meta(
      "field", json{{"gamma", o.gamma},
                    {"nu", o.nu},
                    {"omega_cap", o.omega_cap},
                    {"n_offset", o.n_offset},
                    {"r_min", o.r_min},
                    {"r_max", o.r_max},
                    {"r_count", o.r_count},
                    {"t_min", o.t_min},
                    {"t_max", o.t_max},
                    {"t_count", o.t_count},
                    {"kind", o.kind}});

  if (o.kind != "both") {
    const ProfileKind k = o.kind == "speed" ? ProfileKind::speed : ProfileKind::vorticity;
    emit_table(field_table(o, p, k, grid, times), o.common, meta);
    return 0;
  }

  const Table tv = field_table(o, p, ProfileKind::vorticity, grid, times);
  const Table ts = field_table(o, p, ProfileKind::speed, grid, times);
  if (o.common.format == "json") {
    const json doc{{"meta", meta},
                   {"data", json{{"vorticity", table_json(tv)}, {"speed", table_json(ts)}}}};
    const std::string text = doc.dump(2) + "\n";
    if (o.common.out_path.empty())
      std::cout << text;
    else
      write_text_file(o.common.out_path, text);
    return 0;
  }
  if (o.common.out_path.empty())
    throw std::runtime_error("field: kind=both with CSV needs --out (two tables)");
  write_text_file(o.common.out_path + ".vorticity.csv", to_csv(tv));
  write_text_file(o.common.out_path + ".speed.csv", to_csv(ts));
  write_text_file(o.common.out_path + ".meta.json", json{{"meta", meta}}.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- evolve

struct EvolveOpts {
  CommonOptions common;
  double gamma = 1.0, nu = 1.0, omega_cap = 2.0 * kPi, n_offset = 16.0;
  double t0 = 0.0, t1 = 0.37, r_max = 40.0;
  int modes = 256, r_count = 1025;
};

int run_evolve(const CLI::App& sub, EvolveOpts& o) {
  ConfigMerge cm(o.common.config_path);
  cm.apply(sub, "gamma", o.gamma);
  cm.apply(sub, "nu", o.nu);
  cm.apply(sub, "omega_cap", o.omega_cap);
  cm.apply(sub, "n_offset", o.n_offset);
  cm.apply(sub, "t0", o.t0);
  cm.apply(sub, "t1", o.t1);
  cm.apply(sub, "r_max", o.r_max);
  cm.apply(sub, "modes", o.modes);
  cm.apply(sub, "r_count", o.r_count);
  cm.apply(sub, "out", o.common.out_path);
  cm.apply(sub, "format", o.common.format);
  cm.apply(sub, "seed", o.common.seed);
  cm.finish();

  VortexParams p;
  p.gamma = o.gamma;
  p.nu = o.nu;
  p.omega_cap = o.omega_cap;
  p.n_offset = o.n_offset;
  p.validate();

  TransformEvolverSpec spec;
  spec.r_max = o.r_max;
  spec.modes = o.modes;

  const std::vector<double> grid = linspace(0.0, o.r_max, o.r_count);
  const RadialProfile initial = sample_radial_field(ProfileKind::vorticity, grid, o.t0, p);
  const RadialProfile evolved = spectral_evolve(initial, p, o.t1, spec);
  const RadialProfile exact = sample_radial_field(ProfileKind::vorticity, grid, o.t1, p);
  const ProfileDistance dist = compare_profiles(evolved, exact);

  Table t;
  t.columns = {{"r", Table::ColumnType::real},
               {"initial", Table::ColumnType::real},
               {"evolved", Table::ColumnType::real},
               {"closed_form", Table::ColumnType::real}};
  for (std::size_t i = 0; i < grid.size(); ++i)
    t.append_row({grid[i], initial.values[i], evolved.values[i], exact.values[i]});

  json meta = make_meta("evolve", json{{"gamma", o.gamma},
                                       {"nu", o.nu},
                                       {"omega_cap", o.omega_cap},
                                       {"n_offset", o.n_offset},
                                       {"t0", o.t0},
                                       {"t1", o.t1},
                                       {"r_max", o.r_max},
                                       {"modes", o.modes},
                                       {"r_count", o.r_count}});
  meta["closed_form_distance"] =
      json{{"sup", dist.sup}, {"l2", dist.l2}, {"rel_to_peak", dist.rel_to_peak}};
  emit_table(t, o.common, meta);
  return 0;
}

// ---------------------------------------------------------------- ring

const char* loop_kind_name(LoopClass::Kind k) {
  switch (k) {
    case LoopClass::Kind::degenerate: return "degenerate";
    case LoopClass::Kind::n_associated: return "n_associated";
    case LoopClass::Kind::rational_closed: return "rational_closed";
    case LoopClass::Kind::non_closing: return "non_closing";
  }
  return "unknown";
}

struct RingOpts {
  CommonOptions common;
  double a0 = 2.0, b1 = 3.0, omega0 = 12.0, omega1 = 1.0, phi0 = 0.0, phi1 = 0.0;
  int count = 512;
};

int run_ring(const CLI::App& sub, RingOpts& o) {
  ConfigMerge cm(o.common.config_path);
  cm.apply(sub, "a0", o.a0);
  cm.apply(sub, "b1", o.b1);
  cm.apply(sub, "omega0", o.omega0);
  cm.apply(sub, "omega1", o.omega1);
  cm.apply(sub, "phi0", o.phi0);
  cm.apply(sub, "phi1", o.phi1);
  cm.apply(sub, "count", o.count);
  cm.apply(sub, "out", o.common.out_path);
  cm.apply(sub, "format", o.common.format);
  cm.apply(sub, "seed", o.common.seed);
  cm.finish();

  RingParams p;
  p.a0 = o.a0;
  p.b1 = o.b1;
  p.omega0 = o.omega0;
  p.omega1 = o.omega1;
  p.phi0 = o.phi0;
  p.phi1 = o.phi1;

  const LoopSamples samples = sample_loop(p, o.count);
  const LoopClass cls = classify_loop(p);

  Table t;
  t.columns = {{"t", Table::ColumnType::real},
               {"x", Table::ColumnType::real},
               {"y", Table::ColumnType::real},
               {"z", Table::ColumnType::real}};
  for (std::size_t i = 0; i < samples.points.size(); ++i)
    t.append_row({samples.params[i], samples.points[i].x, samples.points[i].y,
                  samples.points[i].z});

  json meta = make_meta("ring", json{{"a0", o.a0},
                                     {"b1", o.b1},
                                     {"omega0", o.omega0},
                                     {"omega1", o.omega1},
                                     {"phi0", o.phi0},
                                     {"phi1", o.phi1},
                                     {"count", o.count}});
  json cj{{"kind", loop_kind_name(cls.kind)}};
  if (cls.kind == LoopClass::Kind::n_associated) cj["n"] = cls.n;
  if (cls.kind == LoopClass::Kind::n_associated || cls.kind == LoopClass::Kind::rational_closed) {
    cj["p"] = cls.p;
    cj["q"] = cls.q;
  }
  meta["classification"] = std::move(cj);
  meta["span"] = samples.span;
  meta["closed"] = samples.closed;
  emit_table(t, o.common, meta);
  return 0;
}

// ---------------------------------------------------------------- intersections

struct IntersectOpts {
  CommonOptions common;
  std::string mode = "self";
  double a0 = 1.0, b1 = 0.0, omega0 = 1.0, omega1 = 1.0 / 3.0, phi0 = 0.0, phi1 = 0.0;
  double a0_b = NAN, b1_b = NAN, omega0_b = NAN, omega1_b = NAN, phi0_b = NAN, phi1_b = NAN;
  double tol = 1e-9;
};

int run_intersections(const CLI::App& sub, IntersectOpts& o) {
  ConfigMerge cm(o.common.config_path);
  cm.apply(sub, "mode", o.mode);
  cm.apply(sub, "a0", o.a0);
  cm.apply(sub, "b1", o.b1);
  cm.apply(sub, "omega0", o.omega0);
  cm.apply(sub, "omega1", o.omega1);
  cm.apply(sub, "phi0", o.phi0);
  cm.apply(sub, "phi1", o.phi1);
  cm.apply(sub, "a0_b", o.a0_b);
  cm.apply(sub, "b1_b", o.b1_b);
  cm.apply(sub, "omega0_b", o.omega0_b);
  cm.apply(sub, "omega1_b", o.omega1_b);
  cm.apply(sub, "phi0_b", o.phi0_b);
  cm.apply(sub, "phi1_b", o.phi1_b);
  cm.apply(sub, "tol", o.tol);
  cm.apply(sub, "out", o.common.out_path);
  cm.apply(sub, "format", o.common.format);
  cm.apply(sub, "seed", o.common.seed);
  cm.finish();

  if (o.mode != "self" && o.mode != "pair")
    throw std::runtime_error("intersections: mode must be self or pair");

  RingParams pa;
  pa.a0 = o.a0;
  pa.b1 = o.b1;
  pa.omega0 = o.omega0;
  pa.omega1 = o.omega1;
  pa.phi0 = o.phi0;
  pa.phi1 = o.phi1;

  json params{{"mode", o.mode}, {"a0", o.a0},     {"b1", o.b1},   {"omega0", o.omega0},
              {"omega1", o.omega1}, {"phi0", o.phi0}, {"phi1", o.phi1}, {"tol", o.tol}};

  Table t;
  t.columns = {{"t1", Table::ColumnType::real}, {"t2", Table::ColumnType::real},
               {"x", Table::ColumnType::real},  {"y", Table::ColumnType::real},
               {"z", Table::ColumnType::real},  {"gap", Table::ColumnType::real}};

  std::size_t count = 0;
  if (o.mode == "self") {
    const auto hits = find_self_intersections(pa, o.tol);
    count = hits.size();
    for (const auto& ip : hits)
      t.append_row({ip.t1, ip.t2, ip.point.x, ip.point.y, ip.point.z, ip.gap});
  } else {
    RingParams pb = pa;  // unset loop-B fields inherit loop A
    if (!std::isnan(o.a0_b)) pb.a0 = o.a0_b;
    if (!std::isnan(o.b1_b)) pb.b1 = o.b1_b;
    if (!std::isnan(o.omega0_b)) pb.omega0 = o.omega0_b;
    if (!std::isnan(o.omega1_b)) pb.omega1 = o.omega1_b;
    if (!std::isnan(o.phi0_b)) pb.phi0 = o.phi0_b;
    if (!std::isnan(o.phi1_b)) pb.phi1 = o.phi1_b;
    params["loop_b"] = json{{"a0", pb.a0},     {"b1", pb.b1},   {"omega0", pb.omega0},
                            {"omega1", pb.omega1}, {"phi0", pb.phi0}, {"phi1", pb.phi1}};
    t.columns.push_back({"vstar_x", Table::ColumnType::real});
    t.columns.push_back({"vstar_y", Table::ColumnType::real});
    t.columns.push_back({"vstar_z", Table::ColumnType::real});
    const auto hits = find_pair_intersections(pa, pb, o.tol);
    count = hits.size();
    for (const auto& ip : hits) {
      const SummaryVelocity sv = summary_velocity(pa, pb, ip);
      t.append_row({ip.t1, ip.t2, ip.point.x, ip.point.y, ip.point.z, ip.gap, sv.v_star.x,
                    sv.v_star.y, sv.v_star.z});
    }
  }

  json meta = make_meta("intersections", std::move(params));
  meta["count"] = count;
  emit_table(t, o.common, meta);
  return 0;
}

// ---------------------------------------------------------------- spin

struct SpinOpts {
  CommonOptions common;
  std::string drive = "closed_form";
  double omega = 1.0;
  double theta_x = 0.0, theta_y = 0.0, theta_z = 0.5;
  double hbar = 1.0, t0 = 0.0, t1 = 2.0 * kPi;
  int steps = 1000;
  double psi_up_re = 1.0, psi_up_im = 0.0, psi_down_re = 0.0, psi_down_im = 0.0;
};

int run_spin(const CLI::App& sub, SpinOpts& o) {
  ConfigMerge cm(o.common.config_path);
  cm.apply(sub, "drive", o.drive);
  cm.apply(sub, "omega", o.omega);
  cm.apply(sub, "theta_x", o.theta_x);
  cm.apply(sub, "theta_y", o.theta_y);
  cm.apply(sub, "theta_z", o.theta_z);
  cm.apply(sub, "hbar", o.hbar);
  cm.apply(sub, "t0", o.t0);
  cm.apply(sub, "t1", o.t1);
  cm.apply(sub, "steps", o.steps);
  cm.apply(sub, "psi_up_re", o.psi_up_re);
  cm.apply(sub, "psi_up_im", o.psi_up_im);
  cm.apply(sub, "psi_down_re", o.psi_down_re);
  cm.apply(sub, "psi_down_im", o.psi_down_im);
  cm.apply(sub, "out", o.common.out_path);
  cm.apply(sub, "format", o.common.format);
  cm.apply(sub, "seed", o.common.seed);
  cm.finish();

  if (o.drive != "closed_form" && o.drive != "constant")
    throw std::runtime_error("spin: drive must be closed_form or constant");

  const Spinor psi0{{o.psi_up_re, o.psi_up_im}, {o.psi_down_re, o.psi_down_im}};
  std::function<DriveField(double)> drive;
  if (o.drive == "constant") {
    const DriveField d{o.theta_x, o.theta_y, o.theta_z};
    drive = [d](double) { return d; };
  } else {
    const double w = o.omega;
    const double hbar = o.hbar;
    drive = [w, hbar](double t) { return drive_from_omega(omega_closed_form(t, w), hbar); };
  }

  const EvolutionTrace tr = evolve_spinor(psi0, drive, o.t0, o.t1, o.steps, o.hbar);

  Table t;
  t.columns = {{"t", Table::ColumnType::real},       {"up_re", Table::ColumnType::real},
               {"up_im", Table::ColumnType::real},   {"down_re", Table::ColumnType::real},
               {"down_im", Table::ColumnType::real}, {"norm", Table::ColumnType::real}};
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const Spinor& s = tr.spinors[i];
    t.append_row({tr.times[i], s.up.real(), s.up.imag(), s.down.real(), s.down.imag(),
                  tr.norms[i]});
  }

  json meta = make_meta("spin", json{{"drive", o.drive},
                                     {"omega", o.omega},
                                     {"theta_x", o.theta_x},
                                     {"theta_y", o.theta_y},
                                     {"theta_z", o.theta_z},
                                     {"hbar", o.hbar},
                                     {"t0", o.t0},
                                     {"t1", o.t1},
                                     {"steps", o.steps},
                                     {"psi_up_re", o.psi_up_re},
                                     {"psi_up_im", o.psi_up_im},
                                     {"psi_down_re", o.psi_down_re},
                                     {"psi_down_im", o.psi_down_im}});
  const Spinor& fin = tr.spinors.back();
  meta["final"] = json{{"up_re", fin.up.real()},
                       {"up_im", fin.up.imag()},
                       {"down_re", fin.down.real()},
                       {"down_im", fin.down.imag()},
                       {"norm", tr.norms.back()}};
  emit_table(t, o.common, meta);
  return 0;
}

// ---------------------------------------------------------------- moment

struct MomentOpts {
  CommonOptions common;
  std::string preset = "paper_quoted";
  int max_factorial_arg = 18;
  double mu_b = NAN, alpha = NAN;  // optional overrides of the preset
};

int run_moment(const CLI::App& sub, MomentOpts& o) {
  ConfigMerge cm(o.common.config_path);
  cm.apply(sub, "preset", o.preset);
  cm.apply(sub, "max_factorial_arg", o.max_factorial_arg);
  cm.apply(sub, "mu_b", o.mu_b);
  cm.apply(sub, "alpha", o.alpha);
  cm.apply(sub, "out", o.common.out_path);
  cm.apply(sub, "format", o.common.format);
  cm.apply(sub, "seed", o.common.seed);
  cm.finish();

  PhysConstants c;
  if (o.preset == "paper_quoted")
    c = PhysConstants::paper_quoted();
  else if (o.preset == "standard_tables")
    c = PhysConstants::standard_tables();
  else
    throw std::runtime_error("moment: preset must be paper_quoted or standard_tables");
  if (!std::isnan(o.mu_b)) c.mu_B = o.mu_b;
  if (!std::isnan(o.alpha)) c.alpha = o.alpha;

  FractionSpec spec;
  spec.max_factorial_arg = o.max_factorial_arg;
  const MomentResult res = continued_fraction_mu(spec, c);

  Table t;
  t.columns = {{"factorial_arg", Table::ColumnType::integer},
               {"sign", Table::ColumnType::integer},
               {"term", Table::ColumnType::real},
               {"partial_denominator", Table::ColumnType::real}};
  for (const FractionTerm& term : res.terms)
    t.append_row({static_cast<double>(term.factorial_arg), static_cast<double>(term.sign),
                  term.term, term.partial_denominator});

  json meta = make_meta("moment", json{{"preset", o.preset},
                                       {"max_factorial_arg", o.max_factorial_arg},
                                       {"mu_b", c.mu_B},
                                       {"alpha", c.alpha}});
  meta["results"] = json{{"continued_fraction", res.value},
                         {"schwinger", schwinger_mu(c)},
                         {"sommerfield", sommerfield_mu(c)},
                         {"alpha_over_2pi", c.alpha / (2.0 * kPi)},
                         {"limiting_index", limiting_index(c)}};
  emit_table(t, o.common, meta);
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  CommonOptions common;
  std::string inject_fault;
};

int run_verify(const CLI::App& sub, VerifyOpts& o) {
  ConfigMerge cm(o.common.config_path);
  cm.apply(sub, "inject_fault", o.inject_fault);
  cm.apply(sub, "out", o.common.out_path);
  cm.apply(sub, "format", o.common.format);
  cm.apply(sub, "seed", o.common.seed);
  cm.finish();

  const auto checks = run_verification({o.inject_fault});
  std::size_t failures = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failures;

  json meta = make_meta("verify", json{{"inject_fault", o.inject_fault}});
  meta["total"] = checks.size();
  meta["failures"] = failures;

  std::string text;
  if (o.common.format == "json") {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back(json{{"check", c.name},
                         {"status", c.pass ? "pass" : "fail"},
                         {"measured", c.measured},
                         {"bound", c.bound}});
    text = json{{"meta", meta}, {"data", json{{"checks", std::move(arr)}}}}.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "check,status,measured,bound\n";
    for (const auto& c : checks)
      os << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << format_double(c.measured)
         << ',' << format_double(c.bound) << '\n';
    text = os.str();
  }
  if (o.common.out_path.empty())
    std::cout << text;
  else
    write_text_file(o.common.out_path, text);

  for (const auto& c : checks)
    if (!c.pass) std::cerr << "verify: FAIL " << c.name << '\n';
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- wiring

template <class Opts, int (*Run)(const CLI::App&, Opts&)>
void attach(CLI::App* sub, std::shared_ptr<Opts> o, int& exit_code) {
  sub->callback([sub, o, &exit_code] { exit_code = Run(*sub, *o); });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Oscillating-viscosity vortex toolkit: field tables, loop geometry, spinor "
               "evolution, moment calculators, and a verification sweep"};
  app.set_version_flag("--version", std::string(VORTEXLAB_VERSION));
  app.require_subcommand(1);
  int exit_code = 0;

  {
    auto o = std::make_shared<FieldOpts>();
    CLI::App* sub = app.add_subcommand("field", "Radial vorticity/speed tables over (r, t)");
    add_common_flags(*sub, o->common);
    sub->add_option("--gamma", o->gamma, "Circulation scale");
    sub->add_option("--nu", o->nu, "Viscosity amplitude");
    sub->add_option("--omega_cap", o->omega_cap, "Viscosity oscillation frequency");
    sub->add_option("--n_offset", o->n_offset, "Spread offset (must exceed 1)");
    sub->add_option("--r_min", o->r_min, "Smallest radius");
    sub->add_option("--r_max", o->r_max, "Largest radius");
    sub->add_option("--r_count", o->r_count, "Number of radii");
    sub->add_option("--t_min", o->t_min, "First time");
    sub->add_option("--t_max", o->t_max, "Last time");
    sub->add_option("--t_count", o->t_count, "Number of times");
    sub->add_option("--kind", o->kind, "vorticity, speed, or both");
    attach<FieldOpts, run_field>(sub, o, exit_code);
  }
  {
    auto o = std::make_shared<EvolveOpts>();
    CLI::App* sub = app.add_subcommand(
        "evolve", "Spectrally evolve the vorticity profile and compare to the closed form");
    add_common_flags(*sub, o->common);
    sub->add_option("--gamma", o->gamma, "Circulation scale");
    sub->add_option("--nu", o->nu, "Viscosity amplitude");
    sub->add_option("--omega_cap", o->omega_cap, "Viscosity oscillation frequency");
    sub->add_option("--n_offset", o->n_offset, "Spread offset (must exceed 1)");
    sub->add_option("--t0", o->t0, "Start time");
    sub->add_option("--t1", o->t1, "End time (>= t0)");
    sub->add_option("--r_max", o->r_max, "Transform domain radius");
    sub->add_option("--modes", o->modes, "Number of radial modes");
    sub->add_option("--r_count", o->r_count, "Profile sample count");
    attach<EvolveOpts, run_evolve>(sub, o, exit_code);
  }
  {
    auto o = std::make_shared<RingOpts>();
    CLI::App* sub = app.add_subcommand("ring", "Sample the helicoidal loop and classify it");
    add_common_flags(*sub, o->common);
    sub->add_option("--a0", o->a0, "Tube radius");
    sub->add_option("--b1", o->b1, "Axis offset");
    sub->add_option("--omega0", o->omega0, "Tube-winding frequency");
    sub->add_option("--omega1", o->omega1, "Axis-revolution frequency");
    sub->add_option("--phi0", o->phi0, "Tube phase");
    sub->add_option("--phi1", o->phi1, "Axis phase");
    sub->add_option("--count", o->count, "Number of samples");
    attach<RingOpts, run_ring>(sub, o, exit_code);
  }
  {
    auto o = std::make_shared<IntersectOpts>();
    CLI::App* sub =
        app.add_subcommand("intersections", "Locate loop self- or pair-intersections");
    add_common_flags(*sub, o->common);
    sub->add_option("--mode", o->mode, "self or pair");
    sub->add_option("--a0", o->a0, "Tube radius");
    sub->add_option("--b1", o->b1, "Axis offset");
    sub->add_option("--omega0", o->omega0, "Tube-winding frequency");
    sub->add_option("--omega1", o->omega1, "Axis-revolution frequency");
    sub->add_option("--phi0", o->phi0, "Tube phase");
    sub->add_option("--phi1", o->phi1, "Axis phase");
    sub->add_option("--a0_b", o->a0_b, "Loop B tube radius (defaults to loop A)");
    sub->add_option("--b1_b", o->b1_b, "Loop B axis offset");
    sub->add_option("--omega0_b", o->omega0_b, "Loop B tube-winding frequency");
    sub->add_option("--omega1_b", o->omega1_b, "Loop B axis-revolution frequency");
    sub->add_option("--phi0_b", o->phi0_b, "Loop B tube phase");
    sub->add_option("--phi1_b", o->phi1_b, "Loop B axis phase");
    sub->add_option("--tol", o->tol, "Spatial acceptance tolerance");
    attach<IntersectOpts, run_intersections>(sub, o, exit_code);
  }
  {
    auto o = std::make_shared<SpinOpts>();
    CLI::App* sub = app.add_subcommand("spin", "Evolve a spinor under a drive field");
    add_common_flags(*sub, o->common);
    sub->add_option("--drive", o->drive, "closed_form or constant");
    sub->add_option("--omega", o->omega, "Frequency of the closed-form drive");
    sub->add_option("--theta_x", o->theta_x, "Constant drive x component");
    sub->add_option("--theta_y", o->theta_y, "Constant drive y component");
    sub->add_option("--theta_z", o->theta_z, "Constant drive z component");
    sub->add_option("--hbar", o->hbar, "Action scale");
    sub->add_option("--t0", o->t0, "Start time");
    sub->add_option("--t1", o->t1, "End time");
    sub->add_option("--steps", o->steps, "Integration steps");
    sub->add_option("--psi_up_re", o->psi_up_re, "Initial up amplitude, real part");
    sub->add_option("--psi_up_im", o->psi_up_im, "Initial up amplitude, imaginary part");
    sub->add_option("--psi_down_re", o->psi_down_re, "Initial down amplitude, real part");
    sub->add_option("--psi_down_im", o->psi_down_im, "Initial down amplitude, imaginary part");
    attach<SpinOpts, run_spin>(sub, o, exit_code);
  }
  {
    auto o = std::make_shared<MomentOpts>();
    CLI::App* sub = app.add_subcommand(
        "moment", "Factorial continued fraction and companion moment values");
    add_common_flags(*sub, o->common);
    sub->add_option("--preset", o->preset, "paper_quoted or standard_tables");
    sub->add_option("--max_factorial_arg", o->max_factorial_arg,
                    "Deepest factorial argument (1, 2, 4, ..., 18)");
    sub->add_option("--mu_b", o->mu_b, "Override the preset Bohr magneton");
    sub->add_option("--alpha", o->alpha, "Override the preset fine structure constant");
    attach<MomentOpts, run_moment>(sub, o, exit_code);
  }
  {
    auto o = std::make_shared<VerifyOpts>();
    CLI::App* sub = app.add_subcommand("verify", "Run the full invariant suite");
    add_common_flags(*sub, o->common);
    sub->add_option("--inject_fault", o->inject_fault, "Test hook; perturbs a named check")
        ->group("");  // hidden
    attach<VerifyOpts, run_verify>(sub, o, exit_code);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace vortexlab::cli

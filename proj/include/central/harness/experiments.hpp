#pragma once

// Drivers for the validation experiments: initial data, runs with on-the-fly
// diagnostics, and CSV output.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "central/core_grid.hpp"
#include "central/cweno.hpp"
#include "central/errors.hpp"
#include "central/harness/convergence.hpp"
#include "central/harness/exact.hpp"
#include "central/incompressible2d.hpp"
#include "central/models.hpp"
#include "central/semidiscrete.hpp"
#include "central/time_integration.hpp"

namespace central::harness {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Experiment {
  AdvectionAccuracy,
  BurgersAccuracy,
  BurgersShock,
  Sod,
  BuckleyLeverett,
  BuckleyLeverettGravity,
  TaylorGreen,
  DoubleShearLayer,
};

inline constexpr std::array<std::pair<Experiment, std::string_view>, 8> kExperimentNames{{
    {Experiment::AdvectionAccuracy, "advection"},
    {Experiment::BurgersAccuracy, "burgers"},
    {Experiment::BurgersShock, "burgers-shock"},
    {Experiment::Sod, "sod"},
    {Experiment::BuckleyLeverett, "buckley-leverett"},
    {Experiment::BuckleyLeverettGravity, "buckley-leverett-gravity"},
    {Experiment::TaylorGreen, "taylor-green"},
    {Experiment::DoubleShearLayer, "double-shear-layer"},
}};

inline std::string_view to_string(Experiment e) {
  for (const auto& [k, name] : kExperimentNames)
    if (k == e) return name;
  return "unknown";
}

inline std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto& [k, n] : kExperimentNames)
    if (n == name) return k;
  return std::nullopt;
}

inline bool is_two_dimensional(Experiment e) {
  return e == Experiment::TaylorGreen || e == Experiment::DoubleShearLayer;
}

/// Experiments that compare against an exact solution and tabulate rates.
inline bool has_convergence_table(Experiment e) {
  return e == Experiment::AdvectionAccuracy || e == Experiment::BurgersAccuracy || e == Experiment::TaylorGreen;
}

struct RunOptions {
  CwenoParams cweno{};
  double cfl = 0.45;
  double parabolic_safety = 0.4;

  TimeController controller(double t_end) const {
    TimeController c;
    c.cfl_hyperbolic = cfl;
    c.parabolic_safety = parabolic_safety;
    c.t_end = t_end;
    return c;
  }
};

struct ExperimentConfig {
  Experiment experiment = Experiment::AdvectionAccuracy;
  std::vector<int> resolutions;
  double t_end = 1.0;
  RunOptions options{};
  /// Viscosity (incompressible runs only).
  double nu = 0.0;
  /// Snapshot times (double shear layer); the last one must equal t_end.
  std::vector<double> output_times;
  std::filesystem::path output_dir = "out";

  /// Resolutions, end times and parameters of the reference experiments.
  static ExperimentConfig defaults(Experiment e) {
    ExperimentConfig c;
    c.experiment = e;
    switch (e) {
      case Experiment::AdvectionAccuracy:
        c.resolutions = {40, 80, 160, 320, 640, 1280};
        c.t_end = 1.0;
        break;
      case Experiment::BurgersAccuracy:
        c.resolutions = {40, 80, 160, 320, 640, 1280};
        c.t_end = 0.5;
        break;
      case Experiment::BurgersShock:
        c.resolutions = {40, 80};
        c.t_end = 2.0;
        break;
      case Experiment::Sod:
        c.resolutions = {200, 400};
        c.t_end = 0.1644;
        c.options.cweno.p_exponent = 0.6;
        break;
      case Experiment::BuckleyLeverett:
      case Experiment::BuckleyLeverettGravity:
        c.resolutions = {100, 800};
        c.t_end = 0.2;
        break;
      case Experiment::TaylorGreen:
        c.resolutions = {32, 64, 128};
        c.t_end = 2.0;
        c.nu = 0.05;
        break;
      case Experiment::DoubleShearLayer:
        c.resolutions = {64};
        c.t_end = 10.0;
        c.nu = 0.0;
        c.output_times = {4.0, 6.0, 10.0};
        break;
    }
    return c;
  }

  void validate() const {
    if (resolutions.empty()) throw ConfigError("resolutions must be nonempty");
    for (int n : resolutions)
      if (n < 8) throw ConfigError("every resolution must be >= 8 (got " + std::to_string(n) + ")");
    if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
    if (!(options.cfl > 0.0 && options.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    if (!(options.parabolic_safety > 0.0)) throw ConfigError("parabolic_safety must be positive");
    if (nu < 0.0) throw ConfigError("nu must be nonnegative");
    try {
      options.cweno.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (has_convergence_table(experiment)) {
      std::vector<int> sorted = resolutions;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] != 2 * sorted[k - 1])
          throw ConfigError("accuracy runs need resolutions that double (got " + std::to_string(sorted[k - 1]) +
                            " then " + std::to_string(sorted[k]) + ")");
    }
    if (experiment == Experiment::BurgersAccuracy && t_end >= 1.0)
      throw ConfigError("burgers accuracy run needs t_end < 1 (smooth regime)");
    for (std::size_t k = 0; k < output_times.size(); ++k) {
      if (!(output_times[k] > 0.0) || output_times[k] > t_end || (k > 0 && output_times[k] <= output_times[k - 1]))
        throw ConfigError("output_times must be increasing within (0, t_end]");
    }
  }
};

// ---- Initial data -----------------------------------------------------------

/// Exact cell average of sin over [a, b].
inline double sin_average(double a, double b) { return (std::cos(a) - std::cos(b)) / (b - a); }

/// Exact cell average of the step u_left (x < x0), u_right (x >= x0).
inline double step_average(double a, double b, double x0, double u_left, double u_right) {
  if (b <= x0) return u_left;
  if (a >= x0) return u_right;
  return (u_left * (x0 - a) + u_right * (b - x0)) / (b - a);
}

inline Field1D<1> periodic_sine_field(int n, double offset) {
  Field1D<1> f(Grid1D::uniform(0.0, kTwoPi, n));
  const Grid1D& g = f.grid();
  f.fill([&](int j) { return Scalar{offset + sin_average(g.left_face(j), g.left_face(j + 1))}; });
  return apply_boundary(f, BoundaryKind::Periodic);
}

inline Field1D<3> sod_initial(int n) {
  Field1D<3> f(Grid1D::uniform(-0.5, 0.5, n));
  const Grid1D& g = f.grid();
  const EulerConserved l = kSodLeft.conserved();
  const EulerConserved r = kSodRight.conserved();
  f.fill([&](int j) {
    EulerConserved q;
    for (int c = 0; c < 3; ++c) q[c] = step_average(g.left_face(j), g.left_face(j + 1), 0.0, l[c], r[c]);
    return q;
  });
  return apply_boundary(f, BoundaryKind::OutflowExtrapolate);
}

inline double buckley_leverett_jump() { return 1.0 - 1.0 / std::numbers::sqrt2; }

inline Field1D<1> buckley_leverett_initial(int n, double x_min = 0.0, double x_max = 1.0) {
  Field1D<1> f(Grid1D::uniform(x_min, x_max, n));
  const Grid1D& g = f.grid();
  f.fill([&](int j) {
    return Scalar{step_average(g.left_face(j), g.left_face(j + 1), buckley_leverett_jump(), 0.0, 1.0)};
  });
  return apply_boundary(f, BoundaryKind::OutflowExtrapolate);
}

inline Grid2D periodic_box(int n) { return Grid2D::uniform(0.0, kTwoPi, n, 0.0, kTwoPi, n); }

/// Cell averages of the Taylor-Green vorticity 2 cos x cos y.
inline Field2D taylor_green_initial(int n) {
  Field2D w(periodic_box(n));
  const Grid2D& g = w.grid();
  w.fill([&](int i, int j) {
    const double ax = (std::sin(g.x.left_face(i + 1)) - std::sin(g.x.left_face(i))) / g.dx();
    const double ay = (std::sin(g.y.left_face(j + 1)) - std::sin(g.y.left_face(j))) / g.dy();
    return 2.0 * ax * ay;
  });
  return apply_boundary(w, BoundaryKind::Periodic);
}

struct ShearLayerParams {
  double width = std::numbers::pi / 15.0;
  double perturbation = 0.05;
};

/// Horizontal velocity of the double shear layer.
inline double shear_layer_u(double y, const ShearLayerParams& p = {}) {
  return y <= std::numbers::pi ? std::tanh((y - 0.5 * std::numbers::pi) / p.width)
                               : std::tanh((1.5 * std::numbers::pi - y) / p.width);
}

/// Cell averages of w = v_x - u_y; both terms integrate in closed form.
inline Field2D double_shear_layer_initial(int n, const ShearLayerParams& p = {}) {
  Field2D w(periodic_box(n));
  const Grid2D& g = w.grid();
  w.fill([&](int i, int j) {
    const double vx = p.perturbation * (std::sin(g.x.left_face(i + 1)) - std::sin(g.x.left_face(i))) / g.dx();
    const double uy = (shear_layer_u(g.y.left_face(j + 1), p) - shear_layer_u(g.y.left_face(j), p)) / g.dy();
    return vx - uy;
  });
  return apply_boundary(w, BoundaryKind::Periodic);
}

// ---- Shared helpers -----------------------------------------------------------

/// Center point values u_j = P_j(x_j) of a scalar field with filled ghosts.
inline std::vector<double> center_values(const Field1D<1>& f, const CwenoParams& params) {
  const InterfaceStates<1> s = interface_values_1d(f, params);
  std::vector<double> out(f.n_cells());
  for (int j = 0; j < f.n_cells(); ++j) out[j] = s.center(j)[0];
  return out;
}

/// Averages of a fine field over blocks of `factor` cells.
inline std::vector<double> restrict_averages(std::span<const double> fine, int factor) {
  if (factor < 1 || fine.size() % factor != 0) throw std::invalid_argument("restrict_averages: bad factor");
  std::vector<double> out(fine.size() / factor, 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    double s = 0.0;
    for (int m = 0; m < factor; ++m) s += fine[k * factor + m];
    out[k] = s / factor;
  }
  return out;
}

/// dx-weighted L1 distance of a coarse field to a finer one restricted onto it.
inline double l1_self_distance(std::span<const double> coarse, std::span<const double> fine, double coarse_dx) {
  const int factor = static_cast<int>(fine.size() / coarse.size());
  const std::vector<double> r = restrict_averages(fine, factor);
  double s = 0.0;
  for (std::size_t k = 0; k < coarse.size(); ++k) s += std::abs(coarse[k] - r[k]);
  return s * coarse_dx;
}

/// First x (scanning in `direction`, +1 rightward) where linear interpolation
/// of the centered samples crosses `level`.
inline std::optional<double> level_crossing(const Grid1D& g, std::span<const double> values, double level,
                                            int direction = +1) {
  const int n = static_cast<int>(values.size());
  for (int s = 0; s + 1 < n; ++s) {
    const int j = direction > 0 ? s : n - 2 - s;
    const double a = values[j] - level;
    const double b = values[j + 1] - level;
    if (a == 0.0) return g.center(j);
    if ((a < 0.0) != (b < 0.0) || b == 0.0) return g.center(j) + g.dx() * a / (a - b);
  }
  return std::nullopt;
}

// ---- Scalar 1D runs -----------------------------------------------------------

struct ScalarRun {
  Field1D<1> solution;
  std::vector<double> points;  // P_j(x_j) at t_end
  ErrorNorms errors;           // pointwise, when an exact solution exists
  double min_value = 0.0;      // extrema of cell averages over all steps
  double max_value = 0.0;
  double tv_initial = 0.0;
  double tv_max = 0.0;  // max over steps of the total variation
  long steps = 0;
};

namespace detail {

template <class Exact>
ScalarRun run_scalar(Field1D<1> u, const FluxModel<1>& model, BoundaryKind kind, double t_end,
                     const RunOptions& opt, Exact&& exact) {
  ScalarRun run;
  const auto interior = u.interior();
  run.min_value = *std::min_element(interior.begin(), interior.end());
  run.max_value = *std::max_element(interior.begin(), interior.end());
  run.tv_initial = total_variation(u, kind);
  run.tv_max = run.tv_initial;

  TimeController ctrl = opt.controller(t_end);
  run.solution = integrate_to(std::move(u), model, opt.cweno, kind, ctrl, [&](double, const Field1D<1>& s) {
    ++run.steps;
    const auto v = s.interior();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    run.min_value = std::min(run.min_value, *lo);
    run.max_value = std::max(run.max_value, *hi);
    run.tv_max = std::max(run.tv_max, total_variation(s, kind));
  });
  run.points = center_values(run.solution, opt.cweno);
  if constexpr (!std::is_same_v<std::decay_t<Exact>, std::nullptr_t>)
    run.errors = error_norms(std::span<const double>(run.points), exact, run.solution.grid());
  return run;
}

}  // namespace detail

inline ScalarRun run_advection(int n, double t_end, const RunOptions& opt = {}) {
  return detail::run_scalar(periodic_sine_field(n, 0.0), advection_model(), BoundaryKind::Periodic, t_end, opt,
                            [t_end](double x) { return advection_exact(x, t_end); });
}

inline ScalarRun run_burgers_smooth(int n, double t_end, const RunOptions& opt = {}) {
  if (t_end >= 1.0) throw OutOfSmoothRegime("run_burgers_smooth: t_end must be < 1");
  return detail::run_scalar(periodic_sine_field(n, 0.5), burgers_model(), BoundaryKind::Periodic, t_end, opt,
                            [t_end](double x) { return burgers_exact(x, t_end); });
}

inline ScalarRun run_burgers_shock(int n, double t_end, const RunOptions& opt = {}) {
  return detail::run_scalar(periodic_sine_field(n, 0.5), burgers_model(), BoundaryKind::Periodic, t_end, opt,
                            nullptr);
}

inline ScalarRun run_buckley_leverett(int n, bool gravity, double t_end, const RunOptions& opt = {},
                                      double x_min = 0.0, double x_max = 1.0) {
  BuckleyLeverettParams bl;
  bl.gravity = gravity;
  return detail::run_scalar(buckley_leverett_initial(n, x_min, x_max), buckley_leverett_model(bl),
                            BoundaryKind::OutflowExtrapolate, t_end, opt, nullptr);
}

// ---- Sod shock tube -------------------------------------------------------------

struct SodRun {
  Field1D<3> solution;
  std::vector<EulerState> primitive;  // from final cell averages
  double min_density = 0.0;           // over all steps
  double min_pressure = 0.0;
  double density_l1_error = 0.0;      // cell averages vs exact at centers
  long steps = 0;
};

inline std::vector<EulerState> to_primitive(const Field1D<3>& f) {
  std::vector<EulerState> out;
  out.reserve(f.n_cells());
  for (int j = 0; j < f.n_cells(); ++j) out.push_back(EulerState::from_conserved(f.state(j)));
  return out;
}

inline SodRun run_sod(int n, double t_end, const RunOptions& opt = {}) {
  SodRun run;
  run.min_density = std::min(kSodLeft.rho, kSodRight.rho);
  run.min_pressure = std::min(kSodLeft.p, kSodRight.p);
  const FluxModel<3> model = euler_model();
  TimeController ctrl = opt.controller(t_end);
  run.solution = integrate_to(sod_initial(n), model, opt.cweno, BoundaryKind::OutflowExtrapolate, ctrl,
                              [&](double, const Field1D<3>& s) {
                                ++run.steps;
                                for (const EulerState& p : to_primitive(s)) {
                                  run.min_density = std::min(run.min_density, p.rho);
                                  run.min_pressure = std::min(run.min_pressure, p.p);
                                }
                              });
  run.primitive = to_primitive(run.solution);
  const Grid1D& g = run.solution.grid();
  double l1 = 0.0;
  for (int j = 0; j < n; ++j) l1 += std::abs(run.primitive[j].rho - sod_reference(g.center(j), t_end).rho);
  run.density_l1_error = l1 * g.dx();
  return run;
}

// ---- Incompressible 2D runs -----------------------------------------------------

/// Step size for the vorticity equation from the face velocities.
inline double vorticity_dt(const VelocityField& vel, double nu, const TimeController& ctrl) {
  double ax = 0.0;
  double ay = 0.0;
  for (double u : vel.faces.u_half) ax = std::max(ax, std::abs(u));
  for (double v : vel.faces.v_half) ay = std::max(ay, std::abs(v));
  const Grid2D& g = vel.u.grid();
  return step_size(ax / g.dx() + ay / g.dy(), std::min(g.dx(), g.dy()), nu, 2, ctrl);
}

/// Integrate the vorticity averages from ctrl.t_current to ctrl.t_end.
template <class Callback = NoCallback>
Field2D integrate_vorticity(Field2D w, VorticitySolver& solver, TimeController& ctrl, Callback&& callback = {}) {
  const auto rhs = [&](Field2D& s) {
    apply_boundary(s, BoundaryKind::Periodic);
    return solver.rhs(s);
  };
  const auto dt_fn = [&](Field2D& s, const TimeController& c) {
    apply_boundary(s, BoundaryKind::Periodic);
    return vorticity_dt(solver.velocities(s), solver.viscosity(), c);
  };
  w = integrate_to(std::move(w), rhs, dt_fn, ctrl, callback);
  return apply_boundary(w, BoundaryKind::Periodic);
}

struct TaylorGreenRun {
  Field2D solution;
  Field2D points;
  ErrorNorms errors;  // pointwise vorticity
  long steps = 0;
};

inline TaylorGreenRun run_taylor_green(int n, double nu, double t_end, const RunOptions& opt = {}) {
  TaylorGreenRun run;
  VorticitySolver solver(periodic_box(n), nu, opt.cweno);
  TimeController ctrl = opt.controller(t_end);
  run.solution = integrate_vorticity(taylor_green_initial(n), solver, ctrl, [&](double, const Field2D&) { ++run.steps; });
  run.points = point_values_2d(run.solution, opt.cweno);
  run.errors = error_norms(run.points, [&](double x, double y) { return taylor_green_vorticity(x, y, t_end, nu); });
  return run;
}

struct ShearLayerSnapshot {
  double t = 0.0;
  Field2D vorticity;  // cell averages
  /// |sum w(t) - sum w(0)| / sum |w(0)|
  double circulation_drift = 0.0;
  /// max |discrete divergence| of the recovered velocities.
  double max_divergence = 0.0;
  double max_abs_vorticity = 0.0;
};

struct ShearLayerRun {
  std::vector<ShearLayerSnapshot> snapshots;
  double max_circulation_drift = 0.0;  // over every step
  long steps = 0;
};

inline ShearLayerRun run_double_shear_layer(int n, double nu, const std::vector<double>& output_times,
                                            const RunOptions& opt = {}) {
  ShearLayerRun run;
  VorticitySolver solver(periodic_box(n), nu, opt.cweno);
  Field2D w = double_shear_layer_initial(n);
  const double total0 = w.interior_sum();
  double scale = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scale += std::abs(w(i, j));

  const auto drift = [&](const Field2D& s) { return std::abs(s.interior_sum() - total0) / scale; };

  TimeController ctrl = opt.controller(0.0);
  for (double t_out : output_times) {
    ctrl.t_end = t_out;
    w = integrate_vorticity(std::move(w), solver, ctrl, [&](double, const Field2D& s) {
      ++run.steps;
      run.max_circulation_drift = std::max(run.max_circulation_drift, drift(s));
    });
    ShearLayerSnapshot snap;
    snap.t = t_out;
    snap.vorticity = w;
    snap.circulation_drift = drift(w);
    const Field2D div = discrete_divergence(solver.velocities(w));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        snap.max_divergence = std::max(snap.max_divergence, std::abs(div(i, j)));
        snap.max_abs_vorticity = std::max(snap.max_abs_vorticity, std::abs(w(i, j)));
      }
    run.snapshots.push_back(std::move(snap));
  }
  return run;
}

// ---- CSV output -------------------------------------------------------------------

/// Shortest round-trip-exact decimal form: 17 significant digits.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
      : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
    bool first = true;
    for (std::string_view h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }

  void row(std::initializer_list<std::optional<double>> values) {
    bool first = true;
    for (const auto& v : values) {
      if (!first) out_ << ',';
      if (v) out_ << format_double(*v);
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

inline void write_convergence_csv(const std::filesystem::path& path, const std::vector<ConvergenceRow>& rows,
                                  bool with_l2) {
  if (with_l2) {
    CsvWriter csv(path, {"N", "L1", "L1rate", "Linf", "Linfrate", "L2", "L2rate"});
    for (const auto& r : rows)
      csv.row({static_cast<double>(r.n), r.l1, r.l1_rate, r.linf, r.linf_rate, r.l2, r.l2_rate});
  } else {
    CsvWriter csv(path, {"N", "L1", "L1rate", "Linf", "Linfrate"});
    for (const auto& r : rows) csv.row({static_cast<double>(r.n), r.l1, r.l1_rate, r.linf, r.linf_rate});
  }
}

inline void write_field_csv(const std::filesystem::path& path, const Field2D& w) {
  CsvWriter csv(path, {"x", "y", "omega"});
  const Grid2D& g = w.grid();
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) csv.row({g.x.center(i), g.y.center(j), w(i, j)});
}

struct RunReport {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> summary;
};

namespace detail {

inline std::string tag(const ExperimentConfig& c, int n) {
  return std::string(to_string(c.experiment)) + "_N" + std::to_string(n);
}

inline std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

}  // namespace detail

/// Run one configured experiment and write its CSV files under
/// config.output_dir. Throws ConfigError or NumericalError.
inline RunReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::filesystem::create_directories(config.output_dir);
  const auto& dir = config.output_dir;
  const std::string name(to_string(config.experiment));
  const RunOptions& opt = config.options;
  RunReport report;
  std::vector<ErrorSample> samples;

  for (int n : config.resolutions) {
    const std::filesystem::path file = dir / (detail::tag(config, n) + ".csv");
    switch (config.experiment) {
      case Experiment::AdvectionAccuracy:
      case Experiment::BurgersAccuracy: {
        const bool adv = config.experiment == Experiment::AdvectionAccuracy;
        const ScalarRun run = adv ? run_advection(n, config.t_end, opt) : run_burgers_smooth(n, config.t_end, opt);
        CsvWriter csv(file, {"x", "u", "exact"});
        const Grid1D& g = run.solution.grid();
        for (int j = 0; j < n; ++j) {
          const double x = g.center(j);
          csv.row({x, run.points[j], adv ? advection_exact(x, config.t_end) : burgers_exact(x, config.t_end)});
        }
        samples.push_back({n, run.errors});
        report.summary.push_back("N=" + std::to_string(n) +
                                 detail::fmt(" L1=%.4e Linf=%.4e", run.errors.l1, run.errors.linf));
        break;
      }
      case Experiment::BurgersShock:
      case Experiment::BuckleyLeverett:
      case Experiment::BuckleyLeverettGravity: {
        const ScalarRun run =
            config.experiment == Experiment::BurgersShock
                ? run_burgers_shock(n, config.t_end, opt)
                : run_buckley_leverett(n, config.experiment == Experiment::BuckleyLeverettGravity, config.t_end, opt);
        CsvWriter csv(file, {"x", "u"});
        const Grid1D& g = run.solution.grid();
        for (int j = 0; j < n; ++j) csv.row({g.center(j), run.solution[j]});
        report.summary.push_back("N=" + std::to_string(n) +
                                 detail::fmt(" min=%.6f max=%.6f TVmax/TV0=%.6f", run.min_value, run.max_value,
                                             run.tv_max / run.tv_initial));
        break;
      }
      case Experiment::Sod: {
        const SodRun run = run_sod(n, config.t_end, opt);
        CsvWriter csv(file, {"x", "rho", "u", "p", "rho_exact", "u_exact", "p_exact"});
        const Grid1D& g = run.solution.grid();
        for (int j = 0; j < n; ++j) {
          const EulerState& s = run.primitive[j];
          const EulerState e = sod_reference(g.center(j), config.t_end);
          csv.row({g.center(j), s.rho, s.u, s.p, e.rho, e.u, e.p});
        }
        report.summary.push_back("N=" + std::to_string(n) +
                                 detail::fmt(" density L1=%.4e min rho=%.4f min p=%.4f", run.density_l1_error,
                                             run.min_density, run.min_pressure));
        break;
      }
      case Experiment::TaylorGreen: {
        const TaylorGreenRun run = run_taylor_green(n, config.nu, config.t_end, opt);
        CsvWriter csv(file, {"x", "y", "omega", "exact"});
        const Grid2D& g = run.points.grid();
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i)
            csv.row({g.x.center(i), g.y.center(j), run.points(i, j),
                     taylor_green_vorticity(g.x.center(i), g.y.center(j), config.t_end, config.nu)});
        samples.push_back({n, run.errors});
        report.summary.push_back("N=" + std::to_string(n) + detail::fmt(" Linf=%.4e L1=%.4e L2=%.4e", run.errors.linf,
                                                                           run.errors.l1, run.errors.l2));
        break;
      }
      case Experiment::DoubleShearLayer: {
        std::vector<double> times = config.output_times;
        if (times.empty() || times.back() != config.t_end) times.push_back(config.t_end);
        const ShearLayerRun run = run_double_shear_layer(n, config.nu, times, opt);
        const std::filesystem::path diag = dir / (detail::tag(config, n) + "_diagnostics.csv");
        CsvWriter csv(diag, {"t", "circulation_drift", "max_divergence", "max_abs_omega"});
        for (const ShearLayerSnapshot& s : run.snapshots) {
          csv.row({s.t, s.circulation_drift, s.max_divergence, s.max_abs_vorticity});
          const std::filesystem::path snap = dir / (detail::tag(config, n) + "_t" + format_double(s.t) + ".csv");
          write_field_csv(snap, s.vorticity);
          report.files.push_back(snap);
          report.summary.push_back("N=" + std::to_string(n) +
                                   detail::fmt(" t=%g drift=%.3e max|div|=%.3e", s.t, s.circulation_drift,
                                               s.max_divergence));
        }
        report.files.push_back(diag);
        continue;
      }
    }
    report.files.push_back(file);
  }

  if (!samples.empty()) {
    std::vector<ErrorSample> sorted = samples;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    const auto rows = convergence_table(sorted);
    const std::filesystem::path table = dir / (name + "_convergence.csv");
    write_convergence_csv(table, rows, is_two_dimensional(config.experiment));
    report.files.push_back(table);
    if (const auto rates = endpoint_rates(sorted))
      report.summary.push_back(detail::fmt("endpoint order: L1 %.3f Linf %.3f L2 %.3f", rates->l1, rates->linf,
                                           rates->l2));
  }
  return report;
}

}  // namespace central::harness

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "central/core_grid.hpp"
#include "central/cweno.hpp"
#include "central/errors.hpp"
#include "central/semidiscrete.hpp"

namespace central {

struct TimeController {
  double cfl_hyperbolic = 0.45;
  /// Folds in the 16/12 amplification of the fourth-order diffusion stencil.
  double parabolic_safety = 0.4;
  double t_current = 0.0;
  double t_end = 0.0;

  void validate() const {
    if (!(cfl_hyperbolic > 0.0 && cfl_hyperbolic <= 1.0))
      throw std::invalid_argument("TimeController: cfl must lie in (0, 1]");
    if (!(parabolic_safety > 0.0)) throw std::invalid_argument("TimeController: parabolic_safety must be positive");
    if (!(t_end >= t_current)) throw std::invalid_argument("TimeController: t_end precedes t_current");
  }

  double remaining() const noexcept { return t_end - t_current; }
};

/// dt from the hyperbolic rate (sum over axes of max speed / spacing) and,
/// when diffusivity is positive, the explicit parabolic bound
/// safety * h^2 / (2 D dim); clipped to the remaining time.
inline double step_size(double hyperbolic_rate, double min_spacing, double max_diffusivity, int dims,
                        const TimeController& ctrl) {
  if (!std::isfinite(hyperbolic_rate) || !std::isfinite(max_diffusivity))
    throw NonFiniteState("compute_dt", -1);
  double dt = ctrl.remaining();
  if (hyperbolic_rate > 0.0) dt = std::min(dt, ctrl.cfl_hyperbolic / hyperbolic_rate);
  if (max_diffusivity > 0.0)
    dt = std::min(dt, ctrl.parabolic_safety * min_spacing * min_spacing / (2.0 * max_diffusivity * dims));
  return dt;
}

/// Step size for a 1D state whose ghosts are filled. Speeds are taken over the
/// reconstructed interface states.
template <std::size_t M>
double compute_dt(const Field1D<M>& state, const FluxModel<M>& model, const CwenoParams& params,
                  const TimeController& ctrl) {
  detail::require_finite(state, "compute_dt");
  const InterfaceStates<M> s = interface_values_1d(state, params);
  double a_max = 0.0;
  for (std::size_t k = 0; k < s.minus.size(); ++k)
    a_max = std::max(a_max, local_speed(s.minus[k], s.plus[k], model.wavespeed_x, model.speed_policy));
  double d_max = 0.0;
  if (model.has_dissipation() && model.diffusivity) {
    if constexpr (M == 1) {
      for (int j = 0; j < state.n_cells(); ++j) d_max = std::max(d_max, model.diffusivity(state(0, j)));
    }
  }
  const double dx = state.grid().dx();
  return step_size(a_max / dx, dx, d_max, 1, ctrl);
}

/// Shu-Osher three-stage SSP Runge-Kutta step. `rhs(u)` may refill ghost
/// cells of its argument.
template <class State, class Rhs>
  requires requires(State a, State b, double s) {
    { a + b } -> std::convertible_to<State>;
    { s * a } -> std::convertible_to<State>;
  }
State ssp_rk3_step(State u, Rhs&& rhs, double dt) {
  State u1 = u + dt * rhs(u);
  State u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1));
  return (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2));
}

inline constexpr std::int64_t kMaxSteps = 100'000'000;

struct NoCallback {
  template <class State>
  void operator()(double, const State&) const noexcept {}
};

/// Advance from ctrl.t_current to ctrl.t_end. `dt_fn(u, ctrl)` proposes a
/// step (already clipped to the remaining time); the final step lands on
/// t_end exactly. `callback(t, u)` runs after every accepted step.
template <class State, class Rhs, class DtFn, class Callback = NoCallback>
State integrate_to(State u, Rhs&& rhs, DtFn&& dt_fn, TimeController& ctrl, Callback&& callback = {}) {
  ctrl.validate();
  std::int64_t steps = 0;
  while (ctrl.t_current < ctrl.t_end) {
    if (++steps > kMaxSteps) throw RunawayIntegration("integrate_to: step limit exceeded");
    double dt = std::min(dt_fn(u, ctrl), ctrl.remaining());
    if (!(dt > 0.0)) throw NonFiniteState("integrate_to: non-positive step", -1);
    u = ssp_rk3_step(std::move(u), rhs, dt);
    // Snap to t_end when the remainder would be round-off.
    if (ctrl.remaining() - dt <= 1e-14 * std::max(1.0, std::abs(ctrl.t_end)))
      ctrl.t_current = ctrl.t_end;
    else
      ctrl.t_current += dt;
    callback(ctrl.t_current, u);
  }
  return u;
}

/// Convenience driver for a 1D conservation law with fixed boundary kind.
/// The returned field has its ghosts filled.
template <std::size_t M, class Callback = NoCallback>
Field1D<M> integrate_to(Field1D<M> u, const FluxModel<M>& model, const CwenoParams& params, BoundaryKind kind,
                        TimeController& ctrl, Callback&& callback = {}) {
  const auto rhs = [&](Field1D<M>& s) {
    apply_boundary(s, kind);
    return rhs_1d(s, model, params);
  };
  const auto dt_fn = [&](Field1D<M>& s, const TimeController& c) {
    apply_boundary(s, kind);
    return compute_dt(s, model, params, c);
  };
  u = integrate_to(std::move(u), rhs, dt_fn, ctrl, callback);
  apply_boundary(u, kind);
  return u;
}

}  // namespace central

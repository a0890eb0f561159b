#pragma once

// Semi-discrete central scheme:
//
//   d/dt u_j = -(H_{j+1/2} - H_{j-1/2}) / dx + Q_j
//   H_{j+1/2} = [f(u+) + f(u-)] / 2 - a_{j+1/2} / 2 (u+ - u-)
//
// with u-/u+ the CWENO values on either side of the interface and a the local
// speed of propagation there.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "central/core_grid.hpp"
#include "central/cweno.hpp"
#include "central/diffusion.hpp"
#include "central/errors.hpp"

namespace central {

/// How to bound the spectral radius of the flux Jacobian across an interface.
enum class SpeedPolicy {
  /// max of the two endpoint values; enough for genuinely nonlinear or
  /// linearly degenerate fields.
  EndpointSufficient,
  /// max over equally spaced samples of the interval between the two states
  /// (scalar fluxes with inflection points).
  SampleInterval,
};

inline constexpr int kSpeedSamples = 65;

template <std::size_t M>
struct FluxModel {
  using State = std::array<double, M>;

  std::function<State(const State&)> flux_x;
  std::function<State(const State&)> flux_y;  // 2D only
  std::function<double(const State&)> wavespeed_x;
  std::function<double(const State&)> wavespeed_y;  // 2D only
  SpeedPolicy speed_policy = SpeedPolicy::EndpointSufficient;

  /// Scalar 1D dissipation flux Q(u, u_x), nondecreasing in u_x.
  std::function<double(double u, double slope)> dissipation;
  /// dQ/ds at u; bounds the parabolic step.
  std::function<double(double u)> diffusivity;

  /// Coefficient of a linear 2D Laplacian term (incompressible viscosity).
  double viscosity = 0.0;

  bool has_dissipation() const noexcept { return static_cast<bool>(dissipation); }
};

template <std::size_t M, class Wavespeed>
double local_speed(const std::array<double, M>& u_minus, const std::array<double, M>& u_plus,
                   Wavespeed&& wavespeed, SpeedPolicy policy) {
  if (policy == SpeedPolicy::EndpointSufficient || u_minus == u_plus)
    return std::max(wavespeed(u_minus), wavespeed(u_plus));
  if constexpr (M != 1) {
    throw std::logic_error("local_speed: interval sampling is defined for scalar laws only");
  } else {
    const double lo = std::min(u_minus[0], u_plus[0]);
    const double hi = std::max(u_minus[0], u_plus[0]);
    double a = 0.0;
    for (int k = 0; k < kSpeedSamples; ++k) {
      const double u = k == kSpeedSamples - 1 ? hi : lo + (hi - lo) * k / (kSpeedSamples - 1);
      a = std::max(a, wavespeed(std::array<double, 1>{u}));
    }
    return a;
  }
}

template <std::size_t M, class Flux>
std::array<double, M> numerical_flux(const std::array<double, M>& u_minus, const std::array<double, M>& u_plus,
                                     double a, Flux&& flux) {
  const auto fm = flux(u_minus);
  const auto fp = flux(u_plus);
  std::array<double, M> h;
  for (std::size_t c = 0; c < M; ++c) h[c] = 0.5 * (fp[c] + fm[c]) - 0.5 * a * (u_plus[c] - u_minus[c]);
  return h;
}

namespace detail {

template <std::size_t M>
void require_finite(const Field1D<M>& f, const char* where) {
  const int g = f.ghost_width();
  for (int j = -g; j < f.n_cells() + g; ++j)
    for (std::size_t c = 0; c < M; ++c)
      if (!std::isfinite(f(c, j))) throw NonFiniteState(where, j);
}

inline void require_finite(const Field2D& f, const char* where, int reach) {
  for (int j = -reach; j < f.ny() + reach; ++j)
    for (int i = -reach; i < f.nx() + reach; ++i)
      if (!std::isfinite(f(i, j))) throw NonFiniteState(where, i, j);
}

}  // namespace detail

/// Right-hand side of the 1D scheme on interior cells; ghosts must be filled.
/// Output ghosts are zero.
template <std::size_t M>
Field1D<M> rhs_1d(const Field1D<M>& field, const FluxModel<M>& model, const CwenoParams& params) {
  detail::require_finite(field, "rhs_1d input");
  const int n = field.n_cells();
  const double dx = field.grid().dx();
  const InterfaceStates<M> s = interface_values_1d(field, params);

  std::vector<std::array<double, M>> h(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double a = local_speed(s.minus[k], s.plus[k], model.wavespeed_x, model.speed_policy);
    h[k] = numerical_flux(s.minus[k], s.plus[k], a, model.flux_x);
  }

  Field1D<M> rhs(field.grid());
  for (int j = 0; j < n; ++j)
    for (std::size_t c = 0; c < M; ++c) rhs(c, j) = -(h[j + 1][c] - h[j][c]) / dx;

  if (model.has_dissipation()) {
    if constexpr (M != 1) {
      throw std::logic_error("rhs_1d: dissipation is supported for scalar laws only");
    } else {
      for (int j = 0; j < n; ++j) {
        const std::array<double, 5> window{s.center(j - 2)[0], s.center(j - 1)[0], s.center(j)[0],
                                           s.center(j + 1)[0], s.center(j + 2)[0]};
        rhs(0, j) += diffusion_term_1d(std::span<const double, 5>(window), model.dissipation, dx);
      }
    }
  }

  for (int j = 0; j < n; ++j)
    for (std::size_t c = 0; c < M; ++c)
      if (!std::isfinite(rhs(c, j))) throw NonFiniteState("rhs_1d output", j);
  return rhs;
}

/// Shared 2D assembly. `flux_x(k, j, u_minus, u_plus)` returns the numerical
/// flux on the left face of cell (k, j), `flux_y(i, k, ...)` on the bottom
/// face of cell (i, k). Adds `viscosity` times the fourth-order Laplacian of
/// the reconstructed point values when positive. Ghosts must be filled.
template <class FluxX, class FluxY>
Field2D assemble_rhs_2d(const Field2D& field, const CwenoParams& params, FluxX&& flux_x, FluxY&& flux_y,
                        double viscosity) {
  detail::require_finite(field, "rhs_2d input", field.ghost_width());
  const int nx = field.nx();
  const int ny = field.ny();
  const double dx = field.grid().dx();
  const double dy = field.grid().dy();

  const InterfaceStates2D sx = interface_values_2d(field, Axis::X, params);
  const InterfaceStates2D sy = interface_values_2d(field, Axis::Y, params);

  std::vector<double> hx(sx.minus.size());
  for (int j = 0; j < ny; ++j)
    for (int k = 0; k <= nx; ++k) hx[sx.index(k, j)] = flux_x(k, j, sx.minus_at(k, j), sx.plus_at(k, j));
  std::vector<double> hy(sy.minus.size());
  for (int k = 0; k <= ny; ++k)
    for (int i = 0; i < nx; ++i) hy[sy.index(i, k)] = flux_y(i, k, sy.minus_at(i, k), sy.plus_at(i, k));

  Field2D rhs(field.grid());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      rhs(i, j) = -(hx[sx.index(i + 1, j)] - hx[sx.index(i, j)]) / dx -
                  (hy[sy.index(i, j + 1)] - hy[sy.index(i, j)]) / dy;

  if (viscosity > 0.0) {
    const Field2D lap = laplacian_4th_2d(point_values_2d(field, params));
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) rhs(i, j) += viscosity * lap(i, j);
  }

  detail::require_finite(rhs, "rhs_2d output", 0);
  return rhs;
}

/// Right-hand side of the 2D scheme for a scalar law u_t + f(u)_x + g(u)_y = nu Lap u.
inline Field2D rhs_2d(const Field2D& field, const FluxModel<1>& model, const CwenoParams& params) {
  using S = std::array<double, 1>;
  const auto hx = [&](int, int, double um, double up) {
    const S m{um}, p{up};
    const double a = local_speed(m, p, model.wavespeed_x, model.speed_policy);
    return numerical_flux(m, p, a, model.flux_x)[0];
  };
  const auto hy = [&](int, int, double um, double up) {
    const S m{um}, p{up};
    const double a = local_speed(m, p, model.wavespeed_y, model.speed_policy);
    return numerical_flux(m, p, a, model.flux_y)[0];
  };
  return assemble_rhs_2d(field, params, hx, hy, model.viscosity);
}

}  // namespace central

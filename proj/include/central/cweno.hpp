#pragma once

// Third-order central WENO reconstruction from cell averages.
//
// In each cell the reconstruction is a convex combination of two one-sided
// linear polynomials P_L, P_R and a centered parabola P_C:
//
//   P_j(x) = w_L P_L(x) + w_R P_R(x) + w_C P_C(x)
//          = A + B (x - x_j) + C/2 (x - x_j)^2
//
// P_C is fixed by requiring c_L P_L + c_R P_R + c_C P_C to equal the parabola
// that conserves the three neighboring averages, so every candidate (and hence
// P_j) conserves the average of cell j.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "central/core_grid.hpp"

namespace central {

struct CwenoParams {
  double epsilon = 1e-6;
  /// Real-valued so that non-integer exponents (0.6 for shock tubes) are expressible.
  double p_exponent = 2.0;
  double c_left = 0.25;
  double c_right = 0.25;

  double c_center() const noexcept { return 1.0 - c_left - c_right; }

  void validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("CwenoParams: epsilon must be positive");
    if (!(p_exponent >= 0.0)) throw std::invalid_argument("CwenoParams: p_exponent must be >= 0");
    if (c_left < 0.0 || c_right < 0.0) throw std::invalid_argument("CwenoParams: negative linear weight");
    if (!(c_left + c_right < 1.0)) throw std::invalid_argument("CwenoParams: c_left + c_right must be < 1");
    // Third order needs a symmetric pair.
    if (c_left != c_right) throw std::invalid_argument("CwenoParams: c_left and c_right must be equal");
  }
};

struct SmoothnessIndicators {
  double left = 0.0;
  double right = 0.0;
  double center = 0.0;
};

struct CwenoWeights {
  double left = 0.0;
  double right = 0.0;
  double center = 0.0;
};

/// P(x) = a + b (x - x_j) + c/2 (x - x_j)^2.
struct ParabolaCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double offset) const noexcept { return a + b * offset + 0.5 * c * offset * offset; }
  double average(double dx) const noexcept { return a + c * dx * dx / 24.0; }
};

/// Indicators from three consecutive averages; free of dx.
inline SmoothnessIndicators smoothness_indicators(double u_m1, double u_0, double u_p1) noexcept {
  const double d2 = u_p1 - 2.0 * u_0 + u_m1;
  const double d1 = u_p1 - u_m1;
  return {(u_0 - u_m1) * (u_0 - u_m1), (u_p1 - u_0) * (u_p1 - u_0),
          13.0 / 3.0 * d2 * d2 + 0.25 * d1 * d1};
}

inline CwenoWeights cweno_weights(const SmoothnessIndicators& is, const CwenoParams& params) noexcept {
  const double p = params.p_exponent;
  const auto alpha = [&](double c, double indicator) {
    return c * std::exp(-p * std::log(params.epsilon + indicator));
  };
  const double al = alpha(params.c_left, is.left);
  const double ar = alpha(params.c_right, is.right);
  const double ac = alpha(params.c_center(), is.center);
  const double sum = al + ar + ac;
  return {al / sum, ar / sum, ac / sum};
}

/// Reconstruct the cell-j parabola from (u_{j-1}, u_j, u_{j+1}).
///
/// `transverse_d2` is the second difference of the averages across the sweep
/// direction; it is zero in 1D and enters only the constant term of P_C in the
/// dimension-by-dimension 2D recipe.
inline ParabolaCoeffs reconstruct_cell(double u_m1, double u_0, double u_p1, double dx,
                                       const CwenoParams& params, double transverse_d2 = 0.0) noexcept {
  const CwenoWeights w = cweno_weights(smoothness_indicators(u_m1, u_0, u_p1), params);
  const double cl = params.c_left;
  const double cr = params.c_right;
  const double cc = params.c_center();

  const double d2 = u_p1 - 2.0 * u_0 + u_m1;
  const double slope_l = (u_0 - u_m1) / dx;
  const double slope_r = (u_p1 - u_0) / dx;
  const double slope_c = (u_p1 - u_m1) / (2.0 * dx);

  // P_C = (P_exact - c_L P_L - c_R P_R) / c_C; P_exact has point value
  // u_0 - (d2 + transverse_d2)/24, slope slope_c, curvature d2/dx^2.
  const double center_a = u_0 - (d2 + transverse_d2) / (24.0 * cc);
  const double center_b = (slope_c - cl * slope_l - cr * slope_r) / cc;
  const double center_c = d2 / (dx * dx * cc);

  return {(w.left + w.right) * u_0 + w.center * center_a,
          w.left * slope_l + w.right * slope_r + w.center * center_b, w.center * center_c};
}

/// Reconstructed values at every interface of a 1D field, plus the center
/// point values u_j = P_j(x_j) needed by the diffusion stencils.
///
/// Interface k is the left face of cell k, k = 0..n. `minus[k]` comes from
/// cell k-1, `plus[k]` from cell k. Center values are stored for cells
/// [-2, n+2).
template <std::size_t M>
struct InterfaceStates {
  using State = std::array<double, M>;

  std::vector<State> minus;
  std::vector<State> plus;
  std::vector<State> centers;

  static constexpr int kCenterPad = 2;

  const State& center(int j) const noexcept { return centers[static_cast<std::size_t>(j + kCenterPad)]; }
};

/// Componentwise reconstruction; ghosts must be filled.
template <std::size_t M>
InterfaceStates<M> interface_values_1d(const Field1D<M>& field, const CwenoParams& params) {
  const int n = field.n_cells();
  const double dx = field.grid().dx();
  constexpr int pad = InterfaceStates<M>::kCenterPad;

  InterfaceStates<M> out;
  out.minus.resize(n + 1);
  out.plus.resize(n + 1);
  out.centers.resize(n + 2 * pad);

  for (std::size_t c = 0; c < M; ++c) {
    for (int j = -pad; j < n + pad; ++j) {
      const ParabolaCoeffs p = reconstruct_cell(field(c, j - 1), field(c, j), field(c, j + 1), dx, params);
      out.centers[j + pad][c] = p.a;
      if (j >= -1 && j < n) out.minus[j + 1][c] = p(0.5 * dx);
      if (j >= 0 && j <= n) out.plus[j][c] = p(-0.5 * dx);
    }
  }
  return out;
}

/// Interface values of a 2D scalar field along one axis.
///
/// For Axis::X, face (k, j) is the left face of cell (k, j), k = 0..nx, and
/// arrays are (nx+1) x ny, x fastest. Axis::Y is the transpose:
/// face (i, k) is the bottom face of cell (i, k), arrays nx x (ny+1).
struct InterfaceStates2D {
  Axis axis = Axis::X;
  int faces_x = 0;
  int faces_y = 0;
  std::vector<double> minus;
  std::vector<double> plus;

  std::size_t index(int i, int j) const noexcept { return static_cast<std::size_t>(j) * faces_x + i; }
  double minus_at(int i, int j) const noexcept { return minus[index(i, j)]; }
  double plus_at(int i, int j) const noexcept { return plus[index(i, j)]; }
};

namespace detail {

inline ParabolaCoeffs reconstruct_2d(const Field2D& f, int i, int j, Axis axis, double h,
                                     const CwenoParams& params) noexcept {
  if (axis == Axis::X) {
    const double tr = f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1);
    return reconstruct_cell(f(i - 1, j), f(i, j), f(i + 1, j), h, params, tr);
  }
  const double tr = f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j);
  return reconstruct_cell(f(i, j - 1), f(i, j), f(i, j + 1), h, params, tr);
}

}  // namespace detail

/// Dimension-by-dimension reconstruction: the 1D recipe along `axis`, with the
/// centered parabola's constant term also correcting for the transverse second
/// difference. Weights use the along-axis indicators only. Ghosts must be filled.
inline InterfaceStates2D interface_values_2d(const Field2D& field, Axis axis, const CwenoParams& params) {
  const int nx = field.nx();
  const int ny = field.ny();
  InterfaceStates2D out;
  out.axis = axis;
  out.faces_x = axis == Axis::X ? nx + 1 : nx;
  out.faces_y = axis == Axis::X ? ny : ny + 1;
  out.minus.assign(static_cast<std::size_t>(out.faces_x) * out.faces_y, 0.0);
  out.plus.assign(out.minus.size(), 0.0);

  if (axis == Axis::X) {
    const double h = field.grid().dx();
    for (int j = 0; j < ny; ++j) {
      for (int i = -1; i <= nx; ++i) {
        const ParabolaCoeffs p = detail::reconstruct_2d(field, i, j, axis, h, params);
        if (i < nx) out.minus[out.index(i + 1, j)] = p(0.5 * h);
        if (i >= 0) out.plus[out.index(i, j)] = p(-0.5 * h);
      }
    }
  } else {
    const double h = field.grid().dy();
    for (int j = -1; j <= ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const ParabolaCoeffs p = detail::reconstruct_2d(field, i, j, axis, h, params);
        if (j < ny) out.minus[out.index(i, j + 1)] = p(0.5 * h);
        if (j >= 0) out.plus[out.index(i, j)] = p(-0.5 * h);
      }
    }
  }
  return out;
}

/// Point values at cell centers from 2D averages: the x-sweep parabola of the
/// dimension-by-dimension recipe evaluated at x_i. Filled on interior cells and
/// two ghost layers (the reach of the fourth-order stencils); needs all three
/// ghost layers of `averages` filled, corners included.
inline Field2D point_values_2d(const Field2D& averages, const CwenoParams& params) {
  Field2D out(averages.grid());
  const int pad = InterfaceStates<1>::kCenterPad;
  const double h = averages.grid().dx();
  for (int j = -pad; j < averages.ny() + pad; ++j)
    for (int i = -pad; i < averages.nx() + pad; ++i)
      out(i, j) = detail::reconstruct_2d(averages, i, j, Axis::X, h, params).a;
  return out;
}

}  // namespace central

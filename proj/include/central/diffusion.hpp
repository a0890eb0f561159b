#pragma once

// Fourth-order central approximations of dissipation terms.

#include <array>
#include <span>

#include "central/core_grid.hpp"

namespace central {

/// Slopes at the four neighbors of x_j, each a fourth-order one-sided
/// difference on the five-point window centered at j.
struct DerivativeQuad {
  double at_p2 = 0.0;  // (u_x)_{j+2,j}
  double at_p1 = 0.0;  // (u_x)_{j+1,j}
  double at_m1 = 0.0;  // (u_x)_{j-1,j}
  double at_m2 = 0.0;  // (u_x)_{j-2,j}
};

/// `u` holds u_{j-2}, ..., u_{j+2}.
inline DerivativeQuad one_sided_derivatives(std::span<const double, 5> u, double dx) noexcept {
  const double s = 1.0 / (12.0 * dx);
  const double um2 = u[0], um1 = u[1], u0 = u[2], up1 = u[3], up2 = u[4];
  return {
      s * (25.0 * up2 - 48.0 * up1 + 36.0 * u0 - 16.0 * um1 + 3.0 * um2),
      s * (3.0 * up2 + 10.0 * up1 - 18.0 * u0 + 6.0 * um1 - um2),
      s * (up2 - 6.0 * up1 + 18.0 * u0 - 10.0 * um1 - 3.0 * um2),
      s * (-3.0 * up2 + 16.0 * up1 - 36.0 * u0 + 48.0 * um1 - 25.0 * um2),
  };
}

/// Fourth-order approximation of d/dx Q(u, u_x) at x_j from reconstructed
/// point values u_{j-2..j+2} (not raw averages).
template <class Dissipation>
double diffusion_term_1d(std::span<const double, 5> u, Dissipation&& q, double dx) {
  const DerivativeQuad d = one_sided_derivatives(u, dx);
  return (-q(u[4], d.at_p2) + 8.0 * q(u[3], d.at_p1) - 8.0 * q(u[1], d.at_m1) + q(u[0], d.at_m2)) /
         (12.0 * dx);
}

/// Fourth-order five-point-per-axis Laplacian of point values on interior
/// cells. Needs two ghost layers filled; output ghosts are zero.
inline Field2D laplacian_4th_2d(const Field2D& w) {
  Field2D out(w.grid());
  const double sx = 1.0 / (12.0 * w.grid().dx() * w.grid().dx());
  const double sy = 1.0 / (12.0 * w.grid().dy() * w.grid().dy());
  for (int j = 0; j < w.ny(); ++j) {
    for (int i = 0; i < w.nx(); ++i) {
      const double c = 30.0 * w(i, j);
      const double lx = -w(i + 2, j) + 16.0 * w(i + 1, j) - c + 16.0 * w(i - 1, j) - w(i - 2, j);
      const double ly = -w(i, j + 2) + 16.0 * w(i, j + 1) - c + 16.0 * w(i, j - 1) - w(i, j - 2);
      out(i, j) = sx * lx + sy * ly;
    }
  }
  return out;
}

}  // namespace central

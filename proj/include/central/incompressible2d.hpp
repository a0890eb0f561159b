#pragma once

// Vorticity / stream-function machinery for 2D periodic incompressible flow:
//
//   w_t + (u w)_x + (v w)_y = nu Lap w,   Lap psi = -w,   (u, v) = (psi_y, -psi_x)
//
// Velocities are recomputed from the vorticity on every right-hand-side call.

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <string>

#include "central/core_grid.hpp"
#include "central/cweno.hpp"
#include "central/diffusion.hpp"
#include "central/errors.hpp"
#include "central/models.hpp"
#include "central/semidiscrete.hpp"

namespace central {

/// Symbol of the five-point-per-axis fourth-order second difference at
/// angle theta, i.e. (-30 + 32 cos t - 2 cos 2t) / (12 h^2).
inline double second_difference_symbol(double theta, double h) noexcept {
  return (-30.0 + 32.0 * std::cos(theta) - 2.0 * std::cos(2.0 * theta)) / (12.0 * h * h);
}

/// Periodic solve of Lap_h psi = -w where Lap_h is the fourth-order cross
/// stencil (the operator of laplacian_4th_2d). Diagonal in the discrete
/// Fourier basis; the zero mode is fixed to zero, so psi has zero mean.
///
/// Holds FFTW plans and scratch buffers: one solver per thread.
class PoissonSolver {
 public:
  explicit PoissonSolver(const Grid2D& grid)
      : grid_(grid),
        nx_(grid.nx()),
        ny_(grid.ny()),
        nkx_(grid.nx() / 2 + 1),
        real_(static_cast<double*>(fftw_malloc(sizeof(double) * nx_ * ny_))),
        spec_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * nkx_ * ny_))),
        forward_(fftw_plan_dft_r2c_2d(ny_, nx_, real_.get(), spec_.get(), FFTW_ESTIMATE)),
        backward_(fftw_plan_dft_c2r_2d(ny_, nx_, spec_.get(), real_.get(), FFTW_ESTIMATE)),
        inverse_symbol_(static_cast<std::size_t>(nkx_) * ny_, 0.0) {
    if (!real_ || !spec_ || !forward_ || !backward_) throw std::runtime_error("PoissonSolver: FFTW setup failed");
    const double two_pi = 2.0 * std::numbers::pi;
    for (int ky = 0; ky < ny_; ++ky) {
      const double sy = second_difference_symbol(two_pi * ky / ny_, grid.dy());
      for (int kx = 0; kx < nkx_; ++kx) {
        const double sigma = second_difference_symbol(two_pi * kx / nx_, grid.dx()) + sy;
        inverse_symbol_[static_cast<std::size_t>(ky) * nkx_ + kx] = (kx == 0 && ky == 0) ? 0.0 : -1.0 / sigma;
      }
    }
  }

  PoissonSolver(const PoissonSolver&) = delete;
  PoissonSolver& operator=(const PoissonSolver&) = delete;
  PoissonSolver(PoissonSolver&&) = default;
  PoissonSolver& operator=(PoissonSolver&&) = default;

  const Grid2D& grid() const noexcept { return grid_; }

  /// Interior point values of w in, psi with periodic ghosts out. The mean of
  /// w is removed first; what remains must vanish to 1e-10 of max|w|.
  Field2D solve(const Field2D& omega_points) {
    double mean = 0.0;
    double peak = 0.0;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        mean += omega_points(i, j);
        peak = std::max(peak, std::abs(omega_points(i, j)));
      }
    mean /= static_cast<double>(nx_) * ny_;

    double residual_mean = 0.0;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        const double w = omega_points(i, j) - mean;
        real_.get()[static_cast<std::size_t>(j) * nx_ + i] = w;
        residual_mean += w;
      }
    residual_mean /= static_cast<double>(nx_) * ny_;
    if (!(std::abs(residual_mean) <= 1e-10 * std::max(1.0, peak)))
      throw ZeroMeanViolation("solve_stream_function: vorticity mean " + std::to_string(residual_mean) +
                              " after compatibility correction");

    fftw_execute(forward_.get());
    const double norm = 1.0 / (static_cast<double>(nx_) * ny_);
    for (std::size_t k = 0; k < inverse_symbol_.size(); ++k) {
      const double s = inverse_symbol_[k] * norm;
      spec_.get()[k][0] *= s;
      spec_.get()[k][1] *= s;
    }
    fftw_execute(backward_.get());

    Field2D psi(grid_);
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) psi(i, j) = real_.get()[static_cast<std::size_t>(j) * nx_ + i];
    apply_boundary(psi, BoundaryKind::Periodic);
    return psi;
  }

 private:
  struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
  };
  struct PlanDestroy {
    void operator()(fftw_plan p) const noexcept { fftw_destroy_plan(p); }
  };
  using Plan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDestroy>;

  Grid2D grid_;
  int nx_;
  int ny_;
  int nkx_;
  std::unique_ptr<double, FftwFree> real_;
  std::unique_ptr<fftw_complex, FftwFree> spec_;
  Plan forward_;
  Plan backward_;
  std::vector<double> inverse_symbol_;
};

inline Field2D solve_stream_function(const Field2D& omega_points) {
  PoissonSolver solver(omega_points.grid());
  return solver.solve(omega_points);
}

/// Cell-center velocities (periodic ghosts filled) and their face averages.
struct VelocityField {
  Field2D u;
  Field2D v;
  FaceVelocities faces;
};

/// Fourth-order face values: u on the left face of cell k from u_{k-2..k+1},
/// (-1, 9, 9, -1)/16; v likewise in y. Center ghosts must be filled.
inline void interface_velocities(VelocityField& vel) {
  const int nx = vel.u.nx();
  const int ny = vel.u.ny();
  vel.faces = FaceVelocities(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int k = 0; k <= nx; ++k)
      vel.faces.u(k, j) =
          (-vel.u(k + 1, j) + 9.0 * vel.u(k, j) + 9.0 * vel.u(k - 1, j) - vel.u(k - 2, j)) / 16.0;
  for (int k = 0; k <= ny; ++k)
    for (int i = 0; i < nx; ++i)
      vel.faces.v(i, k) =
          (-vel.v(i, k + 1) + 9.0 * vel.v(i, k) + 9.0 * vel.v(i, k - 1) - vel.v(i, k - 2)) / 16.0;
}

/// u = psi_y, v = -psi_x with fourth-order central differences; psi ghosts
/// (two layers) must be filled. Face values are filled as well.
inline VelocityField recover_velocities(const Field2D& psi) {
  VelocityField vel{Field2D(psi.grid()), Field2D(psi.grid()), {}};
  const double sx = 1.0 / (12.0 * psi.grid().dx());
  const double sy = 1.0 / (12.0 * psi.grid().dy());
  for (int j = 0; j < psi.ny(); ++j) {
    for (int i = 0; i < psi.nx(); ++i) {
      vel.u(i, j) = sy * (-psi(i, j + 2) + 8.0 * psi(i, j + 1) - 8.0 * psi(i, j - 1) + psi(i, j - 2));
      vel.v(i, j) = sx * (psi(i + 2, j) - 8.0 * psi(i + 1, j) + 8.0 * psi(i - 1, j) - psi(i - 2, j));
    }
  }
  apply_boundary(vel.u, BoundaryKind::Periodic);
  apply_boundary(vel.v, BoundaryKind::Periodic);
  interface_velocities(vel);
  return vel;
}

/// Fourth-order central divergence of center velocities on interior cells.
inline Field2D discrete_divergence(const VelocityField& vel) {
  Field2D div(vel.u.grid());
  const double sx = 1.0 / (12.0 * vel.u.grid().dx());
  const double sy = 1.0 / (12.0 * vel.u.grid().dy());
  for (int j = 0; j < div.ny(); ++j)
    for (int i = 0; i < div.nx(); ++i)
      div(i, j) =
          sx * (-vel.u(i + 2, j) + 8.0 * vel.u(i + 1, j) - 8.0 * vel.u(i - 1, j) + vel.u(i - 2, j)) +
          sy * (-vel.v(i, j + 2) + 8.0 * vel.v(i, j + 1) - 8.0 * vel.v(i, j - 1) + vel.v(i, j - 2));
  return div;
}

/// Right-hand side of the vorticity equation on a periodic grid.
class VorticitySolver {
 public:
  VorticitySolver(const Grid2D& grid, double nu, const CwenoParams& params = {})
      : poisson_(grid), nu_(nu), params_(params) {
    if (nu < 0.0) throw std::invalid_argument("VorticitySolver: negative viscosity");
  }

  double viscosity() const noexcept { return nu_; }
  const CwenoParams& params() const noexcept { return params_; }

  /// Velocities induced by the vorticity averages; ghosts must be filled.
  VelocityField velocities(const Field2D& omega_avgs) {
    const Field2D points = point_values_2d(omega_avgs, params_);
    return recover_velocities(poisson_.solve(points));
  }

  /// Ghosts of `omega_avgs` must be filled. When `vel_out` is given it
  /// receives the velocities used for the fluxes.
  Field2D rhs(const Field2D& omega_avgs, VelocityField* vel_out = nullptr) {
    detail::require_finite(omega_avgs, "vorticity_rhs input", omega_avgs.ghost_width());
    VelocityField vel = velocities(omega_avgs);
    const VorticityFlux flux = vorticity_model(vel.faces);
    Field2D out = assemble_rhs_2d(
        omega_avgs, params_, [&](int k, int j, double m, double p) { return flux.x(k, j, m, p); },
        [&](int i, int k, double m, double p) { return flux.y(i, k, m, p); }, nu_);
    if (vel_out) *vel_out = std::move(vel);
    return out;
  }

 private:
  PoissonSolver poisson_;
  double nu_;
  CwenoParams params_;
};

inline Field2D vorticity_rhs(const Field2D& omega_avgs, double nu, const CwenoParams& params = {}) {
  VorticitySolver solver(omega_avgs.grid(), nu, params);
  return solver.rhs(omega_avgs);
}

}  // namespace central

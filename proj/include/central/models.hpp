#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "central/errors.hpp"
#include "central/semidiscrete.hpp"

namespace central {

using Scalar = std::array<double, 1>;
using EulerConserved = std::array<double, 3>;

inline constexpr double kDefaultGamma = 1.4;

/// u_t + u_x = 0
inline FluxModel<1> advection_model() {
  FluxModel<1> m;
  m.flux_x = [](const Scalar& u) { return u; };
  m.wavespeed_x = [](const Scalar&) { return 1.0; };
  return m;
}

/// u_t + (u^2/2)_x = 0
inline FluxModel<1> burgers_model() {
  FluxModel<1> m;
  m.flux_x = [](const Scalar& u) { return Scalar{0.5 * u[0] * u[0]}; };
  m.wavespeed_x = [](const Scalar& u) { return std::abs(u[0]); };
  return m;
}

// ---- Euler equations of gas dynamics ---------------------------------------

/// Primitive variables of a conserved (rho, m, E) state.
struct EulerState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
  double gamma = kDefaultGamma;

  double sound_speed() const noexcept { return std::sqrt(gamma * p / rho); }

  /// Throws NonPhysicalState on rho <= 0 or p <= 0.
  static EulerState from_conserved(const EulerConserved& q, double gamma = kDefaultGamma) {
    const double rho = q[0];
    if (!(rho > 0.0)) throw NonPhysicalState("Euler state: non-positive density " + std::to_string(rho));
    const double u = q[1] / rho;
    const double p = (gamma - 1.0) * (q[2] - 0.5 * rho * u * u);
    if (!(p > 0.0)) throw NonPhysicalState("Euler state: non-positive pressure " + std::to_string(p));
    return {rho, u, p, gamma};
  }

  EulerConserved conserved() const noexcept {
    return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
  }
};

inline EulerConserved euler_flux(const EulerConserved& q, double gamma = kDefaultGamma) {
  const EulerState s = EulerState::from_conserved(q, gamma);
  return {q[1], q[1] * s.u + s.p, s.u * (q[2] + s.p)};
}

inline FluxModel<3> euler_model(double gamma = kDefaultGamma) {
  FluxModel<3> m;
  m.flux_x = [gamma](const EulerConserved& q) { return euler_flux(q, gamma); };
  m.wavespeed_x = [gamma](const EulerConserved& q) {
    const EulerState s = EulerState::from_conserved(q, gamma);
    return std::abs(s.u) + s.sound_speed();
  };
  return m;
}

// ---- Buckley-Leverett ------------------------------------------------------

struct BuckleyLeverettParams {
  double epsilon_diff = 0.01;
  bool gravity = false;
};

namespace buckley_leverett {

inline double mobility_ratio(double u) noexcept {
  const double d = u * u + (1.0 - u) * (1.0 - u);
  return u * u / d;
}

inline double mobility_ratio_derivative(double u) noexcept {
  const double d = u * u + (1.0 - u) * (1.0 - u);
  return 2.0 * u * (1.0 - u) / (d * d);
}

inline double flux(double u, bool gravity) noexcept {
  const double g = mobility_ratio(u);
  if (!gravity) return g;
  return g * (1.0 - 5.0 * (1.0 - u) * (1.0 - u));
}

inline double flux_derivative(double u, bool gravity) noexcept {
  const double gp = mobility_ratio_derivative(u);
  if (!gravity) return gp;
  const double h = 1.0 - 5.0 * (1.0 - u) * (1.0 - u);
  return gp * h + mobility_ratio(u) * 10.0 * (1.0 - u);
}

/// eps * nu(u) with nu(u) = 4u(1-u), clipped at zero outside [0, 1].
inline double diffusivity(double u, double epsilon) noexcept {
  return epsilon * std::max(0.0, 4.0 * u * (1.0 - u));
}

}  // namespace buckley_leverett

inline FluxModel<1> buckley_leverett_model(const BuckleyLeverettParams& params = {}) {
  FluxModel<1> m;
  const bool gravity = params.gravity;
  const double eps = params.epsilon_diff;
  m.flux_x = [gravity](const Scalar& u) { return Scalar{buckley_leverett::flux(u[0], gravity)}; };
  m.wavespeed_x = [gravity](const Scalar& u) {
    return std::abs(buckley_leverett::flux_derivative(u[0], gravity));
  };
  m.speed_policy = SpeedPolicy::SampleInterval;
  if (eps > 0.0) {
    m.dissipation = [eps](double u, double s) { return buckley_leverett::diffusivity(u, eps) * s; };
    m.diffusivity = [eps](double u) { return buckley_leverett::diffusivity(u, eps); };
  }
  return m;
}

// ---- Vorticity transport --------------------------------------------------

/// Velocities on cell faces: u on x-faces ((nx+1) x ny, face k is the left face
/// of cell k) and v on y-faces (nx x (ny+1), face k is the bottom face of row k).
/// Same layout as InterfaceStates2D.
struct FaceVelocities {
  int nx = 0;
  int ny = 0;
  std::vector<double> u_half;
  std::vector<double> v_half;

  FaceVelocities() = default;
  FaceVelocities(int nx_, int ny_)
      : nx(nx_), ny(ny_), u_half(static_cast<std::size_t>(nx_ + 1) * ny_), v_half(static_cast<std::size_t>(nx_) * (ny_ + 1)) {}

  double& u(int k, int j) noexcept { return u_half[static_cast<std::size_t>(j) * (nx + 1) + k]; }
  double u(int k, int j) const noexcept { return u_half[static_cast<std::size_t>(j) * (nx + 1) + k]; }
  double& v(int i, int k) noexcept { return v_half[static_cast<std::size_t>(k) * nx + i]; }
  double v(int i, int k) const noexcept { return v_half[static_cast<std::size_t>(k) * nx + i]; }
};

/// Global convection flux (u w, v w) with velocities frozen on the faces for
/// one right-hand-side evaluation. The velocity multiplies the mean of the
/// two reconstructed vorticities and the local speed is |velocity|.
class VorticityFlux {
 public:
  explicit VorticityFlux(const FaceVelocities& faces) : faces_(&faces) {}

  static double face_flux(double velocity, double w_minus, double w_plus) noexcept {
    return 0.5 * velocity * (w_plus + w_minus) - 0.5 * std::abs(velocity) * (w_plus - w_minus);
  }

  double x(int k, int j, double w_minus, double w_plus) const noexcept {
    return face_flux(faces_->u(k, j), w_minus, w_plus);
  }
  double y(int i, int k, double w_minus, double w_plus) const noexcept {
    return face_flux(faces_->v(i, k), w_minus, w_plus);
  }

 private:
  const FaceVelocities* faces_;
};

inline VorticityFlux vorticity_model(const FaceVelocities& faces) { return VorticityFlux(faces); }

}  // namespace central

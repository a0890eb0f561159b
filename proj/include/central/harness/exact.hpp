#pragma once

// Reference solutions for the validation experiments.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "central/errors.hpp"
#include "central/models.hpp"

namespace central::harness {

/// u_t + u_x = 0 with u(x, 0) = sin x.
inline double advection_exact(double x, double t) noexcept { return std::sin(x - t); }

/// Entropy solution of Burgers' equation with u(x, 0) = 0.5 + sin x before the
/// shock forms (t < 1): the root of u = 0.5 + sin(x - u t). The residual is
/// strictly increasing in u on [-0.5, 1.5] for t < 1, so safeguarded Newton
/// inside a shrinking bracket always converges.
inline double burgers_exact(double x, double t) {
  if (t >= 1.0) throw OutOfSmoothRegime("burgers_exact: solution is discontinuous for t >= 1");
  const auto residual = [&](double u) { return u - 0.5 - std::sin(x - u * t); };
  double lo = -0.5;
  double hi = 1.5;
  double u = 0.5 + std::sin(x);
  for (int it = 0; it < 200; ++it) {
    const double r = residual(u);
    if (r == 0.0) return u;
    (r > 0.0 ? hi : lo) = u;
    const double next = u - r / (1.0 + t * std::cos(x - u * t));
    const double prev = u;
    u = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    if (std::abs(u - prev) <= 1e-15 * std::max(1.0, std::abs(u))) return u;
  }
  return u;
}

/// Vorticity of the decaying Taylor-Green vortex u = -cos x sin y e^{-2 nu t},
/// v = sin x cos y e^{-2 nu t}.
inline double taylor_green_vorticity(double x, double y, double t, double nu) noexcept {
  return 2.0 * std::cos(x) * std::cos(y) * std::exp(-2.0 * nu * t);
}

// ---- Exact Riemann solver for the ideal-gas Euler equations ----------------

struct RiemannStar {
  double p = 0.0;
  double u = 0.0;
  double rho_left = 0.0;
  double rho_right = 0.0;
};

namespace detail {

/// Pressure function of one side and its derivative in p.
inline void side_pressure_function(double p, const EulerState& s, double& f, double& df) noexcept {
  const double g = s.gamma;
  if (p > s.p) {
    const double a = 2.0 / ((g + 1.0) * s.rho);
    const double b = (g - 1.0) / (g + 1.0) * s.p;
    const double q = std::sqrt(a / (p + b));
    f = (p - s.p) * q;
    df = q * (1.0 - 0.5 * (p - s.p) / (b + p));
  } else {
    const double c = s.sound_speed();
    const double r = std::pow(p / s.p, (g - 1.0) / (2.0 * g));
    f = 2.0 * c / (g - 1.0) * (r - 1.0);
    df =(1.0 / (s.rho * c)) * std::pow(p / s.p, -(g + 1.0) / (2.0 * g));
  }
}

inline double star_density(double p_star, const EulerState& s) noexcept {
  const double g = s.gamma;
  if (p_star > s.p) {
    const double r = (g - 1.0) / (g + 1.0);
    return s.rho * (p_star / s.p + r) / (r * p_star / s.p + 1.0);
  }
  return s.rho * std::pow(p_star / s.p, 1.0 / g);
}

}  // namespace detail

/// Star-region state from Newton on the pressure function, to 1e-12 relative.
inline RiemannStar riemann_star(const EulerState& left, const EulerState& right) {
  const double du = right.u - left.u;
  double p = std::max(1e-8, 0.5 * (left.p + right.p));
  for (int it = 0; it < 100; ++it) {
    double fl, dfl, fr, dfr;
    detail::side_pressure_function(p, left, fl, dfl);
    detail::side_pressure_function(p, right, fr, dfr);
    double next = p - (fl + fr + du) / (dfl + dfr);
    if (next <= 0.0) next = 0.5 * p;
    const bool done = std::abs(next - p) <= 1e-12 * 0.5 * (next + p);
    p = next;
    if (done) break;
  }
  double fl, dfl, fr, dfr;
  detail::side_pressure_function(p, left, fl, dfl);
  detail::side_pressure_function(p, right, fr, dfr);
  return {p, 0.5 * (left.u + right.u) + 0.5 * (fr - fl), detail::star_density(p, left),
          detail::star_density(p, right)};
}

/// Wave positions (as speeds x/t) of a left-rarefaction / right-shock solution.
struct SodWaves {
  double rarefaction_head = 0.0;
  double rarefaction_tail = 0.0;
  double contact = 0.0;
  double shock = 0.0;
};

inline SodWaves sod_waves(const EulerState& left, const EulerState& right, const RiemannStar& star) {
  const double g = left.gamma;
  const double c_star_left = left.sound_speed() * std::pow(star.p / left.p, (g - 1.0) / (2.0 * g));
  const double shock =
      right.u + right.sound_speed() * std::sqrt((g + 1.0) / (2.0 * g) * star.p / right.p + (g - 1.0) / (2.0 * g));
  return {left.u - left.sound_speed(), star.u - c_star_left, star.u, shock};
}

/// Self-similar solution sampled at speed xi = x / t. Primitive variables out.
inline EulerState riemann_sample(const EulerState& left, const EulerState& right, const RiemannStar& star,
                                 double xi) {
  const double g = left.gamma;
  if (xi <= star.u) {
    if (star.p > left.p) {
      const double sl = left.u - left.sound_speed() *
                                     std::sqrt((g + 1.0) / (2.0 * g) * star.p / left.p + (g - 1.0) / (2.0 * g));
      return xi <= sl ? left : EulerState{star.rho_left, star.u, star.p, g};
    }
    const double cl = left.sound_speed();
    const double head = left.u - cl;
    const double c_star = cl * std::pow(star.p / left.p, (g - 1.0) / (2.0 * g));
    const double tail = star.u - c_star;
    if (xi <= head) return left;
    if (xi >= tail) return {star.rho_left, star.u, star.p, g};
    const double c = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * (left.u - xi));
    const double u = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * left.u + xi);
    const double rho = left.rho * std::pow(c / cl, 2.0 / (g - 1.0));
    const double p = left.p * std::pow(c / cl, 2.0 * g / (g - 1.0));
    return {rho, u, p, g};
  }
  if (star.p > right.p) {
    const double sr = right.u + right.sound_speed() *
                                    std::sqrt((g + 1.0) / (2.0 * g) * star.p / right.p + (g - 1.0) / (2.0 * g));
    return xi >= sr ? right : EulerState{star.rho_right, star.u, star.p, g};
  }
  const double cr = right.sound_speed();
  const double head = right.u + cr;
  const double c_star = cr * std::pow(star.p / right.p, (g - 1.0) / (2.0 * g));
  const double tail = star.u + c_star;
  if (xi >= head) return right;
  if (xi <= tail) return {star.rho_right, star.u, star.p, g};
  const double c = 2.0 / (g + 1.0) * (cr - 0.5 * (g - 1.0) * (right.u - xi));
  const double u = 2.0 / (g + 1.0) * (-cr + 0.5 * (g - 1.0) * right.u + xi);
  const double rho = right.rho * std::pow(c / cr, 2.0 / (g - 1.0));
  const double p = right.p * std::pow(c / cr, 2.0 * g / (g - 1.0));
  return {rho, u, p, g};
}

inline const EulerState kSodLeft{1.0, 0.0, 1.0, kDefaultGamma};
inline const EulerState kSodRight{0.125, 0.0, 0.1, kDefaultGamma};

/// Exact Sod shock-tube solution with the diaphragm at x = 0.
inline EulerState sod_reference(double x, double t) {
  if (!(t > 0.0)) return x < 0.0 ? kSodLeft : kSodRight;
  static const RiemannStar star = riemann_star(kSodLeft, kSodRight);
  return riemann_sample(kSodLeft, kSodRight, star, x / t);
}

}  // namespace central::harness

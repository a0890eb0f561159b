#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "central/models.hpp"

using namespace central;

TEST(Advection, Basics) {
  const auto m = advection_model();
  EXPECT_EQ(m.flux_x(Scalar{0.0})[0], 0.0);
  EXPECT_EQ(m.flux_x(Scalar{2.5})[0], 2.5);
  EXPECT_EQ(m.wavespeed_x(Scalar{-7.0}), 1.0);
  EXPECT_FALSE(m.has_dissipation());
}

TEST(Burgers, Basics) {
  const auto m = burgers_model();
  EXPECT_EQ(m.flux_x(Scalar{2.0})[0], 2.0);
  EXPECT_EQ(m.wavespeed_x(Scalar{-3.0}), 3.0);
}

TEST(Euler, SodStates) {
  const auto fl = euler_flux({1.0, 0.0, 2.5});
  EXPECT_NEAR(fl[0], 0.0, 1e-15);
  EXPECT_NEAR(fl[1], 1.0, 1e-14);
  EXPECT_NEAR(fl[2], 0.0, 1e-15);
  const auto fr = euler_flux({0.125, 0.0, 0.25});
  EXPECT_NEAR(fr[1], 0.1, 1e-14);
  EXPECT_NEAR(euler_model().wavespeed_x({1.0, 0.0, 2.5}), 1.1832159566199232, 1e-14);
}

TEST(Euler, PrimitiveRoundTrip) {
  const EulerState s{0.7, -0.4, 2.2};
  const EulerState r = EulerState::from_conserved(s.conserved());
  EXPECT_NEAR(r.rho, s.rho, 1e-15);
  EXPECT_NEAR(r.u, s.u, 1e-15);
  EXPECT_NEAR(r.p, s.p, 1e-14);
}

TEST(Euler, RejectsNonPhysical) {
  EXPECT_THROW(EulerState::from_conserved({-1.0, 0.0, 1.0}), NonPhysicalState);
  EXPECT_THROW(EulerState::from_conserved({1.0, 2.0, 1.0}), NonPhysicalState);
}

TEST(Euler, SpectralRadiusMatchesJacobian) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> d(0.1, 2.0), v(-2.0, 2.0);
  const auto m = euler_model();
  for (int t = 0; t < 20; ++t) {
    const EulerConserved q = EulerState{d(rng), v(rng), d(rng)}.conserved();
    Eigen::Matrix3d jac;
    for (int c = 0; c < 3; ++c) {
      const double h = 1e-6 * std::max(1.0, std::abs(q[c]));
      EulerConserved qp = q, qm = q;
      qp[c] += h;
      qm[c] -= h;
      const auto fp = euler_flux(qp), fm = euler_flux(qm);
      for (int r = 0; r < 3; ++r) jac(r, c) = (fp[r] - fm[r]) / (2 * h);
    }
    const double rho = jac.eigenvalues().cwiseAbs().maxCoeff();
    const double a = m.wavespeed_x(q);
    EXPECT_NEAR(rho, a, 1e-6 * a);
  }
}

TEST(BuckleyLeverett, FluxValues) {
  using namespace buckley_leverett;
  EXPECT_EQ(flux(0.0, false), 0.0);
  EXPECT_EQ(flux(1.0, false), 1.0);
  EXPECT_NEAR(flux(0.5, false), 0.5, 1e-15);
  EXPECT_EQ(flux(1.0, true), 1.0);
  EXPECT_EQ(flux(0.0, true), 0.0);
}

TEST(BuckleyLeverett, AnalyticDerivative) {
  using namespace buckley_leverett;
  for (bool g : {false, true})
    for (double u = 0.0; u <= 1.0; u += 0.05) {
      const double h = 1e-6;
      const double fd = (flux(u + h, g) - flux(u - h, g)) / (2 * h);
      EXPECT_NEAR(flux_derivative(u, g), fd, 1e-7) << u << " " << g;
    }
}

TEST(BuckleyLeverett, DissipationDegenerateAtEnds) {
  const auto m = buckley_leverett_model();
  ASSERT_TRUE(m.has_dissipation());
  for (double s : {-3.0, 0.0, 0.5, 10.0}) {
    EXPECT_EQ(m.dissipation(0.0, s), 0.0);
    EXPECT_EQ(m.dissipation(1.0, s), 0.0);
  }
  EXPECT_NEAR(m.dissipation(0.5, 2.0), 0.02, 1e-15);
  EXPECT_NEAR(m.diffusivity(0.5), 0.01, 1e-15);
  EXPECT_EQ(m.diffusivity(1.2), 0.0);
}

TEST(Vorticity, FaceFluxExamples) {
  EXPECT_EQ(VorticityFlux::face_flux(1.5, 2.0, 2.0), 3.0);
  EXPECT_EQ(VorticityFlux::face_flux(0.0, 1.0, -4.0), 0.0);
  EXPECT_EQ(VorticityFlux::face_flux(2.0, 1.0, 0.0), 2.0);
  EXPECT_EQ(VorticityFlux::face_flux(-2.0, 1.0, 0.5), -1.0);
}

TEST(Vorticity, UsesFrozenFaceVelocities) {
  FaceVelocities f(2, 2);
  f.u(1, 0) = 3.0;
  f.v(1, 2) = -1.0;
  const VorticityFlux flux = vorticity_model(f);
  EXPECT_EQ(flux.x(1, 0, 1.0, 1.0), 3.0);
  EXPECT_EQ(flux.y(1, 2, 2.0, 4.0), -4.0);
  EXPECT_EQ(flux.x(0, 0, 1.0, 5.0), 0.0);
}

TEST(Models, WavespeedsNonNegative) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> d(-2, 2), pos(0.1, 2);
  const auto bl = buckley_leverett_model();
  BuckleyLeverettParams gp;
  gp.gravity = true;
  const auto blg = buckley_leverett_model(gp);
  for (int t = 0; t < 100; ++t) {
    const Scalar u{d(rng)};
    EXPECT_GE(advection_model().wavespeed_x(u), 0.0);
    EXPECT_GE(burgers_model().wavespeed_x(u), 0.0);
    EXPECT_GE(bl.wavespeed_x(u), 0.0);
    EXPECT_GE(blg.wavespeed_x(u), 0.0);
    EXPECT_GE(euler_model().wavespeed_x(EulerState{pos(rng), d(rng), pos(rng)}.conserved()), 0.0);
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "central/models.hpp"
#include "central/time_integration.hpp"
#include "oracles.hpp"

using namespace central;

namespace {

Field1D<1> sine_averages(int n) {
  const Grid1D g = Grid1D::uniform(0.0, 2 * M_PI, n);
  Field1D<1> u(g);
  u.fill([&](int j) {
    return Scalar{oracle::average([](double x) { return std::sin(x); }, g.left_face(j), g.left_face(j + 1))};
  });
  return apply_boundary(u, BoundaryKind::Periodic);
}

TimeController controller(double t_end) {
  TimeController c;
  c.t_end = t_end;
  return c;
}

}  // namespace

TEST(ComputeDt, AdvectionCfl) {
  Field1D<1> u(Grid1D::uniform(0.0, 1.0, 10));
  u.fill([](int j) { return Scalar{double(j)}; });
  apply_boundary(u, BoundaryKind::Periodic);
  EXPECT_NEAR(compute_dt(u, advection_model(), CwenoParams{}, controller(10.0)), 0.045, 1e-15);
}

TEST(ComputeDt, NothingPropagates) {
  Field1D<1> u(Grid1D::uniform(0.0, 1.0, 10));
  apply_boundary(u, BoundaryKind::Periodic);
  TimeController c = controller(1.0);
  c.t_current = 0.7;
  EXPECT_NEAR(compute_dt(u, burgers_model(), CwenoParams{}, c), 0.3, 1e-15);
}

TEST(ComputeDt, ParabolicBound) {
  Field1D<1> u(Grid1D::uniform(0.0, 1.0, 100));
  u.fill([](int) { return Scalar{0.5}; });
  apply_boundary(u, BoundaryKind::OutflowExtrapolate);
  // f'(1/2) = 2, so dt_hyp = 0.45 * 0.01 / 2 = 2.25e-3 > dt_par = 2e-3.
  EXPECT_NEAR(compute_dt(u, buckley_leverett_model(), CwenoParams{}, controller(1.0)), 2e-3, 1e-15);
  EXPECT_NEAR(step_size(0.0, 0.01, 0.01, 1, controller(1.0)), 2e-3, 1e-15);
  EXPECT_NEAR(step_size(0.0, 0.01, 0.01, 2, controller(1.0)), 1e-3, 1e-15);
}

TEST(ComputeDt, RejectsNonFinite) {
  Field1D<1> u(Grid1D::uniform(0.0, 1.0, 10));
  u[3] = NAN;
  apply_boundary(u, BoundaryKind::Periodic);
  EXPECT_THROW(compute_dt(u, burgers_model(), CwenoParams{}, controller(1.0)), NonFiniteState);
}

TEST(SspRk3, ZeroRhs) {
  EXPECT_EQ(ssp_rk3_step(2.5, [](double) { return 0.0; }, 0.3), 2.5);
}

TEST(SspRk3, ConstantRhs) {
  EXPECT_NEAR(ssp_rk3_step(1.0, [](double) { return 1.0; }, 0.37), 1.37, 1e-15);
}

TEST(SspRk3, LinearAmplificationFactor) {
  for (double lambda : {0.1, 0.5, 1.0}) {
    const double expected = 1.0 - lambda + lambda * lambda / 2.0 - lambda * lambda * lambda / 6.0;
    EXPECT_NEAR(ssp_rk3_step(1.0, [](double u) { return -u; }, lambda), expected, 1e-15);
  }
  EXPECT_NEAR(ssp_rk3_step(1.0, [](double u) { return -u; }, 0.1), 0.9048333333333333, 1e-15);
}

TEST(SspRk3, TemporalOrder) {
  // One-step error of u' = -u is O(dt^4); the global order is one less.
  std::vector<double> inv, err;
  for (double dt : {0.1, 0.05, 0.025}) {
    inv.push_back(1.0 / dt);
    err.push_back(std::abs(ssp_rk3_step(1.0, [](double u) { return -u; }, dt) - std::exp(-dt)));
  }
  EXPECT_GE(oracle::loglog_slope(inv, err), 2.9);

  std::vector<double> global;
  for (int steps : {10, 20, 40}) {
    double u = 1.0;
    for (int k = 0; k < steps; ++k) u = ssp_rk3_step(u, [](double v) { return -v; }, 1.0 / steps);
    global.push_back(std::abs(u - std::exp(-1.0)));
  }
  EXPECT_GE(oracle::loglog_slope({10, 20, 40}, global), 2.9);
}

TEST(SspRk3, NonlinearOdeOrder) {
  // u' = u^2, u(0) = 1: u(t) = 1 / (1 - t).
  std::vector<double> err;
  for (int steps : {20, 40, 80}) {
    double u = 1.0;
    for (int k = 0; k < steps; ++k) u = ssp_rk3_step(u, [](double v) { return v * v; }, 0.5 / steps);
    err.push_back(std::abs(u - 2.0));
  }
  EXPECT_GE(oracle::loglog_slope({20, 40, 80}, err), 2.9);
}

TEST(IntegrateTo, NoStepsWhenAtEnd) {
  Field1D<1> u = sine_averages(20);
  TimeController c = controller(0.0);
  int steps = 0;
  const auto out = integrate_to(u, advection_model(), CwenoParams{}, BoundaryKind::Periodic, c,
                                [&](double, const Field1D<1>&) { ++steps; });
  EXPECT_EQ(steps, 0);
  EXPECT_EQ(out.raw(), u.raw());
}

TEST(IntegrateTo, LandsExactlyOnEndTime) {
  double last = -1.0;
  TimeController c = controller(0.7);
  const double u = integrate_to(
      1.0, [](double v) { return -v; }, [](double, const TimeController&) { return 0.3; }, c,
      [&](double t, double) { last = t; });
  EXPECT_EQ(last, 0.7);
  EXPECT_EQ(c.t_current, 0.7);
  EXPECT_NEAR(u, std::exp(-0.7), 1e-3);
}

TEST(IntegrateTo, RejectsNonPositiveStep) {
  TimeController c = controller(1.0);
  EXPECT_THROW(integrate_to(
                   1.0, [](double) { return 0.0; }, [](double, const TimeController&) { return 0.0; }, c),
               NonFiniteState);
}

TEST(IntegrateTo, RejectsBackwardInterval) {
  TimeController c = controller(1.0);
  c.t_current = 2.0;
  EXPECT_THROW(integrate_to(
                   1.0, [](double) { return 0.0; }, [](double, const TimeController&) { return 0.1; }, c),
               std::invalid_argument);
}

TEST(IntegrateTo, AdvectionOnePeriod) {
  const Field1D<1> u0 = sine_averages(80);
  TimeController c = controller(2 * M_PI);
  const auto u = integrate_to(u0, advection_model(), CwenoParams{}, BoundaryKind::Periodic, c);
  double l1 = 0.0;
  for (int j = 0; j < 80; ++j) l1 += std::abs(u[j] - u0[j]);
  l1 *= u0.grid().dx();
  // Table-1 scale at N=80 is ~1e-2 per unit time.
  EXPECT_LT(l1, 0.1);
  EXPECT_GT(l1, 0.0);
}

TEST(IntegrateTo, ConservesMass) {
  for (const auto& m : {advection_model(), burgers_model()}) {
    Field1D<1> u0 = sine_averages(64);
    for (int j = 0; j < 64; ++j) u0[j] += 0.5;
    apply_boundary(u0, BoundaryKind::Periodic);
    TimeController c = controller(1.5);
    const auto u = integrate_to(u0, m, CwenoParams{}, BoundaryKind::Periodic, c);
    const auto i0 = u0.interior(), i1 = u.interior();
    const double m0 = std::accumulate(i0.begin(), i0.end(), 0.0);
    const double m1 = std::accumulate(i1.begin(), i1.end(), 0.0);
    EXPECT_LE(std::abs(m1 - m0), 1e-11 * std::abs(m0));
  }
  // With a linear dissipation flux as well.
  FluxModel<1> heat = burgers_model();
  heat.dissipation = [](double, double s) { return 0.01 * s; };
  heat.diffusivity = [](double) { return 0.01; };
  Field1D<1> u0(Grid1D::uniform(0.0, 1.0, 50));
  u0.fill([](int j) { return Scalar{0.5 + 0.4 * std::sin(2 * M_PI * (j + 0.5) / 50) + (j == 7 ? 0.3 : 0.0)}; });
  apply_boundary(u0, BoundaryKind::Periodic);
  TimeController c = controller(0.05);
  const auto u = integrate_to(u0, heat, CwenoParams{}, BoundaryKind::Periodic, c);
  const auto i0 = u0.interior(), i1 = u.interior();
  const double m0 = std::accumulate(i0.begin(), i0.end(), 0.0);
  const double m1 = std::accumulate(i1.begin(), i1.end(), 0.0);
  EXPECT_LE(std::abs(m1 - m0), 1e-11 * std::abs(m0));
}

TEST(TimeController, Validation) {
  TimeController c = controller(1.0);
  EXPECT_NO_THROW(c.validate());
  c.cfl_hyperbolic = 1.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = controller(1.0);
  c.parabolic_safety = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

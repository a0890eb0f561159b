#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "central/core_grid.hpp"

using namespace central;

TEST(Grid1D, Geometry) {
  const Grid1D g = Grid1D::uniform(0.0, 2.0, 4);
  EXPECT_DOUBLE_EQ(g.dx(), 0.5);
  EXPECT_DOUBLE_EQ(g.center(0), 0.25);
  EXPECT_DOUBLE_EQ(g.center(3), 1.75);
  EXPECT_DOUBLE_EQ(g.left_face(2), 1.0);
  EXPECT_EQ(g.padded(), 4 + 2 * kGhostWidth);
}

TEST(Grid1D, RejectsBadInput) {
  EXPECT_THROW(Grid1D::uniform(1.0, 1.0, 4), std::invalid_argument);
  EXPECT_THROW(Grid1D::uniform(0.0, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(Grid1D::uniform(0.0, 1.0, 4, 1), std::invalid_argument);
}

TEST(Boundary, PeriodicGhosts) {
  Field1D<1> f(Grid1D::uniform(0.0, 1.0, 4));
  f.fill([](int j) { return std::array<double, 1>{double(j + 1)}; });
  apply_boundary(f, BoundaryKind::Periodic);
  EXPECT_EQ(f[-1], 4.0);
  EXPECT_EQ(f[-2], 3.0);
  EXPECT_EQ(f[-3], 2.0);
  EXPECT_EQ(f[4], 1.0);
  EXPECT_EQ(f[5], 2.0);
  EXPECT_EQ(f[6], 3.0);
}

TEST(Boundary, OutflowGhosts) {
  Field1D<1> f(Grid1D::uniform(0.0, 1.0, 4));
  f.fill([](int j) { return std::array<double, 1>{double(j + 1)}; });
  apply_boundary(f, BoundaryKind::OutflowExtrapolate);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(f[-k], 1.0);
    EXPECT_EQ(f[3 + k], 4.0);
  }
}

TEST(Boundary, IdempotentAndInteriorUntouched) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-1, 1);
  for (auto kind : {BoundaryKind::Periodic, BoundaryKind::OutflowExtrapolate}) {
    Field1D<3> f(Grid1D::uniform(0.0, 1.0, 9));
    f.fill([&](int) { return std::array<double, 3>{d(rng), d(rng), d(rng)}; });
    Field1D<3> once = f;
    apply_boundary(once, kind);
    for (int c = 0; c < 3; ++c)
      for (int j = 0; j < 9; ++j) EXPECT_EQ(once(c, j), f(c, j));
    Field1D<3> twice = once;
    apply_boundary(twice, kind);
    EXPECT_EQ(once.raw(), twice.raw());
  }
}

TEST(Boundary, TwoDimensionalCorners) {
  Field2D w(Grid2D::uniform(0.0, 1.0, 5, 0.0, 1.0, 4));
  w.fill([](int i, int j) { return 10.0 * i + j; });
  apply_boundary(w, BoundaryKind::Periodic);
  EXPECT_EQ(w(-1, -1), w(4, 3));
  EXPECT_EQ(w(5, 4), w(0, 0));
  EXPECT_EQ(w(-3, 6), w(2, 2));
  apply_boundary(w, BoundaryKind::OutflowExtrapolate);
  EXPECT_EQ(w(-2, -2), w(0, 0));
  EXPECT_EQ(w(7, 5), w(4, 3));
}

TEST(ErrorNorms, HandExample) {
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 2);
  const std::vector<double> approx{0.1, -0.3};
  const ErrorNorms e = error_norms(std::span<const double>(approx), [](double) { return 0.0; }, g);
  EXPECT_NEAR(e.l1, 0.2, 1e-15);
  EXPECT_NEAR(e.linf, 0.3, 1e-15);
  EXPECT_NEAR(e.l2, std::sqrt(0.05), 1e-15);
}

TEST(ErrorNorms, OrderingOnUnitDomain) {
  // On a unit-length domain, L1 <= L2 <= Linf.
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> d(-1, 1);
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(50);
    for (double& x : v) x = d(rng);
    const ErrorNorms e = error_norms(std::span<const double>(v), [](double x) { return x; }, g);
    EXPECT_LE(e.l1, e.l2 + 1e-15);
    EXPECT_LE(e.l2, e.linf + 1e-15);
  }
}

TEST(ErrorNorms, TwoDimensionalWeights) {
  Field2D w(Grid2D::uniform(0.0, 2.0, 4, 0.0, 1.0, 2));
  w.fill([](int, int) { return 1.0; });
  const ErrorNorms e = error_norms(w, [](double, double) { return 0.0; });
  EXPECT_NEAR(e.l1, 2.0, 1e-15);
  EXPECT_NEAR(e.l2, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(e.linf, 1.0);
}

TEST(TotalVariation, Examples) {
  EXPECT_EQ(total_variation(std::vector<double>(5, 3.0), false), 0.0);
  EXPECT_EQ(total_variation(std::vector<double>{0.0, 1.0, 0.0}, true), 2.0);
  EXPECT_EQ(total_variation(std::vector<double>{0.0, 1.0, 0.0}, false), 2.0);
  EXPECT_NEAR(total_variation(std::vector<double>{0.0, 0.2, 0.7, 1.0}, false), 1.0, 1e-15);
  EXPECT_NEAR(total_variation(std::vector<double>{0.0, 0.2, 0.7, 1.0}, true), 2.0, 1e-15);
}

TEST(TotalVariation, ShiftInvariant) {
  std::vector<double> v{0.3, -1.0, 2.5, 0.0, 0.7};
  const double tv = total_variation(v, true);
  for (double& x : v) x += 4.0;
  EXPECT_NEAR(total_variation(v, true), tv, 1e-14);
}

TEST(Field1D, Arithmetic) {
  Field1D<2> a(Grid1D::uniform(0.0, 1.0, 3));
  a.fill([](int j) { return std::array<double, 2>{double(j), 1.0}; });
  Field1D<2> b = 2.0 * a + a;
  EXPECT_EQ(b(0, 2), 6.0);
  EXPECT_EQ(b(1, 0), 3.0);
  EXPECT_EQ(b.state(1), (std::array<double, 2>{3.0, 3.0}));
}

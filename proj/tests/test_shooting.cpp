#include "nilgeo/core.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/geodesic.hpp"
#include "nilgeo/shooting.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace nilgeo {
namespace {

using std::numbers::pi;

double wrap_diff(double a, double b) { return std::remainder(a - b, 2 * pi); }

TEST(Shoot, FibreTarget) {
  const auto sols = shoot({0, 0, 0.5});
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_NEAR(sols[0].dir.theta, pi / 2, 1e-15);
  EXPECT_EQ(sols[0].dir.alpha, 0.0);
  EXPECT_NEAR(sols[0].length, 0.5, 1e-15);
  EXPECT_EQ(sols[0].branch, -1);

  const auto down = shoot({0, 0, -2});
  ASSERT_EQ(down.size(), 1u);
  EXPECT_NEAR(down[0].dir.theta, -pi / 2, 1e-15);
  EXPECT_NEAR(down[0].length, 2.0, 1e-15);
}

TEST(Shoot, RoundTrip) {
  const Point target = geodesic_point({0.9, 0.2}, 1.3);
  const auto sols = shoot(target);
  ASSERT_FALSE(sols.empty());
  EXPECT_NEAR(sols[0].dir.alpha, 0.9, 1e-9);
  EXPECT_NEAR(sols[0].dir.theta, 0.2, 1e-9);
  EXPECT_NEAR(sols[0].length, 1.3, 1e-9);
  EXPECT_LE(sols[0].residual, 1e-10);
}

TEST(Shoot, TableOneRowFour) {
  const auto sols = shoot({4, 0, 0.5});
  ASSERT_FALSE(sols.empty());
  EXPECT_NEAR(std::abs(sols[0].dir.theta), 0.05337, 1e-3);
  EXPECT_NEAR(sols[0].length, 4.01337, 1e-3);
}

TEST(Shoot, SolutionsReachTargetAndAreSorted) {
  const Point target{0.3, -0.2, 2.5};
  const auto sols = shoot(target);
  ASSERT_FALSE(sols.empty());
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const ShootingSolution& s = sols[i];
    EXPECT_LE(s.residual, 1e-10);
    EXPECT_LE(euclidean_distance(geodesic_point(s.dir, s.length), target), s.residual + 1e-15);
    EXPECT_LT(std::abs(s.dir.w() * s.length), 2 * pi);
    EXPECT_GE(s.dir.alpha, -pi);
    EXPECT_LE(s.dir.alpha, pi);
    if (i > 0) EXPECT_LE(sols[i - 1].length, s.length);
    for (std::size_t j = 0; j < i; ++j) {
      const ShootingSolution& o = sols[j];
      const double gap = std::max({std::abs(wrap_diff(o.dir.alpha, s.dir.alpha)), std::abs(o.dir.theta - s.dir.theta),
                                   std::abs(o.length - s.length)});
      EXPECT_GT(gap, 1e-6);
    }
  }
}

TEST(Shoot, Errors) {
  EXPECT_THROW(shoot(Point::origin()), DomainError);
  EXPECT_THROW(shoot({std::nan(""), 0, 1}), DomainError);

  SolverConfig cfg;
  cfg.position_tolerance = 1e-300;
  cfg.max_iterations = 1;
  try {
    shoot({1.3, 0.7, -0.4}, cfg);
    FAIL() << "expected SolverFailure";
  } catch (const SolverFailure& e) {
    EXPECT_GT(e.best_residual(), 0.0);
    EXPECT_TRUE(std::isfinite(e.best_residual()));
  }
}

TEST(SolverConfig, Validation) {
  EXPECT_NO_THROW(SolverConfig{}.validate());
  const auto bad = [](auto mutate) {
    SolverConfig cfg;
    mutate(cfg);
    EXPECT_THROW(cfg.validate(), DomainError);
    EXPECT_THROW(shoot({1, 1, 1}, cfg), DomainError);
  };
  bad([](SolverConfig& c) { c.position_tolerance = 0; });
  bad([](SolverConfig& c) { c.position_tolerance = -1e-10; });
  bad([](SolverConfig& c) { c.max_iterations = 0; });
  bad([](SolverConfig& c) { c.alpha_cells = 1; });
  bad([](SolverConfig& c) { c.theta_cells = 1; });
  bad([](SolverConfig& c) { c.s_window_factor = 0; });
  bad([](SolverConfig& c) { c.ws_window = -1; });
  bad([](SolverConfig& c) { c.fd_step = 0; });
}

TEST(Distance, TableValues) {
  EXPECT_NEAR(distance(Point::origin(), {0.5, 3, 0}), 3.09310, 1e-3);
  EXPECT_NEAR(distance(Point::origin(), {0.01, 1.0 / 3, 0}), 0.33349, 1e-3);
}

TEST(Distance, SamePointIsZero) {
  const Point p{0.4, -2, 7};
  EXPECT_EQ(distance(p, p), 0.0);
}

TEST(Distance, BoundedByEuclideanOnThePlaneAxes) {
  // Straight lines through the origin along x are geodesics.
  EXPECT_NEAR(distance(Point::origin(), {2.5, 0, 0}), 2.5, 1e-10);
  EXPECT_NEAR(distance({1, 0, 0}, {-1.5, 0, 0}), 2.5, 1e-10);
}

TEST(RelativeTarget, MatchesInverseTranslation) {
  const Point from{1, 2, 3}, to{-1, 0.5, 4};
  const Point rel = relative_target(from, to);
  const Point back = translation_to(from).apply(rel);
  EXPECT_NEAR(back.x, to.x, 1e-14);
  EXPECT_NEAR(back.y, to.y, 1e-14);
  EXPECT_NEAR(back.z, to.z, 1e-14);
}

TEST(InitialDirection, UpTheFibre) {
  const InitialDirection d = initial_direction(Point::origin(), {0, 0, 1});
  EXPECT_NEAR(d.tangent.v[0], 0.0, 1e-15);
  EXPECT_NEAR(d.tangent.v[1], 0.0, 1e-15);
  EXPECT_NEAR(d.tangent.v[2], 1.0, 1e-15);
  EXPECT_NEAR(d.length, 1.0, 1e-15);
}

TEST(InitialDirection, BackAlongTheTop) {
  for (double x3 : {0.25, 1.0, 4.0}) {
    const double z3 = 0.5;
    const Point p{x3, 0, z3};
    const Point rel = relative_target(p, {0, 0, z3});
    EXPECT_NEAR(rel.x, -x3, 1e-15);
    EXPECT_NEAR(rel.y, 0.0, 1e-15);
    EXPECT_NEAR(rel.z, 0.0, 1e-15);
    const InitialDirection d = initial_direction(p, {0, 0, z3});
    EXPECT_NEAR(d.tangent.v[0], -1.0, 1e-9);
    EXPECT_NEAR(d.tangent.v[1], 0.0, 1e-9);
    EXPECT_NEAR(d.tangent.v[2], 0.0, 1e-9);
    EXPECT_NEAR(d.length, x3, 1e-9);
  }
}

TEST(InitialDirection, StraightAlongX) {
  const InitialDirection d = initial_direction(Point::origin(), {1.7, 0, 0});
  EXPECT_NEAR(d.tangent.v[0], 1.0, 1e-9);
  EXPECT_NEAR(d.tangent.v[1], 0.0, 1e-9);
  EXPECT_NEAR(d.tangent.v[2], 0.0, 1e-9);
}

TEST(InitialDirection, TangentIsUnitTangentOfDirection) {
  const InitialDirection d = initial_direction({0.3, 1, -1}, {1, -0.5, 0.2});
  const TangentVector expected = unit_tangent_at_origin(d.dir);
  EXPECT_TRUE(d.tangent.v.isApprox(expected.v, 1e-15));
  EXPECT_EQ(d.tangent.base, Point::origin());
}

TEST(InitialDirection, SamePointRejected) {
  EXPECT_THROW(initial_direction({1, 2, 3}, {1, 2, 3}), DomainError);
}

// Round trip over a coarse forward grid; the full grid lives in the acceptance run.
TEST(ShootProperty, RoundTripGrid) {
  int total = 0, recovered = 0;
  for (int i = 0; i < 8; ++i) {
    const double alpha = -pi + 2 * pi * (i + 0.5) / 8;
    for (double theta : {-1.3, -0.6, -0.1, 0.05, 0.4, 1.1}) {
      for (double s : {0.1, 0.8, 1.9, 3.5}) {
        const Direction dir{alpha, theta};
        if (std::abs(dir.w() * s) >= 2 * pi - 0.1) continue;
        ++total;
        const auto sols = shoot(geodesic_point(dir, s));
        for (const ShootingSolution& sol : sols) {
          if (std::abs(wrap_diff(sol.dir.alpha, alpha)) < 1e-8 && std::abs(sol.dir.theta - theta) < 1e-8 &&
              std::abs(sol.length - s) < 1e-8 && sol.residual <= 1e-10) {
            ++recovered;
            break;
          }
        }
      }
    }
  }
  EXPECT_GE(recovered, 0.95 * total) << recovered << " of " << total;
}

TEST(ShootProperty, Symmetry) {
  auto rng = testing::make_rng(21);
  for (int n = 0; n < 20; ++n) {
    const Point p = testing::random_point(rng, 1.5), q = testing::random_point(rng, 1.5);
    EXPECT_NEAR(distance(p, q), distance(q, p), 1e-8) << p << " " << q;
  }
}

TEST(ShootProperty, TranslationInvariance) {
  auto rng = testing::make_rng(22);
  for (int n = 0; n < 20; ++n) {
    const Point p = testing::random_point(rng, 1.5), q = testing::random_point(rng, 1.5);
    const Point t = testing::random_point(rng, 3.0);
    const Translation tr{t.x, t.y, t.z};
    EXPECT_NEAR(distance(tr.apply(p), tr.apply(q)), distance(p, q), 1e-8);
  }
}

TEST(ShootProperty, RotationAndReflectionInvariance) {
  auto rng = testing::make_rng(23);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int n = 0; n < 20; ++n) {
    const Point p = testing::random_point(rng, 1.5), q = testing::random_point(rng, 1.5);
    const double omega = angle(rng);
    const double d = distance(p, q);
    EXPECT_NEAR(distance(rotate_about_z(p, omega), rotate_about_z(q, omega)), d, 1e-8);
    EXPECT_NEAR(distance(reflect_y_axis(p), reflect_y_axis(q)), d, 1e-8);
  }
}

TEST(ShootProperty, AntipodalPitch) {
  for (double x3 : {0.01, 0.4, 1.0, 3.0, 12.0}) {
    for (double z3 : {0.1, 0.5, 2.0}) {
      const auto fwd = shoot({x3, 0, z3});
      const auto back = shoot({-x3, 0, -z3});
      ASSERT_FALSE(fwd.empty());
      ASSERT_FALSE(back.empty());
      EXPECT_NEAR(std::abs(fwd[0].dir.theta), std::abs(back[0].dir.theta), 1e-8) << x3 << " " << z3;
      EXPECT_NEAR(fwd[0].length, back[0].length, 1e-8);
    }
  }
}

TEST(ShootProperty, TriangleInequality) {
  auto rng = testing::make_rng(24);
  for (int n = 0; n < 15; ++n) {
    const Point p = testing::random_point(rng, 1.5), q = testing::random_point(rng, 1.5),
                r = testing::random_point(rng, 1.5);
    EXPECT_LE(distance(p, r), distance(p, q) + distance(q, r) + 1e-8);
  }
}

TEST(ShootProperty, SolutionsConfirmedByOde) {
  // Any returned length is the arc length of a curve that the ODE confirms reaches the target.
  const Point target{-0.7, 1.2, 0.9};
  for (const ShootingSolution& s : shoot(target)) {
    const GeodesicPath path = integrate_geodesic(Point::origin(), unit_tangent_at_origin(s.dir).v, s.length,
                                                 static_cast<int>(std::ceil(s.length * 1e4)));
    EXPECT_LT(euclidean_distance(path.endpoint, target), 1e-8);
  }
}

}  // namespace
}  // namespace nilgeo

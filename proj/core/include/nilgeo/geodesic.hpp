#pragma once

// Unit-speed geodesics issuing from the origin, in closed form, plus a
// fixed-step Runge-Kutta integrator of the geodesic ODE that serves as an
// independent check of the closed forms.

#include "nilgeo/core.hpp"

#include <array>
#include <vector>

namespace nilgeo {

/// Initial heading alpha in [-pi, pi] and pitch theta in [-pi/2, pi/2] of a
/// unit-speed geodesic: the initial velocity is (c cos alpha, c sin alpha, w)
/// with c = cos theta, w = sin theta.
struct Direction {
  double alpha = 0.0;
  double theta = 0.0;

  /// Canonical form: alpha wrapped to [-pi, pi], theta folded into
  /// [-pi/2, pi/2] (flipping alpha by pi), alpha = 0 on the fibre.
  static Direction normalized(double alpha, double theta);

  double c() const;
  double w() const;

  bool along_fibre() const;
};

/// Which closed form evaluates a direction.
enum class GeodesicBranch {
  fibre,   // |w| = 1: straight up/down the z axis
  series,  // |w| below the threshold: Taylor expansion in w around the planar curve
  helix,   // general helix-like curve
};

/// |w| below which the series branch replaces the helix formula.
inline constexpr double series_threshold = 1e-4;

GeodesicBranch branch_of(const Direction& dir);

/// Point at arc length t along the geodesic from the origin.
Point geodesic_point(const Direction& dir, double t);

/// Velocity at arc length t (coordinate components, based at the point).
TangentVector geodesic_tangent(const Direction& dir, double t);

/// (cos theta cos alpha, cos theta sin alpha, sin theta) at the origin.
TangentVector unit_tangent_at_origin(const Direction& dir);

/// Levi-Civita connection coefficients, gamma[i](j, k) = Gamma^i_{jk}.
struct Christoffel {
  std::array<Eigen::Matrix3d, 3> gamma;

  double operator()(int i, int j, int k) const { return gamma[i](j, k); }

  /// Gamma^i_{jk} v^j v^k.
  Eigen::Vector3d contract(const Eigen::Vector3d& v) const;
};

Christoffel christoffel_at(double x);

struct GeodesicPath {
  Point endpoint;
  Eigen::Vector3d velocity;  // final velocity
  std::vector<Point> path;   // steps + 1 points, or just the start when s == 0
};

/// Classical RK4 with `steps` equal steps over arc length s. v0 is rescaled
/// to unit g-norm at p0. Throws DomainError for s < 0, steps < 1 or v0 = 0.
GeodesicPath integrate_geodesic(const Point& p0, const Eigen::Vector3d& v0, double s, int steps);

/// Geodesic segment from `start`, direction expressed in the frame where
/// start has been translated to the origin.
struct Arc {
  Point start;
  Direction dir;
  double length = 0.0;

  Point point_at(double t) const;
  Point endpoint() const { return point_at(length); }
};

/// n + 1 points at uniform arc-length spacing; throws DomainError for n < 1.
std::vector<Point> sample_geodesic(const Arc& arc, int n);

}  // namespace nilgeo

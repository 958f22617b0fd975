#pragma once

// Geodesic boundary-value problem: find the initial direction and arc
// length of the geodesics from the origin that reach a target point. Any
// pair of points reduces to this case by translating the first to the
// origin.

#include "nilgeo/core.hpp"
#include "nilgeo/geodesic.hpp"

#include <numbers>
#include <vector>

namespace nilgeo {

struct SolverConfig {
  double position_tolerance = 1e-10;  // max Euclidean miss at the endpoint, times max(1, |target|)
  int max_iterations = 60;            // Newton iterations per start
  int alpha_cells = 24;               // multi-start grid over alpha in [-pi, pi)
  int theta_cells = 17;               // multi-start grid over theta in (-pi/2, pi/2)
  double s_window_factor = 4.0;       // s is confined to factor * Euclidean distance
  double ws_window = 2.0 * std::numbers::pi - 1e-6;  // bound on |w s|
  double fd_step = 1e-7;              // finite-difference step for the Jacobian

  /// Throws DomainError unless tolerances are positive and grids >= 2.
  void validate() const;
};

struct ShootingSolution {
  Direction dir;
  double length = 0.0;
  double residual = 0.0;  // Euclidean miss distance of geodesic_point(dir, length)
  int branch = -1;        // index of the multi-start cell that first converged here; -1 on the fibre
};

/// All distinct geodesics from the origin to `target` inside the |w s|
/// window, sorted by length, then alpha, then theta. Targets on the z axis
/// return the single fibre segment. Throws DomainError for the origin and
/// SolverFailure when no start converges.
std::vector<ShootingSolution> shoot(const Point& target, const SolverConfig& cfg = {});

/// Frame change that brings `from` to the origin; `to` lands on the target
/// of the equivalent problem from the origin.
Point relative_target(const Point& from, const Point& to);

/// Length of the shortest geodesic found between p and q.
double distance(const Point& p, const Point& q, const SolverConfig& cfg = {});

struct InitialDirection {
  Direction dir;
  TangentVector tangent;  // unit tangent at the origin of p's frame
  double length = 0.0;
};

/// Direction of the shortest geodesic from p to q, in the frame where p is
/// the origin. Throws DomainError when p == q.
InitialDirection initial_direction(const Point& p, const Point& q, const SolverConfig& cfg = {});

}  // namespace nilgeo

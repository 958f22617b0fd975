#include "nilgeo/shooting.hpp"

#include "nilgeo/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace nilgeo {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;

// Unknowns are (alpha, theta, s). Values outside the canonical ranges are
// still meaningful: the closed forms are analytic in all three.
using Params = Eigen::Vector3d;

Eigen::Vector3d evaluate(const Params& p) {
  return geodesic_point(Direction::normalized(p[0], p[1]), p[2]).vec();
}

// Reversed traversal and folded pitch describe the same curve; map to
// s >= 0, theta in [-pi/2, pi/2], alpha in [-pi, pi].
Params canonical(Params p) {
  if (p[2] < 0.0) {
    p[2] = -p[2];
    p[0] += pi;
    p[1] = -p[1];
  }
  const Direction d = Direction::normalized(p[0], p[1]);
  return {d.alpha, d.theta, p[2]};
}

struct StartResult {
  Params params;
  double residual;
};

std::optional<StartResult> newton(Params p, const Eigen::Vector3d& target, double s_max, double tol,
                                  const SolverConfig& cfg, double& best_residual) {
  Eigen::Vector3d f = evaluate(p) - target;
  double r = f.norm();
  best_residual = std::min(best_residual, r);

  int polish = 0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    Eigen::Matrix3d jac;
    for (int k = 0; k < 3; ++k) {
      Params q = p;
      const double h = k == 2 ? cfg.fd_step * std::max(1.0, std::abs(p[2])) : cfg.fd_step;
      q[k] += h;
      jac.col(k) = (evaluate(q) - target - f) / h;
    }
    const Params step = jac.colPivHouseholderQr().solve(-f);
    if (!step.allFinite()) {
      return std::nullopt;
    }

    // Halve the step until the residual decreases.
    double lambda = 1.0;
    bool accepted = false;
    while (lambda > 1e-9) {
      const Params trial = p + lambda * step;
      const Eigen::Vector3d ft = evaluate(trial) - target;
      const double rt = ft.norm();
      if (rt < r) {
        p = trial;
        f = ft;
        r = rt;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    best_residual = std::min(best_residual, r);
    if (!accepted) {
      break;
    }
    p = canonical(p);
    if (p[2] > s_max || std::abs(std::sin(p[1]) * p[2]) > 2.0 * cfg.ws_window) {
      return std::nullopt;
    }
    if (r <= tol) {
      // A couple of extra full steps drive the parameters to working precision.
      if (++polish > 2 || lambda * step.norm() < 1e-14) {
        break;
      }
    }
  }
  if (!(r <= tol)) {
    return std::nullopt;
  }
  return StartResult{canonical(p), r};
}

double angular_gap(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * pi));
}

}  // namespace

void SolverConfig::validate() const {
  if (!(position_tolerance > 0.0) || !(fd_step > 0.0) || !(s_window_factor > 0.0) ||
      !(ws_window > 0.0) || max_iterations < 1) {
    throw DomainError("SolverConfig: tolerances and windows must be positive");
  }
  if (alpha_cells < 2 || theta_cells < 2) {
    throw DomainError("SolverConfig: grid sizes must be at least 2");
  }
}

std::vector<ShootingSolution> shoot(const Point& target, const SolverConfig& cfg) {
  cfg.validate();
  if (!target.finite()) {
    throw DomainError("shoot: non-finite target");
  }
  const double euclid = target.vec().norm();
  if (euclid == 0.0) {
    throw DomainError("shoot: target is the origin");
  }

  const double radial = std::hypot(target.x, target.y);
  if (radial <= 1e-14 * std::max(1.0, std::abs(target.z))) {
    const Direction dir{0.0, std::copysign(half_pi, target.z)};
    const double s = std::abs(target.z);
    return {ShootingSolution{dir, s, euclidean_distance(geodesic_point(dir, s), target), -1}};
  }

  const Eigen::Vector3d goal = target.vec();
  const double s_max = cfg.s_window_factor * euclid;
  // Far targets cannot be hit to an absolute 1e-10 in double precision.
  const double tol = cfg.position_tolerance * std::max(1.0, euclid);
  double best_residual = std::numeric_limits<double>::infinity();
  std::vector<ShootingSolution> found;

  for (int i = 0; i < cfg.alpha_cells; ++i) {
    const double alpha = -pi + 2.0 * pi * i / cfg.alpha_cells;
    for (int j = 0; j < cfg.theta_cells; ++j) {
      const double theta = -half_pi + pi * (j + 1) / (cfg.theta_cells + 1);
      // Starts are placed inside the |w s| window.
      const double ws_cap = 0.9 * cfg.ws_window / std::max(std::abs(std::sin(theta)), 1e-300);
      const double s0 = std::min(euclid, ws_cap);
      const auto result = newton({alpha, theta, s0}, goal, s_max, tol, cfg, best_residual);
      if (!result) {
        continue;
      }
      const Params& p = result->params;
      if (!(p[2] > 0.0) || std::abs(std::sin(p[1]) * p[2]) >= cfg.ws_window) {
        continue;
      }
      const Direction dir = Direction::normalized(p[0], p[1]);
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const ShootingSolution& s) {
        return angular_gap(s.dir.alpha, dir.alpha) < 1e-6 && std::abs(s.dir.theta - dir.theta) < 1e-6 &&
               std::abs(s.length - p[2]) < 1e-6;
      });
      if (duplicate) {
        continue;
      }
      found.push_back({dir, p[2], result->residual, i * cfg.theta_cells + j});
    }
  }

  if (found.empty()) {
    std::ostringstream msg;
    msg << "shoot: no geodesic found to " << target << " (best residual " << best_residual << ")";
    throw SolverFailure(msg.str(), best_residual);
  }
  std::sort(found.begin(), found.end(), [](const ShootingSolution& a, const ShootingSolution& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.dir.alpha != b.dir.alpha) return a.dir.alpha < b.dir.alpha;
    return a.dir.theta < b.dir.theta;
  });
  return found;
}

Point relative_target(const Point& from, const Point& to) {
  return invert(translation_to(from)).apply(to);
}

double distance(const Point& p, const Point& q, const SolverConfig& cfg) {
  if (p == q) {
    return 0.0;
  }
  return shoot(relative_target(p, q), cfg).front().length;
}

InitialDirection initial_direction(const Point& p, const Point& q, const SolverConfig& cfg) {
  if (p == q) {
    throw DomainError("initial_direction: coincident points");
  }
  const ShootingSolution best = shoot(relative_target(p, q), cfg).front();
  return {best.dir, unit_tangent_at_origin(best.dir), best.length};
}

}  // namespace nilgeo

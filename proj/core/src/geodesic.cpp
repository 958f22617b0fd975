#include "nilgeo/geodesic.hpp"

#include "nilgeo/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace nilgeo {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;

// u - sin(u) without cancellation for small u.
double u_minus_sin(double u) {
  if (std::abs(u) >= 0.5) {
    return u - std::sin(u);
  }
  const double u2 = u * u;
  double term = u * u2 / 6.0;
  double sum = term;
  for (int k = 5; k < 40; k += 2) {
    term *= -u2 / (static_cast<double>(k - 1) * k);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

}  // namespace

Direction Direction::normalized(double alpha, double theta) {
  theta = std::remainder(theta, 2.0 * pi);
  if (theta > half_pi) {
    theta = pi - theta;
    alpha += pi;
  } else if (theta < -half_pi) {
    theta = -pi - theta;
    alpha += pi;
  }
  alpha = std::remainder(alpha, 2.0 * pi);
  if (std::abs(theta) >= half_pi) {
    return {0.0, std::copysign(half_pi, theta)};
  }
  return {alpha, theta};
}

double Direction::c() const { return along_fibre() ? 0.0 : std::cos(theta); }

double Direction::w() const { return along_fibre() ? std::copysign(1.0, theta) : std::sin(theta); }

bool Direction::along_fibre() const { return std::abs(theta) >= half_pi; }

GeodesicBranch branch_of(const Direction& dir) {
  if (dir.along_fibre()) {
    return GeodesicBranch::fibre;
  }
  if (std::abs(dir.w()) < series_threshold) {
    return GeodesicBranch::series;
  }
  return GeodesicBranch::helix;
}

Point geodesic_point(const Direction& dir, double t) {
  const double c = dir.c();
  const double w = dir.w();
  const double u = w * t;
  const double alpha = dir.alpha;

  switch (branch_of(dir)) {
    case GeodesicBranch::fibre:
      return {0.0, 0.0, w * t};

    case GeodesicBranch::series: {
      // (x + iy) = c t e^{i alpha} (e^{iu} - 1)/(iu), truncated after u^4.
      const std::complex<double> iu(0.0, u);
      std::complex<double> sum = 0.0;
      std::complex<double> power = 1.0;
      double factorial = 1.0;
      for (int k = 0; k <= 4; ++k) {
        factorial *= static_cast<double>(k + 1);
        sum += power / factorial;
        power *= iu;
      }
      const std::complex<double> xy = c * t * std::polar(1.0, alpha) * sum;
      const double u2 = u * u;
      const double f1 = 1.0 / 6.0 - u2 / 120.0 + u2 * u2 / 5040.0;   // (u - sin u)/u^3
      const double f2 = 0.5 - u2 / 24.0 + u2 * u2 / 720.0;           // (1 - cos u)/u^2
      const double z = w * t + 0.5 * c * c * (w * t * t * t * f1 + t * t * f2 * std::sin(u + 2.0 * alpha));
      return {xy.real(), xy.imag(), z};
    }

    case GeodesicBranch::helix:
      break;
  }

  const double half = 0.5 * u;
  const double radius = 2.0 * c / w * std::sin(half);
  const double s_half = std::sin(half);
  const double one_minus_cos = 2.0 * s_half * s_half;
  const double z = w * t + c * c / (2.0 * w * w) * (u_minus_sin(u) + one_minus_cos * std::sin(u + 2.0 * alpha));
  return {radius * std::cos(half + alpha), radius * std::sin(half + alpha), z};
}

TangentVector geodesic_tangent(const Direction& dir, double t) {
  const Point p = geodesic_point(dir, t);
  if (dir.along_fibre()) {
    return {{0.0, 0.0, dir.w()}, p};
  }
  const double c = dir.c();
  const double w = dir.w();
  const double heading = dir.alpha + w * t;
  const double xd = c * std::cos(heading);
  const double yd = c * std::sin(heading);
  // z' - x y' is the conserved fibre component w.
  return {{xd, yd, w + p.x * yd}, p};
}

TangentVector unit_tangent_at_origin(const Direction& dir) {
  const double c = dir.c();
  return {{c * std::cos(dir.alpha), c * std::sin(dir.alpha), dir.w()}, Point::origin()};
}

Eigen::Vector3d Christoffel::contract(const Eigen::Vector3d& v) const {
  return {v.dot(gamma[0] * v), v.dot(gamma[1] * v), v.dot(gamma[2] * v)};
}

Christoffel christoffel_at(double x) {
  // Only dg/dx is nonzero: d g22 = 2x, d g23 = -1.
  Christoffel ch;
  for (auto& m : ch.gamma) {
    m.setZero();
  }
  ch.gamma[0](1, 1) = -x;
  ch.gamma[0](1, 2) = ch.gamma[0](2, 1) = 0.5;
  ch.gamma[1](0, 1) = ch.gamma[1](1, 0) = 0.5 * x;
  ch.gamma[1](0, 2) = ch.gamma[1](2, 0) = -0.5;
  ch.gamma[2](0, 1) = ch.gamma[2](1, 0) = 0.5 * (x * x - 1.0);
  ch.gamma[2](0, 2) = ch.gamma[2](2, 0) = -0.5 * x;
  return ch;
}

GeodesicPath integrate_geodesic(const Point& p0, const Eigen::Vector3d& v0, double s, int steps) {
  if (!(s >= 0.0)) {
    throw DomainError("integrate_geodesic: negative arc length");
  }
  if (steps < 1) {
    throw DomainError("integrate_geodesic: steps must be positive");
  }
  const double speed = metric_at(p0).norm(v0);
  if (!(speed > 0.0)) {
    throw DomainError("integrate_geodesic: zero initial velocity");
  }

  using State = Eigen::Matrix<double, 6, 1>;
  const auto rhs = [](const State& y) {
    State dy;
    const Eigen::Vector3d v = y.tail<3>();
    dy.head<3>() = v;
    dy.tail<3>() = -christoffel_at(y[0]).contract(v);
    return dy;
  };

  State y;
  y.head<3>() = p0.vec();
  y.tail<3>() = v0 / speed;

  GeodesicPath out;
  out.path.reserve(s > 0.0 ? static_cast<std::size_t>(steps) + 1 : 1);
  out.path.push_back(p0);
  if (s > 0.0) {
    const double h = s / steps;
    for (int i = 0; i < steps; ++i) {
      const State k1 = rhs(y);
      const State k2 = rhs(y + 0.5 * h * k1);
      const State k3 = rhs(y + 0.5 * h * k2);
      const State k4 = rhs(y + h * k3);
      y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      out.path.push_back(Point::from_vec(y.head<3>()));
    }
  }
  out.endpoint = Point::from_vec(y.head<3>());
  out.velocity = y.tail<3>();
  return out;
}

Point Arc::point_at(double t) const {
  return translation_to(start).apply(geodesic_point(dir, t));
}

std::vector<Point> sample_geodesic(const Arc& arc, int n) {
  if (n < 1) {
    throw DomainError("sample_geodesic: need at least one segment");
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = i == n ? arc.length : arc.length * static_cast<double>(i) / n;
    pts.push_back(arc.point_at(t));
  }
  return pts;
}

}  // namespace nilgeo

#include "nilgeo/core.hpp"

#include "nilgeo/errors.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nilgeo {

bool Point::finite() const noexcept {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

double euclidean_distance(const Point& p, const Point& q) {
  return (p.vec() - q.vec()).norm();
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << std::setprecision(15) << p.x << ',' << p.y << ',' << p.z;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << to_string(p) << ')';
}

Eigen::Matrix4d Translation::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 1) = a;
  m(0, 2) = b;
  m(0, 3) = c;
  m(2, 3) = a;
  return m;
}

Translation compose(const Translation& first, const Translation& second) noexcept {
  return {second.a + first.a, second.b + first.b, second.c + first.b * second.a + first.c};
}

Translation invert(const Translation& t) noexcept {
  return {-t.a, -t.b, t.a * t.b - t.c};
}

TangentVector pushforward(const Translation& t, const TangentVector& v) {
  // The action is affine, so its differential is the constant linear part.
  return {{v.v[0], v.v[1], v.v[2] + t.a * v.v[1]}, t.apply(v.base)};
}

MetricTensor metric_at(const Point& p) {
  const double x = p.x;
  MetricTensor m;
  m.g << 1.0, 0.0, 0.0,
         0.0, 1.0 + x * x, -x,
         0.0, -x, 1.0;
  m.inverse << 1.0, 0.0, 0.0,
               0.0, 1.0, x,
               0.0, x, 1.0 + x * x;
  return m;
}

double MetricTensor::norm(const Eigen::Vector3d& v) const {
  return std::sqrt(std::max(0.0, inner(v, v)));
}

Eigen::Vector3d orthonormal_components(const TangentVector& v) {
  return {v.v[0], v.v[1], v.v[2] - v.base.x * v.v[1]};
}

double norm(const TangentVector& v) {
  return orthonormal_components(v).norm();
}

double angle_between(const Eigen::Vector3d& u, const Eigen::Vector3d& v, const Point& p) {
  const MetricTensor m = metric_at(p);
  const double uu = m.inner(u, u);
  const double vv = m.inner(v, v);
  if (!(uu > 0.0) || !(vv > 0.0)) {
    throw DomainError("angle_between: zero tangent vector");
  }
  const double cosine = m.inner(u, v) / std::sqrt(uu * vv);
  // The sine comes from the orthonormal coframe so that angles near 0 and
  // pi keep full precision; cos/sin agree with the g-inner product.
  const Eigen::Vector3d eu = orthonormal_components({u, p});
  const Eigen::Vector3d ev = orthonormal_components({v, p});
  const double sine = eu.cross(ev).norm() / std::sqrt(uu * vv);
  return std::atan2(sine, cosine);
}

double angle_between(const TangentVector& u, const TangentVector& v) {
  if (!(u.base == v.base)) {
    throw DomainError("angle_between: vectors based at different points");
  }
  return angle_between(u.v, v.v, u.base);
}

Point rotate_about_z(const Point& p, double omega) {
  const double co = std::cos(omega);
  const double so = std::sin(omega);
  const double s2 = std::sin(2.0 * omega);
  const double c2 = std::cos(2.0 * omega);
  const double x = p.x;
  const double y = p.y;
  return {x * co - y * so,
          x * so + y * co,
          p.z - 0.5 * x * y + 0.25 * (x * x - y * y) * s2 + 0.5 * x * y * c2};
}

TangentVector rotate_about_z(const TangentVector& v, double omega) {
  const double co = std::cos(omega);
  const double so = std::sin(omega);
  const double s2 = std::sin(2.0 * omega);
  const double c2 = std::cos(2.0 * omega);
  const double x = v.base.x;
  const double y = v.base.y;
  Eigen::Matrix3d jac;
  jac << co, -so, 0.0,
         so, co, 0.0,
         -0.5 * y + 0.5 * x * s2 + 0.5 * y * c2, -0.5 * x - 0.5 * y * s2 + 0.5 * x * c2, 1.0;
  return {jac * v.v, rotate_about_z(v.base, omega)};
}

Point rotate_linear(const Point& p, double omega) {
  const double co = std::cos(omega);
  const double so = std::sin(omega);
  return {p.x * co - p.y * so, p.x * so + p.y * co, p.z};
}

Point quadratic_map(const Point& p, QuadraticDirection direction) {
  const double shift = 0.5 * p.x * p.y;
  return {p.x, p.y, direction == QuadraticDirection::forward ? p.z - shift : p.z + shift};
}

Point reflect_y_axis(const Point& p) noexcept { return {-p.x, p.y, -p.z}; }

TangentVector reflect_y_axis(const TangentVector& v) {
  return {{-v.v[0], v.v[1], -v.v[2]}, reflect_y_axis(v.base)};
}

}  // namespace nilgeo

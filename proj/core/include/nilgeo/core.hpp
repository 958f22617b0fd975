#pragma once

// Closed-form algebra of Nil in the projective (affine) model: points,
// right translations, the two isometry families fixing the origin, the
// translation-invariant metric, and angle measurement.
//
// The arc-length element is ds^2 = dx^2 + dy^2 + (dz - x dy)^2, so the
// metric depends on the x coordinate only.

#include <Eigen/Core>

#include <iosfwd>
#include <string>

namespace nilgeo {

/// Point of Nil in affine coordinates; homogeneous form is (1; x, y, z).
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Point origin() noexcept { return {}; }

  Eigen::Vector3d vec() const { return {x, y, z}; }
  static Point from_vec(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }

  /// Homogeneous row (1, x, y, z).
  Eigen::RowVector4d homogeneous() const { return {1.0, x, y, z}; }

  bool finite() const noexcept;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Euclidean (model-space) separation; not the Nil distance.
double euclidean_distance(const Point& p, const Point& q);

/// Decimal rendering with 15 significant digits, "x,y,z".
std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Right translation with parameters (a, b, c): the point action is
/// (p, q, r) -> (a + p, b + q, c + q*a + r), i.e. the homogeneous row
/// (1; p, q, r) times matrix().
struct Translation {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static constexpr Translation identity() noexcept { return {}; }

  Point apply(const Point& p) const noexcept {
    return {a + p.x, b + p.y, c + p.y * a + p.z};
  }

  /// 4x4 collineation matrix acting on homogeneous rows from the right.
  Eigen::Matrix4d matrix() const;

  friend bool operator==(const Translation&, const Translation&) = default;
};

/// Translation equivalent to applying `first`, then `second`.
/// With first = (a, b, c) and second = (x, y, z) the result is
/// (x + a, y + b, z + b*x + c).
Translation compose(const Translation& first, const Translation& second) noexcept;

/// Closed-form inverse (-a, -b, a*b - c).
Translation invert(const Translation& t) noexcept;

/// The translation carrying the origin onto p.
constexpr Translation translation_to(const Point& p) noexcept { return {p.x, p.y, p.z}; }

/// Tangent vector given by coordinate-frame components at a base point.
struct TangentVector {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  Point base{};
};

/// Differential of the translation; the base moves to t.apply(base).
TangentVector pushforward(const Translation& t, const TangentVector& v);

/// Metric tensor g_ij at a point, with its closed-form inverse g^ij.
struct MetricTensor {
  Eigen::Matrix3d g;
  Eigen::Matrix3d inverse;

  double determinant() const { return g.determinant(); }
  double inner(const Eigen::Vector3d& u, const Eigen::Vector3d& v) const { return u.dot(g * v); }
  double norm(const Eigen::Vector3d& v) const;
};

MetricTensor metric_at(const Point& p);

/// Components of v in the orthonormal coframe (dx, dy, dz - x dy) at its
/// base; Euclidean geometry of the result is the Nil geometry of v.
Eigen::Vector3d orthonormal_components(const TangentVector& v);

/// g-norm of a tangent vector at its own base.
double norm(const TangentVector& v);

/// Angle in [0, pi] between u and v at p, from the g-inner product.
/// Throws DomainError if either vector is zero.
double angle_between(const Eigen::Vector3d& u, const Eigen::Vector3d& v, const Point& p);
double angle_between(const TangentVector& u, const TangentVector& v);

/// Rotation through omega about the z axis at the origin. Quadratic in
/// (x, y) for the z image.
Point rotate_about_z(const Point& p, double omega);
TangentVector rotate_about_z(const TangentVector& v, double omega);

/// Ordinary linear rotation of (x, y) about the z axis, z fixed. This is
/// the Nil rotation in the linearized coordinates of quadratic_map.
Point rotate_linear(const Point& p, double omega);

enum class QuadraticDirection { forward, backward };

/// forward: z -> z - x*y/2; backward: z -> z + x*y/2. Conjugates
/// rotate_about_z to rotate_linear.
Point quadratic_map(const Point& p, QuadraticDirection direction);

/// Involutive line reflection about the y axis, (x, y, z) -> (-x, y, -z).
Point reflect_y_axis(const Point& p) noexcept;
TangentVector reflect_y_axis(const TangentVector& v);

}  // namespace nilgeo

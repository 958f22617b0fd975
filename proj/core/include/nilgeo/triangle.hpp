#pragma once

// Geodesic triangles: interior angles by translating each vertex to the
// origin (where the metric is Euclidean), the right-angled fibre-like and
// hyperbolic-like families, table scans, and the bisection search for an
// angle sum of exactly pi.

#include "nilgeo/core.hpp"
#include "nilgeo/geodesic.hpp"
#include "nilgeo/shooting.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilgeo {

struct Triangle {
  Point a1;
  Point a2;
  Point a3;

  std::array<Point, 3> vertices() const { return {a1, a2, a3}; }

  /// Throws DomainError unless the vertices are pairwise distinct.
  void validate() const;
};

/// One side as seen from a vertex translated to the origin.
struct SideView {
  int toward = -1;            // index of the far vertex
  Point target;               // far vertex in this vertex's frame
  ShootingSolution solution;  // shortest geodesic
  std::size_t multiplicity = 0;  // number of distinct geodesics found
  TangentVector tangent;      // unit tangent at the origin
};

struct VertexFrame {
  std::array<SideView, 2> sides;
};

struct TriangleReport {
  std::array<Point, 3> vertices;
  std::array<Arc, 3> sides;  // sides[k] is opposite vertex k, running from the lower to the higher index
  std::array<double, 3> angles{};
  double angle_sum = 0.0;
  std::array<VertexFrame, 3> frames;

  const SideView& view(int from, int to) const;

  /// Length of side (from, to) measured in from's frame.
  double side_length(int from, int to) const { return view(from, to).solution.length; }

  /// |theta| of the side leaving `from` toward `to`.
  double pitch(int from, int to) const;
};

TriangleReport triangle_report(const Triangle& tri, const SolverConfig& cfg = {});

/// Vertices (0,0,0), (0,0,z), (x3,0,z).
Triangle fibre_like_vertices(double x3, double z);
TriangleReport fibre_like_triangle(double x3, double z, const SolverConfig& cfg = {});

/// Vertices (0,0,0), (0,y,0), (x3,y,0).
Triangle hyperbolic_like_vertices(double x3, double y);
TriangleReport hyperbolic_like_triangle(double x3, double y, const SolverConfig& cfg = {});

enum class Family { fibre, hyperbolic };
enum class Coordinate { x3, y, z };

std::string_view to_string(Family f);
std::string_view to_string(Coordinate c);

/// Which coordinate of a family is held fixed; the family's other
/// parameter varies.
struct ScanSpec {
  Family family = Family::fibre;
  Coordinate fixed = Coordinate::z;
  double fixed_value = 0.5;

  Coordinate varying() const;
  /// Throws PreconditionError if `fixed` is not a parameter of `family`.
  void validate() const;
};

/// One row of a table: (parameter, |theta_3^0|, d(A1A3), omega1, omega3, sum).
struct TableRow {
  double parameter = 0.0;
  bool ok = false;
  std::string error;
  double theta30 = 0.0;  // |theta| of A1 -> A3 at A1
  double theta13 = 0.0;  // |theta| of A3 -> A1 at A3
  double d13 = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double angle_sum = 0.0;
};

Triangle scan_vertices(const ScanSpec& spec, double parameter);
TableRow table_row(const ScanSpec& spec, double parameter, const SolverConfig& cfg = {});

/// Rows in grid order; solver failures are recorded in the row.
std::vector<TableRow> family_scan(const ScanSpec& spec, std::span<const double> grid,
                                  const SolverConfig& cfg = {});

struct TablePreset {
  std::string name;
  std::string title;
  ScanSpec spec;
  std::vector<double> grid;
};

/// The three published parameter grids: "table1", "table2", "table3".
const std::vector<TablePreset>& table_presets();
/// Throws PreconditionError for an unknown name.
const TablePreset& table_preset(std::string_view name);

struct HyperbolicParams {
  double x3 = 0.0;
  double y = 0.0;
};

struct FibreParams {
  double x3 = 0.0;
  double z = 0.0;
};

/// A2(t), A3(t) moved along Euclidean segments from the hyperbolic-like
/// configuration (t = 0) to the fibre-like one (t = 1); A1 stays at the origin.
Triangle interpolated_triangle(const HyperbolicParams& hyp, const FibreParams& fib, double t);

struct PiSumResult {
  double t = 0.0;
  TriangleReport triangle;
  int iterations = 0;
  double sum_hyperbolic = 0.0;  // angle sum at t = 0 (the hyperbolic-like end)
  double sum_fibre = 0.0;       // angle sum at t = 1 (the fibre-like end)
};

/// Bisection for t in (0, 1) with |angle_sum - pi| <= tol, each vertex
/// moving on the Euclidean segment from `below` (t = 0) to `above` (t = 1).
/// Throws PreconditionError unless the t = 0 sum is below pi and the t = 1
/// sum above it.
PiSumResult find_pi_sum(const Triangle& below, const Triangle& above, double tol, const SolverConfig& cfg = {});

/// The same search between a hyperbolic-like and a fibre-like right triangle.
PiSumResult find_pi_sum(const HyperbolicParams& hyp, const FibreParams& fib, double tol,
                        const SolverConfig& cfg = {});

struct Classification {
  TriangleReport greater;  // fibre-like (1, 1/2)
  TriangleReport less;     // hyperbolic-like (1/2, 3)
  PiSumResult equal;       // bisection between the two
};

Classification classify_examples(const SolverConfig& cfg = {});

}  // namespace nilgeo

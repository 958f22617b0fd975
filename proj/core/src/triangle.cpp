#include "nilgeo/triangle.hpp"

#include "nilgeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace nilgeo {

namespace {

constexpr std::array<std::array<int, 2>, 3> kOthers = {{{1, 2}, {0, 2}, {0, 1}}};

std::string vertex_name(int i) { return "A" + std::to_string(i + 1); }

SideView solve_side(const std::array<Point, 3>& v, int from, int to, const SolverConfig& cfg) {
  SideView view;
  view.toward = to;
  view.target = relative_target(v[from], v[to]);
  try {
    const auto solutions = shoot(view.target, cfg);
    view.solution = solutions.front();
    view.multiplicity = solutions.size();
  } catch (const SolverFailure& e) {
    std::ostringstream msg;
    msg << "side " << vertex_name(std::min(from, to)) << vertex_name(std::max(from, to)) << " unsolved from "
        << vertex_name(from) << ": " << e.what();
    throw SolverFailure(msg.str(), e.best_residual());
  }
  view.tangent = unit_tangent_at_origin(view.solution.dir);
  return view;
}

}  // namespace

void Triangle::validate() const {
  const auto v = vertices();
  for (int i = 0; i < 3; ++i) {
    if (!v[i].finite()) {
      throw DomainError("triangle: non-finite vertex " + vertex_name(i));
    }
  }
  for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    if (!(euclidean_distance(v[i], v[j]) > 1e-12)) {
      throw DomainError("triangle: vertices " + vertex_name(i) + " and " + vertex_name(j) + " coincide");
    }
  }
}

const SideView& TriangleReport::view(int from, int to) const {
  for (const auto& s : frames.at(from).sides) {
    if (s.toward == to) {
      return s;
    }
  }
  throw DomainError("TriangleReport::view: invalid vertex pair");
}

double TriangleReport::pitch(int from, int to) const {
  return std::abs(view(from, to).solution.dir.theta);
}

TriangleReport triangle_report(const Triangle& tri, const SolverConfig& cfg) {
  tri.validate();
  TriangleReport rep;
  rep.vertices = tri.vertices();

  for (int i = 0; i < 3; ++i) {
    auto& frame = rep.frames[i];
    for (int k = 0; k < 2; ++k) {
      frame.sides[k] = solve_side(rep.vertices, i, kOthers[i][k], cfg);
    }
    // At the origin the metric is the identity, so this is the Euclidean
    // angle between the two unit tangents.
    rep.angles[i] = angle_between(frame.sides[0].tangent, frame.sides[1].tangent);
  }
  rep.angle_sum = rep.angles[0] + rep.angles[1] + rep.angles[2];

  for (int k = 0; k < 3; ++k) {
    const auto [i, j] = kOthers[k];
    const SideView& sv = rep.view(i, j);
    rep.sides[k] = Arc{rep.vertices[i], sv.solution.dir, sv.solution.length};
  }
  return rep;
}

Triangle fibre_like_vertices(double x3, double z) {
  return {Point::origin(), {0.0, 0.0, z}, {x3, 0.0, z}};
}

TriangleReport fibre_like_triangle(double x3, double z, const SolverConfig& cfg) {
  if (!(x3 > 0.0) || !(z > 0.0) || !std::isfinite(x3) || !std::isfinite(z)) {
    throw DomainError("fibre_like_triangle: x3 and z must be positive and finite");
  }
  return triangle_report(fibre_like_vertices(x3, z), cfg);
}

Triangle hyperbolic_like_vertices(double x3, double y) {
  return {Point::origin(), {0.0, y, 0.0}, {x3, y, 0.0}};
}

TriangleReport hyperbolic_like_triangle(double x3, double y, const SolverConfig& cfg) {
  if (!(x3 > 0.0) || !(y > 0.0) || !std::isfinite(x3) || !std::isfinite(y)) {
    throw DomainError("hyperbolic_like_triangle: x3 and y must be positive and finite");
  }
  return triangle_report(hyperbolic_like_vertices(x3, y), cfg);
}

std::string_view to_string(Family f) {
  return f == Family::fibre ? "fibre" : "hyperbolic";
}

std::string_view to_string(Coordinate c) {
  switch (c) {
    case Coordinate::x3: return "x3";
    case Coordinate::y: return "y";
    case Coordinate::z: return "z";
  }
  return "?";
}

Coordinate ScanSpec::varying() const {
  if (fixed == Coordinate::x3) {
    return family == Family::fibre ? Coordinate::z : Coordinate::y;
  }
  return Coordinate::x3;
}

void ScanSpec::validate() const {
  const bool ok = fixed == Coordinate::x3 || (family == Family::fibre && fixed == Coordinate::z) ||
                  (family == Family::hyperbolic && fixed == Coordinate::y);
  if (!ok) {
    throw PreconditionError("scan: " + std::string(to_string(fixed)) + " is not a parameter of the " +
                            std::string(to_string(family)) + " family");
  }
  if (!(fixed_value > 0.0) || !std::isfinite(fixed_value)) {
    throw PreconditionError("scan: fixed value must be positive and finite");
  }
}

Triangle scan_vertices(const ScanSpec& spec, double parameter) {
  spec.validate();
  const bool x3_fixed = spec.fixed == Coordinate::x3;
  const double x3 = x3_fixed ? spec.fixed_value : parameter;
  const double other = x3_fixed ? parameter : spec.fixed_value;
  return spec.family == Family::fibre ? fibre_like_vertices(x3, other) : hyperbolic_like_vertices(x3, other);
}

TableRow table_row(const ScanSpec& spec, double parameter, const SolverConfig& cfg) {
  TableRow row;
  row.parameter = parameter;
  if (!(parameter > 0.0) || !std::isfinite(parameter)) {
    row.error = "parameter must be positive and finite";
    return row;
  }
  try {
    const TriangleReport rep = triangle_report(scan_vertices(spec, parameter), cfg);
    row.theta30 = rep.pitch(0, 2);
    row.theta13 = rep.pitch(2, 0);
    row.d13 = rep.side_length(0, 2);
    row.omega1 = rep.angles[0];
    row.omega2 = rep.angles[1];
    row.omega3 = rep.angles[2];
    row.angle_sum = rep.angle_sum;
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<TableRow> family_scan(const ScanSpec& spec, std::span<const double> grid, const SolverConfig& cfg) {
  spec.validate();
  std::vector<TableRow> rows;
  rows.reserve(grid.size());
  for (const double p : grid) {
    rows.push_back(table_row(spec, p, cfg));
  }
  return rows;
}

const std::vector<TablePreset>& table_presets() {
  static const std::vector<TablePreset> presets = {
      {"table1", "fibre-like right triangles, z2 = z3 = 1/2", {Family::fibre, Coordinate::z, 0.5},
       {1.0 / 1000.0, 1.0 / 3.0, 1.0, 4.0, 15.0, 100.0}},
      {"table2", "hyperbolic-like right triangles, x3 = 1/2", {Family::hyperbolic, Coordinate::x3, 0.5},
       {1.0 / 100.0, 1.0 / 3.0, 3.0, 6.0, 20.0, 100.0}},
      {"table3", "hyperbolic-like right triangles, y2 = y3 = 1/3", {Family::hyperbolic, Coordinate::y, 1.0 / 3.0},
       {1.0 / 100.0, 1.0 / 3.0, 3.0, 6.0, 20.0, 100.0}},
  };
  return presets;
}

const TablePreset& table_preset(std::string_view name) {
  for (const auto& p : table_presets()) {
    if (p.name == name) {
      return p;
    }
  }
  throw PreconditionError("unknown table preset '" + std::string(name) + "'");
}

namespace {

Point lerp(const Point& a, const Point& b, double t) {
  return {(1.0 - t) * a.x + t * b.x, (1.0 - t) * a.y + t * b.y, (1.0 - t) * a.z + t * b.z};
}

Triangle lerp(const Triangle& a, const Triangle& b, double t) {
  return {lerp(a.a1, b.a1, t), lerp(a.a2, b.a2, t), lerp(a.a3, b.a3, t)};
}

}  // namespace

Triangle interpolated_triangle(const HyperbolicParams& hyp, const FibreParams& fib, double t) {
  return lerp(hyperbolic_like_vertices(hyp.x3, hyp.y), fibre_like_vertices(fib.x3, fib.z), t);
}

PiSumResult find_pi_sum(const HyperbolicParams& hyp, const FibreParams& fib, double tol, const SolverConfig& cfg) {
  return find_pi_sum(hyperbolic_like_vertices(hyp.x3, hyp.y), fibre_like_vertices(fib.x3, fib.z), tol, cfg);
}

PiSumResult find_pi_sum(const Triangle& below, const Triangle& above, double tol, const SolverConfig& cfg) {
  if (!(tol > 0.0)) {
    throw PreconditionError("find_pi_sum: tolerance must be positive");
  }
  constexpr double pi = std::numbers::pi;
  PiSumResult out;
  const auto sum_at = [&](double t) { return triangle_report(lerp(below, above, t), cfg); };

  out.sum_hyperbolic = sum_at(0.0).angle_sum;
  out.sum_fibre = sum_at(1.0).angle_sum;
  if (!(out.sum_hyperbolic < pi && out.sum_fibre > pi)) {
    std::ostringstream msg;
    msg << "find_pi_sum: endpoints do not straddle pi (sum at t=0 is " << out.sum_hyperbolic << ", at t=1 is "
        << out.sum_fibre << "; need the first below pi and the second above)";
    throw PreconditionError(msg.str());
  }

  double lo = 0.0;
  double hi = 1.0;
  for (int it = 1; it <= 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    TriangleReport rep = sum_at(mid);
    const double gap = rep.angle_sum - pi;
    out.t = mid;
    out.triangle = std::move(rep);
    out.iterations = it;
    if (std::abs(gap) <= tol) {
      return out;
    }
    (gap < 0.0 ? lo : hi) = mid;
    if (hi - lo < 1e-15) {
      break;
    }
  }
  std::ostringstream msg;
  msg << "find_pi_sum: bisection stalled at t = " << out.t << " with |sum - pi| = "
      << std::abs(out.triangle.angle_sum - pi);
  throw SolverFailure(msg.str(), std::abs(out.triangle.angle_sum - pi));
}

Classification classify_examples(const SolverConfig& cfg) {
  const HyperbolicParams hyp{0.5, 3.0};
  const FibreParams fib{1.0, 0.5};
  return {fibre_like_triangle(fib.x3, fib.z, cfg), hyperbolic_like_triangle(hyp.x3, hyp.y, cfg),
          find_pi_sum(hyp, fib, 1e-6, cfg)};
}

}  // namespace nilgeo

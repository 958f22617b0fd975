#include "render.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nilgeo::cli {

using nlohmann::json;

namespace {

constexpr double pi = std::numbers::pi;

json point_json(const Point& p) { return json::array({p.x, p.y, p.z}); }

json solution_json(const ShootingSolution& s) {
  return {{"alpha", s.dir.alpha}, {"theta", s.dir.theta}, {"length", s.length}, {"residual", s.residual},
          {"branch", s.branch}};
}

json triangle_json(const TriangleReport& rep) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : rep.vertices) {
    j["vertices"].push_back(point_json(v));
  }
  j["angles"] = json::array({rep.angles[0], rep.angles[1], rep.angles[2]});
  j["angle_sum"] = rep.angle_sum;
  j["angle_sum_minus_pi"] = rep.angle_sum - pi;

  j["sides"] = json::array();
  constexpr int ends[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int k = 0; k < 3; ++k) {
    const auto& arc = rep.sides[k];
    j["sides"].push_back({{"from", ends[k][0] + 1},
                          {"to", ends[k][1] + 1},
                          {"length", arc.length},
                          {"alpha", arc.dir.alpha},
                          {"theta", arc.dir.theta}});
  }

  j["frames"] = json::array();
  for (int i = 0; i < 3; ++i) {
    json frame{{"vertex", i + 1}, {"sides", json::array()}};
    for (const auto& s : rep.frames[i].sides) {
      json side = solution_json(s.solution);
      side["toward"] = s.toward + 1;
      side["target"] = point_json(s.target);
      side["multiplicity"] = s.multiplicity;
      side["tangent"] = json::array({s.tangent.v[0], s.tangent.v[1], s.tangent.v[2]});
      frame["sides"].push_back(std::move(side));
    }
    j["frames"].push_back(std::move(frame));
  }
  return j;
}

json row_json(const TableRow& r) {
  json j{{"parameter", r.parameter}, {"ok", r.ok}};
  if (!r.ok) {
    j["error"] = r.error;
    return j;
  }
  j["theta_3_0"] = r.theta30;
  j["theta_1_3"] = r.theta13;
  j["d13"] = r.d13;
  j["omega1"] = r.omega1;
  j["omega2"] = r.omega2;
  j["omega3"] = r.omega3;
  j["angle_sum"] = r.angle_sum;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string point_text(const Point& p) {
  return exact(p.x) + "," + exact(p.y) + "," + exact(p.z);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // Avoid "-0.000000".
  if (std::string_view(buf) == "-0.000000") {
    return "0.000000";
  }
  return buf;
}

std::string exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string render_distance(const Point& from, const Point& to, const std::vector<ShootingSolution>& solutions,
                            double distance, Format format) {
  switch (format) {
    case Format::json: {
      json j{{"from", point_json(from)}, {"to", point_json(to)}, {"distance", distance},
             {"solutions", json::array()}};
      for (const auto& s : solutions) {
        j["solutions"].push_back(solution_json(s));
      }
      return dump(j);
    }
    case Format::csv:
      return "distance\n" + fixed6(distance) + "\n";
    case Format::plain:
      break;
  }
  return fixed6(distance) + "\n";
}

std::string render_triangle(const TriangleReport& rep, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      return dump(triangle_json(rep));
    case Format::csv:
      os << "omega1,omega2,omega3,angle_sum\n"
         << fixed6(rep.angles[0]) << ',' << fixed6(rep.angles[1]) << ',' << fixed6(rep.angles[2]) << ','
         << fixed6(rep.angle_sum) << '\n';
      return os.str();
    case Format::plain:
      break;
  }
  for (int i = 0; i < 3; ++i) {
    os << "A" << i + 1 << " = (" << point_text(rep.vertices[i]) << ")\n";
  }
  constexpr const char* names[3] = {"A2A3", "A1A3", "A1A2"};
  for (int k = 0; k < 3; ++k) {
    os << "d(" << names[k] << ") = " << fixed6(rep.sides[k].length) << '\n';
  }
  for (int i = 0; i < 3; ++i) {
    os << "omega" << i + 1 << " = " << fixed6(rep.angles[i]) << '\n';
  }
  os << "angle_sum = " << fixed6(rep.angle_sum) << '\n';
  const double gap = rep.angle_sum - pi;
  os << "angle_sum - pi = " << exact(gap) << " (" << (gap > 0.0 ? "> pi" : gap < 0.0 ? "< pi" : "= pi") << ")\n";
  return os.str();
}

std::vector<LimitRow> limit_rows(const ScanSpec& spec) {
  const std::string fixed = fixed6(spec.fixed_value);
  if (spec.family == Family::fibre && spec.varying() == Coordinate::x3) {
    return {{"->0", "->pi/2", fixed, "->0", "->pi/2", "->pi"},
            {"->inf", "->0", "->inf", "->pi/2", "->0", "->pi"}};
  }
  if (spec.family == Family::hyperbolic && spec.varying() == Coordinate::y) {
    return {{"->0", "->0", fixed, "->pi/2", "->0", "->pi"},
            {"->inf", "->0", "->inf", "->0", "->pi/2", "->pi"}};
  }
  if (spec.family == Family::hyperbolic && spec.varying() == Coordinate::x3) {
    return {{"->0", "->0", fixed, "->0", "->pi/2", "->pi"},
            {"->inf", "->0", "->inf", "->pi/2", "->0", "->pi"}};
  }
  return {};
}

std::string render_table(const ScanSpec& spec, const std::vector<TableRow>& rows, Format format, bool with_limits,
                         std::string_view title) {
  const std::vector<LimitRow> limits = with_limits ? limit_rows(spec) : std::vector<LimitRow>{};
  const std::string param(to_string(spec.varying()));

  if (format == Format::json) {
    json j{{"family", to_string(spec.family)},
           {"fixed", {{"name", to_string(spec.fixed)}, {"value", spec.fixed_value}}},
           {"parameter", param},
           {"rows", json::array()}};
    if (!title.empty()) {
      j["title"] = title;
    }
    for (const auto& r : rows) {
      j["rows"].push_back(row_json(r));
    }
    if (with_limits) {
      j["limits"] = json::array();
      for (const auto& l : limits) {
        j["limits"].push_back({{"parameter", l.parameter}, {"theta", l.theta}, {"d13", l.d13},
                               {"omega1", l.omega1}, {"omega3", l.omega3}, {"angle_sum", l.angle_sum}});
      }
    }
    return dump(j);
  }

  std::ostringstream os;
  const char sep = format == Format::csv ? ',' : '\t';
  if (format == Format::plain && !title.empty()) {
    os << "# " << title << '\n';
  }
  os << param << sep << "theta" << sep << "d13" << sep << "omega1" << sep << "omega3" << sep << "angle_sum";
  if (format == Format::plain) {
    os << sep << "theta_1_3" << sep << "omega2";
  }
  os << '\n';

  const auto limit_line = [&](const LimitRow& l) {
    os << l.parameter << sep << l.theta << sep << l.d13 << sep << l.omega1 << sep << l.omega3 << sep
       << l.angle_sum;
    if (format == Format::plain) {
      os << sep << l.theta << sep << "pi/2";
    }
    os << '\n';
  };
  if (!limits.empty()) {
    limit_line(limits.front());
  }
  for (const auto& r : rows) {
    os << fixed6(r.parameter);
    if (!r.ok) {
      os << sep << "FAIL" << sep << sep << sep << sep;
      if (format == Format::plain) {
        os << sep << sep;
      }
      os << '\n';
      continue;
    }
    os << sep << fixed6(r.theta30) << sep << fixed6(r.d13) << sep << fixed6(r.omega1) << sep << fixed6(r.omega3)
       << sep << fixed6(r.angle_sum);
    if (format == Format::plain) {
      os << sep << fixed6(r.theta13) << sep << fixed6(r.omega2);
    }
    os << '\n';
  }
  if (limits.size() > 1) {
    limit_line(limits.back());
  }
  return os.str();
}

std::string render_pi_sum(const PiSumResult& res, double tol, Format format) {
  const TriangleReport& rep = res.triangle;
  const double gap = std::abs(rep.angle_sum - pi);
  if (format == Format::json) {
    json j{{"t", res.t},
           {"iterations", res.iterations},
           {"tolerance", tol},
           {"sum_at_hyperbolic_end", res.sum_hyperbolic},
           {"sum_at_fibre_end", res.sum_fibre},
           {"abs_sum_minus_pi", gap},
           {"triangle", triangle_json(rep)}};
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "t,a2_x,a2_y,a2_z,a3_x,a3_y,a3_z,omega1,omega2,omega3,angle_sum\n"
       << exact(res.t) << ',' << point_text(rep.vertices[1]) << ',' << point_text(rep.vertices[2]) << ','
       << fixed6(rep.angles[0]) << ',' << fixed6(rep.angles[1]) << ',' << fixed6(rep.angles[2]) << ','
       << fixed6(rep.angle_sum) << '\n';
    return os.str();
  }
  os << "t_E = " << exact(res.t) << " (" << res.iterations << " bisection steps)\n"
     << "sum at t=0 = " << fixed6(res.sum_hyperbolic) << ", sum at t=1 = " << fixed6(res.sum_fibre) << '\n';
  for (int i = 0; i < 3; ++i) {
    os << "A" << i + 1 << " = " << point_text(rep.vertices[i]) << '\n';
  }
  for (int i = 0; i < 3; ++i) {
    os << "omega" << i + 1 << " = " << fixed6(rep.angles[i]) << '\n';
  }
  os << "angle_sum = " << exact(rep.angle_sum) << '\n'
     << "|angle_sum - pi| = " << exact(gap) << " <= " << exact(tol) << '\n';
  return os.str();
}

std::string render_polyline(const Arc& arc, const std::vector<Point>& points, Format format) {
  const int n = static_cast<int>(points.size()) - 1;
  const auto t_at = [&](int i) { return i == n ? arc.length : arc.length * i / n; };
  if (format == Format::json) {
    json j{{"start", point_json(arc.start)},
           {"alpha", arc.dir.alpha},
           {"theta", arc.dir.theta},
           {"length", arc.length},
           {"points", json::array()}};
    for (int i = 0; i <= n; ++i) {
      j["points"].push_back({{"t", t_at(i)}, {"x", points[i].x}, {"y", points[i].y}, {"z", points[i].z}});
    }
    return dump(j);
  }
  std::ostringstream os;
  const char sep = format == Format::csv ? ',' : ' ';
  os << "t" << sep << "x" << sep << "y" << sep << "z" << '\n';
  for (int i = 0; i <= n; ++i) {
    os << exact(t_at(i)) << sep << exact(points[i].x) << sep << exact(points[i].y) << sep << exact(points[i].z)
       << '\n';
  }
  return os.str();
}

std::string render_classification(const Classification& c, Format format) {
  if (format == Format::json) {
    json j{{"greater", {{"source", "fibre-like x3=1, z=1/2"}, {"triangle", triangle_json(c.greater)}}},
           {"less", {{"source", "hyperbolic-like x3=1/2, y=3"}, {"triangle", triangle_json(c.less)}}},
           {"equal",
            {{"source", "bisection between the two"},
             {"t", c.equal.t},
             {"iterations", c.equal.iterations},
             {"triangle", triangle_json(c.equal.triangle)}}}};
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "case,source,angle_sum,angle_sum_minus_pi\n"
       << "greater,fibre-like x3=1 z=1/2," << fixed6(c.greater.angle_sum) << ','
       << exact(c.greater.angle_sum - pi) << '\n'
       << "less,hyperbolic-like x3=1/2 y=3," << fixed6(c.less.angle_sum) << ',' << exact(c.less.angle_sum - pi)
       << '\n'
       << "equal,bisection t=" << exact(c.equal.t) << ',' << fixed6(c.equal.triangle.angle_sum) << ','
       << exact(c.equal.triangle.angle_sum - pi) << '\n';
    return os.str();
  }
  os << "[> pi] fibre-like right triangle x3=1, z=1/2\n" << render_triangle(c.greater, Format::plain) << '\n'
     << "[< pi] hyperbolic-like right triangle x3=1/2, y=3\n" << render_triangle(c.less, Format::plain) << '\n'
     << "[= pi] bisection between them, t_E = " << exact(c.equal.t) << '\n'
     << render_triangle(c.equal.triangle, Format::plain);
  return os.str();
}

}  // namespace nilgeo::cli

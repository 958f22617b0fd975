#include "cli.hpp"

#include "render.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace nilgeo::cli {

namespace {

// Bad user input that CLI11 itself does not catch.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw UsageError("invalid number '" + std::string(text) + "' in " + std::string(what));
  }
  return v;
}

std::vector<double> parse_list(std::string_view text, std::size_t count, std::string_view what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    values.push_back(parse_number(text.substr(pos, comma - pos), what));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.size() != count) {
    throw UsageError(std::string(what) + " expects " + std::to_string(count) + " comma-separated values, got '" +
                     std::string(text) + "'");
  }
  return values;
}

Point parse_point(const std::string& text, std::string_view what) {
  const auto v = parse_list(text, 3, what);
  return {v[0], v[1], v[2]};
}

struct Common {
  std::string format;
  std::string out_file;
  SolverConfig solver;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_file, "Write the result to FILE instead of stdout");
}

void add_solver(CLI::App* sub, Common& c) {
  auto& s = c.solver;
  sub->add_option("--solver-tol", s.position_tolerance, "Endpoint position tolerance")->capture_default_str();
  sub->add_option("--solver-max-iter", s.max_iterations, "Newton iterations per start")->capture_default_str();
  sub->add_option("--solver-alpha-grid", s.alpha_cells, "Multi-start cells in alpha")->capture_default_str();
  sub->add_option("--solver-theta-grid", s.theta_cells, "Multi-start cells in theta")->capture_default_str();
  sub->add_option("--solver-s-window", s.s_window_factor, "Arc-length window as a multiple of the Euclidean distance")
      ->capture_default_str();
  sub->add_option("--solver-ws-window", s.ws_window, "Bound on |w s|")->capture_default_str();
  sub->add_option("--solver-fd-step", s.fd_step, "Finite-difference step for the Jacobian")->capture_default_str();
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_file, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open '" + c.out_file + "' for writing");
  }
  file << text;
}

std::vector<double> parse_vary(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) {
    throw UsageError("--vary expects a:b:n, got '" + text + "'");
  }
  const double a = parse_number(std::string_view(text).substr(0, first), "--vary");
  const double b = parse_number(std::string_view(text).substr(first + 1, second - first - 1), "--vary");
  const double n_real = parse_number(std::string_view(text).substr(second + 1), "--vary");
  const int n = static_cast<int>(n_real);
  if (n < 1 || n != n_real) {
    throw UsageError("--vary point count must be a positive integer");
  }
  if (!(a > 0.0) || !(b > 0.0)) {
    throw UsageError("--vary endpoints must be positive");
  }
  std::vector<double> grid;
  for (int i = 0; i < n; ++i) {
    grid.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  }
  return grid;
}

ScanSpec parse_scan(const std::string& family, const std::string& fixed) {
  ScanSpec spec;
  if (family == "fibre" || family == "fiber") {
    spec.family = Family::fibre;
  } else if (family == "hyperbolic") {
    spec.family = Family::hyperbolic;
  } else {
    throw UsageError("--family must be fibre or hyperbolic");
  }
  const auto eq = fixed.find('=');
  if (eq == std::string::npos) {
    throw UsageError("--fixed expects name=value, got '" + fixed + "'");
  }
  const std::string name = fixed.substr(0, eq);
  if (name == "x3" || name == "x") {
    spec.fixed = Coordinate::x3;
  } else if (name == "y") {
    spec.fixed = Coordinate::y;
  } else if (name == "z") {
    spec.fixed = Coordinate::z;
  } else {
    throw UsageError("--fixed name must be x3, y or z");
  }
  spec.fixed_value = parse_number(std::string_view(fixed).substr(eq + 1), "--fixed");
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  return spec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesics, distances and geodesic-triangle angle sums in Nil geometry", "nilgeo"};
  app.require_subcommand(1);

  std::function<int()> action;

  // distance
  Common dist_opts;
  std::string dist_from, dist_to;
  auto* dist = app.add_subcommand("distance", "Geodesic distance between two points");
  dist->add_option("--from", dist_from, "Start point x,y,z")->required();
  dist->add_option("--to", dist_to, "End point x,y,z")->required();
  add_common(dist, dist_opts, "plain");
  add_solver(dist, dist_opts);
  dist->callback([&] {
    action = [&] {
      const Point p = parse_point(dist_from, "--from");
      const Point q = parse_point(dist_to, "--to");
      std::vector<ShootingSolution> sols;
      double d = 0.0;
      if (!(p == q)) {
        sols = shoot(relative_target(p, q), dist_opts.solver);
        d = sols.front().length;
      }
      emit(dist_opts, render_distance(p, q, sols, d, parse_format(dist_opts.format)), out);
      return kOk;
    };
  });

  // triangle
  Common tri_opts;
  std::string a1, a2, a3;
  auto* tri = app.add_subcommand("triangle", "Interior angles of a geodesic triangle");
  tri->add_option("--a1", a1, "Vertex A1 x,y,z")->required();
  tri->add_option("--a2", a2, "Vertex A2 x,y,z")->required();
  tri->add_option("--a3", a3, "Vertex A3 x,y,z")->required();
  add_common(tri, tri_opts, "plain");
  add_solver(tri, tri_opts);
  tri->callback([&] {
    action = [&] {
      const Triangle t{parse_point(a1, "--a1"), parse_point(a2, "--a2"), parse_point(a3, "--a3")};
      const TriangleReport rep = triangle_report(t, tri_opts.solver);
      emit(tri_opts, render_triangle(rep, parse_format(tri_opts.format)), out);
      return kOk;
    };
  });

  // table
  Common table_opts;
  std::string preset, family, fixed, vary;
  bool with_limits = false;
  auto* table = app.add_subcommand("table", "Reproduce a published table or scan a triangle family");
  auto* preset_opt = table->add_option("--preset", preset, "table1, table2 or table3")
                         ->check(CLI::IsMember({"table1", "table2", "table3"}));
  auto* family_opt = table->add_option("--family", family, "fibre or hyperbolic");
  auto* fixed_opt = table->add_option("--fixed", fixed, "Fixed coordinate, e.g. z=0.5");
  auto* vary_opt = table->add_option("--vary", vary, "Varying parameter grid a:b:n");
  preset_opt->excludes(family_opt)->excludes(fixed_opt)->excludes(vary_opt);
  family_opt->needs(fixed_opt)->needs(vary_opt);
  table->add_flag("--with-limits", with_limits, "Add symbolic rows for the parameter tending to 0 and infinity");
  add_common(table, table_opts, "csv");
  add_solver(table, table_opts);
  table->callback([&] {
    action = [&] {
      ScanSpec spec;
      std::vector<double> grid;
      std::string title;
      if (!preset.empty()) {
        const TablePreset& p = table_preset(preset);
        spec = p.spec;
        grid = p.grid;
        title = p.title;
      } else if (!family.empty()) {
        spec = parse_scan(family, fixed);
        grid = parse_vary(vary);
      } else {
        throw UsageError("table needs --preset or --family/--fixed/--vary");
      }
      const auto rows = family_scan(spec, grid, table_opts.solver);
      emit(table_opts, render_table(spec, rows, parse_format(table_opts.format), with_limits, title), out);
      int code = kOk;
      for (const auto& r : rows) {
        if (!r.ok) {
          err << "row " << fixed6(r.parameter) << " failed: " << r.error << '\n';
          code = kSolverFailure;
        }
      }
      return code;
    };
  });

  // find-pi
  Common pi_opts;
  std::string hyp_text, fib_text;
  double tol = 1e-6;
  auto* find_pi = app.add_subcommand("find-pi", "Bisect for a triangle with interior angle sum pi");
  find_pi->add_option("--hyperbolic", hyp_text, "Hyperbolic-like end x3,y (sum < pi)")->required();
  find_pi->add_option("--fibre", fib_text, "Fibre-like end x3,z (sum > pi)")->required();
  find_pi->add_option("--tol", tol, "Tolerance on |sum - pi|")->capture_default_str();
  add_common(find_pi, pi_opts, "plain");
  add_solver(find_pi, pi_opts);
  find_pi->callback([&] {
    action = [&] {
      const auto h = parse_list(hyp_text, 2, "--hyperbolic");
      const auto f = parse_list(fib_text, 2, "--fibre");
      if (!(h[0] > 0 && h[1] > 0 && f[0] > 0 && f[1] > 0)) {
        throw UsageError("find-pi parameters must be positive");
      }
      const PiSumResult res = find_pi_sum(HyperbolicParams{h[0], h[1]}, FibreParams{f[0], f[1]}, tol, pi_opts.solver);
      emit(pi_opts, render_pi_sum(res, tol, parse_format(pi_opts.format)), out);
      return kOk;
    };
  });

  // geodesic
  Common geo_opts;
  double alpha = 0.0, theta = 0.0, length = 1.0;
  int samples = 100;
  std::string start_text = "0,0,0";
  auto* geo = app.add_subcommand("geodesic", "Export a sampled geodesic polyline");
  geo->add_option("--alpha", alpha, "Initial heading (radians)")->capture_default_str();
  geo->add_option("--theta", theta, "Initial pitch (radians)")->capture_default_str();
  geo->add_option("--length", length, "Arc length")->capture_default_str()->check(CLI::NonNegativeNumber);
  geo->add_option("--samples", samples, "Number of segments")->capture_default_str()->check(CLI::PositiveNumber);
  geo->add_option("--start", start_text, "Start point x,y,z")->capture_default_str();
  add_common(geo, geo_opts, "csv");
  geo->callback([&] {
    action = [&] {
      const Arc arc{parse_point(start_text, "--start"), Direction::normalized(alpha, theta), length};
      emit(geo_opts, render_polyline(arc, sample_geodesic(arc, samples), parse_format(geo_opts.format)), out);
      return kOk;
    };
  });

  // classify
  Common cls_opts;
  auto* cls = app.add_subcommand("classify", "One triangle each with angle sum > pi, < pi and = pi");
  add_common(cls, cls_opts, "plain");
  add_solver(cls, cls_opts);
  cls->callback([&] {
    action = [&] {
      emit(cls_opts, render_classification(classify_examples(cls_opts.solver), parse_format(cls_opts.format)), out);
      return kOk;
    };
  });

  std::vector<const char*> argv{"nilgeo"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace nilgeo::cli

#pragma once

// Text renderings of library results for the command-line tool. Tables
// and scalars use 6 decimals; JSON carries full double precision.

#include "nilgeo/nilgeo.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nilgeo::cli {

enum class Format { plain, csv, json };

/// Throws std::invalid_argument for anything but plain/csv/json.
Format parse_format(std::string_view name);

std::string fixed6(double v);
/// Shortest text that reads back as the same double.
std::string exact(double v);

std::string render_distance(const Point& from, const Point& to, const std::vector<ShootingSolution>& solutions,
                            double distance, Format format);

std::string render_triangle(const TriangleReport& rep, Format format);

/// Symbolic row for a parameter tending to 0 or infinity.
struct LimitRow {
  std::string parameter;
  std::string theta;
  std::string d13;
  std::string omega1;
  std::string omega3;
  std::string angle_sum;
};

/// Symbolic rows for the varying parameter tending to 0 and infinity;
/// empty when the limits of this scan are not known.
std::vector<LimitRow> limit_rows(const ScanSpec& spec);

std::string render_table(const ScanSpec& spec, const std::vector<TableRow>& rows, Format format, bool with_limits,
                         std::string_view title);

std::string render_pi_sum(const PiSumResult& res, double tol, Format format);

std::string render_polyline(const Arc& arc, const std::vector<Point>& points, Format format);

std::string render_classification(const Classification& c, Format format);

}  // namespace nilgeo::cli

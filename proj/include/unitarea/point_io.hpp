#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "unitarea/geometry.hpp"

namespace unitarea {

// Point-set text format: one `x y` per line, each coordinate an integer or
// `num/den`. Lines starting with `#` and blank lines are skipped. Parse
// errors name the source and the 1-based line number.
std::vector<Point> read_points(std::istream& in, const std::string& source = "<stream>");
std::vector<Point> read_points_file(const std::string& path);

void write_points(std::ostream& out, std::span<const Point> points);
void write_points_file(const std::string& path, std::span<const Point> points);

}  // namespace unitarea

#include "unitarea/point_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "unitarea/error.hpp"

namespace unitarea {

std::vector<Point> read_points(std::istream& in, const std::string& source) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string xs;
    std::string ys;
    std::string extra;
    fields >> xs >> ys;
    if (ys.empty() || (fields >> extra)) {
      throw Error(Errc::Parse, source + ":" + std::to_string(line_no) + ": expected two coordinates");
    }
    Rational x;
    Rational y;
    if (!try_parse_rational(xs, x) || !try_parse_rational(ys, y)) {
      throw Error(Errc::Parse, source + ":" + std::to_string(line_no) + ": bad coordinate in '" + line + "'");
    }
    points.emplace_back(std::move(x), std::move(y));
  }
  return points;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  return read_points(in, path);
}

void write_points(std::ostream& out, std::span<const Point> points) {
  for (const Point& p : points) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
}

void write_points_file(const std::string& path, std::span<const Point> points) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write " + path);
  write_points(out, points);
}

}  // namespace unitarea

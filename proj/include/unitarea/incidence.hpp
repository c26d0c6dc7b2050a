#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "unitarea/geometry.hpp"
#include "unitarea/incidence_pair.hpp"

namespace unitarea {

struct SpannedLine {
  Line line;
  std::vector<Point> members;  // sorted lexicographically, size >= 2
};

// Every line through at least two points of S, with all of its points.
// Sorted by the canonical (A, B, C) triple. Throws DuplicatePoints.
std::vector<SpannedLine> spanned_lines(std::span<const Point> points);

// Lines with at least k points; k >= 2.
std::vector<SpannedLine> rich_lines(std::span<const Point> points, std::size_t k);
std::vector<SpannedLine> filter_rich(const std::vector<SpannedLine>& lines, std::size_t k);

// The incidence set Q: one entry per (k-rich line, point on it), ordered by
// line then point. Throws VerticalLinePresent if a rich line is vertical.
std::vector<IncidencePairParam> build_incidence_set(std::span<const Point> points, std::size_t k);
std::vector<IncidencePairParam> build_incidence_set(const std::vector<SpannedLine>& rich);

struct IncidenceStats {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;  // k-rich lines
  std::size_t N = 0;  // |Q|
  Rational ratio_m;   // m·k³/n²
  Rational ratio_N;   // N·k²/n²
};

// Throws InvariantViolation if m·C(k,2) > C(n,2).
IncidenceStats incidence_stats(std::span<const Point> points, std::size_t k);

// Number of points of S on any line, via the spanned-line table.
class LineIndex {
 public:
  explicit LineIndex(std::span<const Point> points);
  LineIndex(std::span<const Point> points, const std::vector<SpannedLine>& lines);

  // Exact count of points of S on l.
  std::size_t count_on(const Line& l) const;
  bool is_rich(const Line& l, std::size_t k) const;

  const std::vector<SpannedLine>& lines() const { return lines_; }

 private:
  std::vector<Point> points_;
  std::vector<SpannedLine> lines_;
  std::unordered_map<Line, std::size_t, LineHash> sizes_;
};

}  // namespace unitarea

#include "unitarea/matching.hpp"

#include <unordered_set>

#include "unitarea/error.hpp"
#include "unitarea/parallel.hpp"

namespace unitarea {

namespace {

// Product form against 2·signed_area·(w − κ); signed_area is +A or −A.
bool product_form_holds(const IncidencePairParam& p1, const IncidencePairParam& p2, const Rational& signed_area) {
  if (p1.kappa == p2.kappa) return false;
  const Rational dx = p2.a - p1.a;
  const Rational dy = p2.b - p1.b;
  const Rational lhs = (dy - p1.kappa * dx) * (dy - p2.kappa * dx);
  const Rational rhs = 2 * signed_area * (p2.kappa - p1.kappa);
  return lhs == rhs;
}

}  // namespace

bool matches_ccw(const IncidencePairParam& p1, const IncidencePairParam& p2, const Rational& area) {
  return product_form_holds(p1, p2, area);
}

bool matches_cw(const IncidencePairParam& p1, const IncidencePairParam& p2, const Rational& area) {
  const Rational neg = -area;
  return product_form_holds(p1, p2, neg);
}

Point third_vertex(const IncidencePairParam& p1, const IncidencePairParam& p2) {
  if (p1.kappa == p2.kappa) throw Error(Errc::ParallelSlopes, "third_vertex needs distinct slopes");
  return intersection_point(line_with_slope(p1.point, p2.kappa), line_with_slope(p2.point, p1.kappa));
}

std::array<Line, 3> top_lines(const Triangle& t) {
  const auto& v = t.vertices;
  if (sgn(signed_area2(v[0], v[1], v[2])) == 0) throw Error(Errc::DegenerateTriangle, "collinear vertices");
  std::array<Line, 3> out = {line_through(v[1], v[2]), line_through(v[2], v[0]), line_through(v[0], v[1])};
  for (int i = 0; i < 3; ++i) out[i] = parallel_through(out[i], v[i]);
  return out;
}

TriangleRichness classify_triangle(const LineIndex& index, std::size_t k, const Triangle& t) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  TriangleRichness r{t, 0};
  for (const Line& top : top_lines(t)) {
    if (index.is_rich(top, k)) ++r.rich_top_lines;
  }
  return r;
}

TriangleRichness classify_triangle(std::span<const Point> points, std::size_t k, const Triangle& t) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  return classify_triangle(LineIndex(points), k, t);
}

std::uint64_t count_matching_pairs(std::span<const IncidencePairParam> q, const Rational& area, bool require_q_in_s,
                                   std::span<const Point> points, unsigned threads) {
  if (sgn(area) <= 0) throw Error(Errc::ZeroArea, "area must be positive");
  std::unordered_set<Point, PointHash> members;
  if (require_q_in_s) members.insert(points.begin(), points.end());
  return parallel_sum(q.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::uint64_t count = 0;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (i == j || !matches_ccw(q[i], q[j], area)) continue;
        if (require_q_in_s && !members.contains(third_vertex(q[i], q[j]))) continue;
        ++count;
      }
    }
    return count;
  });
}

}  // namespace unitarea

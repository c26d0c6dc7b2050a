#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "unitarea/geometry.hpp"
#include "unitarea/incidence.hpp"
#include "unitarea/incidence_pair.hpp"

namespace unitarea {

// Ordered matching with ccw orientation: with (a,b,κ) = p1 and (x,y,w) = p2,
//   (y − b − κ(x − a))·(y − b − w(x − a)) = 2A·(w − κ)  and  w ≠ κ.
// Equivalent to: ℓ1 and ℓ2 meet at o and signed_area2(o, p1, p2) = 2A.
bool matches_ccw(const IncidencePairParam& p1, const IncidencePairParam& p2, const Rational& area = Rational(1));

// Same with −2A on the right: p2 lies clockwise from p1 around o.
bool matches_cw(const IncidencePairParam& p1, const IncidencePairParam& p2, const Rational& area = Rational(1));

// Intersection of the line through p1 with slope κ2 and the line through p2
// with slope κ1, i.e. p1 + p2 − o. Throws ParallelSlopes when κ1 = κ2.
Point third_vertex(const IncidencePairParam& p1, const IncidencePairParam& p2);

struct Triangle {
  std::array<Point, 3> vertices;
};

// top[i] passes through vertices[i] parallel to the opposite side.
// Throws DegenerateTriangle for collinear vertices.
std::array<Line, 3> top_lines(const Triangle& t);

struct TriangleRichness {
  Triangle triangle;
  int rich_top_lines = 0;
};

// k >= 2 (InvalidArgument otherwise).
TriangleRichness classify_triangle(std::span<const Point> points, std::size_t k, const Triangle& t);
TriangleRichness classify_triangle(const LineIndex& index, std::size_t k, const Triangle& t);

// Ordered pairs (P1, P2) of Q with matches_ccw at the given area. With
// require_q_in_s only pairs whose third vertex is a point of S are counted.
std::uint64_t count_matching_pairs(std::span<const IncidencePairParam> q, const Rational& area, bool require_q_in_s,
                                   std::span<const Point> points, unsigned threads = 1);

}  // namespace unitarea

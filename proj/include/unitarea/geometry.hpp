#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "unitarea/rational.hpp"

namespace unitarea {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}
};

bool operator==(const Point& p, const Point& q);
inline bool operator!=(const Point& p, const Point& q) { return !(p == q); }
// Lexicographic on (x, y).
bool operator<(const Point& p, const Point& q);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

std::string to_string(const Point& p);

// A·x + B·y + C = 0 with (A,B,C) a primitive integer triple whose first
// nonzero entry among (A,B) is positive. Two Line objects describe the same
// set iff they compare equal.
class Line {
 public:
  // Normalizes; throws InvalidArgument when A = B = 0.
  static Line from_coefficients(const Integer& a, const Integer& b, const Integer& c);
  static Line from_rational(const Rational& a, const Rational& b, const Rational& c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  bool is_vertical() const { return b_ == 0; }
  Rational evaluate(const Point& p) const;
  bool contains(const Point& p) const { return sgn(evaluate(p)) == 0; }
  // Same direction (parallel or identical).
  bool parallel_to(const Line& other) const;

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  friend bool operator!=(const Line& l, const Line& m) { return !(l == m); }
  // Lexicographic on (A, B, C); used only for deterministic output order.
  friend bool operator<(const Line& l, const Line& m);

 private:
  Line(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Integer a_;
  Integer b_;
  Integer c_;
};

struct LineHash {
  std::size_t operator()(const Line& l) const noexcept;
};

std::string to_string(const Line& l);

// Twice the signed area of (p, q, r): (q − p) × (r − p).
Rational signed_area2(const Point& p, const Point& q, const Point& r);

// Throws IdenticalPoints when p == q.
Line line_through(const Point& p, const Point& q);

// Line through p with the given slope.
Line line_with_slope(const Point& p, const Rational& slope);

// Line through p parallel to l.
Line parallel_through(const Line& l, const Point& p);

// −A/B; throws VerticalLine when B = 0.
Rational slope(const Line& l);

enum class IntersectionKind { Point, Parallel, Identical };

struct LineIntersection {
  IntersectionKind kind;
  Point point;  // meaningful only for IntersectionKind::Point
};

LineIntersection intersect(const Line& l1, const Line& l2);

// Throws ParallelSlopes unless the lines meet in exactly one point.
Point intersection_point(const Line& l1, const Line& l2);

// (x, y) ↦ (x + t·y, y). Unimodular, so every signed_area2 is preserved.
std::vector<Point> shear(std::span<const Point> points, const Rational& t);
Point shear(const Point& p, const Rational& t);

// First t in 0, 1, 1/2, 1/3, ... such that no two points of shear(points, t)
// share an x coordinate, i.e. no spanned line is vertical.
Rational find_shear(std::span<const Point> points);

// Throws DuplicatePoints if two entries coincide.
void require_distinct(std::span<const Point> points);

}  // namespace unitarea

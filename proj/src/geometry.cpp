#include "unitarea/geometry.hpp"

#include <unordered_set>

#include "unitarea/error.hpp"

namespace unitarea {

bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

bool operator<(const Point& p, const Point& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t seed = hash_value(p.x);
  hash_combine(seed, hash_value(p.y));
  return seed;
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Line Line::from_coefficients(const Integer& a, const Integer& b, const Integer& c) {
  if (a == 0 && b == 0) throw Error(Errc::InvalidArgument, "line needs (A,B) != (0,0)");
  Integer g = gcd(gcd(a, b), c);
  Integer na = a / g;
  Integer nb = b / g;
  Integer nc = c / g;
  const int lead = na != 0 ? sgn(na) : sgn(nb);
  if (lead < 0) {
    na = -na;
    nb = -nb;
    nc = -nc;
  }
  return Line(std::move(na), std::move(nb), std::move(nc));
}

Line Line::from_rational(const Rational& a, const Rational& b, const Rational& c) {
  const Integer l = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
  const Rational scale(l);
  const Rational sa = a * scale;
  const Rational sb = b * scale;
  const Rational sc = c * scale;
  return from_coefficients(sa.get_num(), sb.get_num(), sc.get_num());
}

Rational Line::evaluate(const Point& p) const {
  Rational r = Rational(a_) * p.x + Rational(b_) * p.y + Rational(c_);
  return r;
}

bool Line::parallel_to(const Line& other) const { return a_ * other.b_ == b_ * other.a_; }

bool operator<(const Line& l, const Line& m) {
  if (l.a_ != m.a_) return l.a_ < m.a_;
  if (l.b_ != m.b_) return l.b_ < m.b_;
  return l.c_ < m.c_;
}

std::size_t LineHash::operator()(const Line& l) const noexcept {
  std::size_t seed = hash_value(l.a());
  hash_combine(seed, hash_value(l.b()));
  hash_combine(seed, hash_value(l.c()));
  return seed;
}

std::string to_string(const Line& l) {
  return "[" + to_string(l.a()) + ", " + to_string(l.b()) + ", " + to_string(l.c()) + "]";
}

Rational signed_area2(const Point& p, const Point& q, const Point& r) {
  Rational v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return v;
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw Error(Errc::IdenticalPoints, "line_through " + to_string(p));
  // (y_q − y_p)·x − (x_q − x_p)·y + (x_q·y_p − x_p·y_q) = 0
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  const Rational c = q.x * p.y - p.x * q.y;
  return Line::from_rational(a, b, c);
}

Line line_with_slope(const Point& p, const Rational& slope) {
  // slope·x − y + (y_p − slope·x_p) = 0
  return Line::from_rational(slope, Rational(-1), p.y - slope * p.x);
}

Line parallel_through(const Line& l, const Point& p) {
  const Rational c = -(Rational(l.a()) * p.x + Rational(l.b()) * p.y);
  return Line::from_rational(Rational(l.a()), Rational(l.b()), c);
}

Rational slope(const Line& l) {
  if (l.is_vertical()) throw Error(Errc::VerticalLine, "slope of " + to_string(l));
  return make_rational(-l.a(), l.b());
}

LineIntersection intersect(const Line& l1, const Line& l2) {
  const Integer det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) {
    return {l1 == l2 ? IntersectionKind::Identical : IntersectionKind::Parallel, Point{}};
  }
  // Cramer's rule on A·x + B·y = −C.
  const Integer xn = l1.b() * l2.c() - l2.b() * l1.c();
  const Integer yn = l2.a() * l1.c() - l1.a() * l2.c();
  return {IntersectionKind::Point, Point{make_rational(xn, det), make_rational(yn, det)}};
}

Point intersection_point(const Line& l1, const Line& l2) {
  LineIntersection hit = intersect(l1, l2);
  if (hit.kind != IntersectionKind::Point) {
    throw Error(Errc::ParallelSlopes, to_string(l1) + " and " + to_string(l2) + " do not cross");
  }
  return hit.point;
}

Point shear(const Point& p, const Rational& t) { return Point{p.x + t * p.y, p.y}; }

std::vector<Point> shear(std::span<const Point> points, const Rational& t) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(shear(p, t));
  return out;
}

Rational find_shear(std::span<const Point> points) {
  require_distinct(points);
  for (long step = 0;; ++step) {
    const Rational t = step == 0 ? Rational(0) : make_rational(1, step);
    std::unordered_set<Rational, decltype([](const Rational& r) { return hash_value(r); })> xs;
    xs.reserve(points.size() * 2);
    bool vertical = false;
    for (const Point& p : points) {
      if (!xs.insert(p.x + t * p.y).second) {
        vertical = true;
        break;
      }
    }
    if (!vertical) return t;
  }
}

void require_distinct(std::span<const Point> points) {
  std::unordered_set<Point, PointHash> seen;
  seen.reserve(points.size() * 2);
  for (const Point& p : points) {
    if (!seen.insert(p).second) throw Error(Errc::DuplicatePoints, "repeated point " + to_string(p));
  }
}

}  // namespace unitarea

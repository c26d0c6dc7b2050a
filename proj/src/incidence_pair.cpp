#include "unitarea/incidence_pair.hpp"

#include "unitarea/error.hpp"

namespace unitarea {

IncidencePairParam IncidencePairParam::from_triple(const Rational& a, const Rational& b, const Rational& kappa) {
  Point p{a, b};
  return IncidencePairParam{a, b, kappa, line_with_slope(p, kappa), p};
}

IncidencePairParam to_param(const Line& l, const Point& p) {
  if (l.is_vertical()) throw Error(Errc::VerticalLine, to_string(l));
  if (!l.contains(p)) throw Error(Errc::PointNotOnLine, to_string(p) + " not on " + to_string(l));
  return IncidencePairParam{p.x, p.y, slope(l), l, p};
}

bool operator==(const IncidencePairParam& p, const IncidencePairParam& q) {
  return p.a == q.a && p.b == q.b && p.kappa == q.kappa;
}

bool operator<(const IncidencePairParam& p, const IncidencePairParam& q) {
  if (p.a != q.a) return p.a < q.a;
  if (p.b != q.b) return p.b < q.b;
  return p.kappa < q.kappa;
}

std::string to_string(const IncidencePairParam& p) {
  return to_string(p.a) + "," + to_string(p.b) + "," + to_string(p.kappa);
}

}  // namespace unitarea

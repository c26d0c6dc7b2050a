#include "unitarea/curves.hpp"

#include <algorithm>
#include <cmath>

#include "unitarea/error.hpp"
#include "unitarea/matching.hpp"

namespace unitarea {

namespace {

constexpr std::array<std::pair<int, int>, 10> kTermOrder = {{
    {3, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0},
}};

// Direction annihilated by the homogeneous form a·x + b·y.
Point kernel_direction(const Line& u) { return Point{Rational(u.b()), Rational(-u.a())}; }

Poly2 form_poly(const Line& l) { return Poly2::linear(Rational(l.a()), Rational(l.b()), Rational(l.c())); }

// Ratio λ with p = λ·q, both nonzero homogeneous of the same degree.
Rational proportionality(const Poly2& p, const Poly2& q) {
  const int d = q.degree();
  for (int i = d; i >= 0; --i) {
    const Rational qc = q.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(d - i));
    if (sgn(qc) != 0) return p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(d - i)) / qc;
  }
  throw Error(Errc::InvalidArgument, "zero form");
}

// q₂(d) for f₃ = u·q₂ with u(d) = 0: the first-order term of f₃(d + s·n)
// divided by u(n), n the normal of u.
Rational cofactor_at_kernel(const Poly2& f3, const Line& u) {
  const Point d = kernel_direction(u);
  const Rational nx(u.a());
  const Rational ny(u.b());
  const UPoly along = f3.restrict_to_line(d, nx, ny);
  return along.coeff(1) / (nx * nx + ny * ny);
}

struct LineShape {
  Line double_line;
  Line simple_line;
};

// Double-factor analysis; throws NonSimpleFactorUnsupported if f is not
// λ(u + c₁)²(v + c₂) + β(u + c₁) + γ.
LineShape double_factor_asymptotes(const Poly2& f, const Line& u, const Line& v) {
  const Poly2 f3 = f.homogeneous(3);
  const Poly2 f2 = f.homogeneous(2);
  const Poly2 uh = form_poly(u);
  const Poly2 vh = form_poly(v);
  const Rational lambda = proportionality(f3, uh * uh * vh);
  // f₂ = u·(α·u + β·v) with α = λc₂, β = 2λc₁. Solve by matching the
  // coefficients of the 2×2 basis change (u, v) -> (x, y).
  // Write f₂ = u·r with r linear homogeneous.
  Rational rx;
  Rational ry;
  {
    // Divide f₂ by u along the x or y variable with a nonzero coefficient.
    const Rational ua(u.a());
    const Rational ub(u.b());
    const Rational c20 = f2.coeff(2, 0);
    const Rational c11 = f2.coeff(1, 1);
    const Rational c02 = f2.coeff(0, 2);
    // (ua·x + ub·y)(rx·x + ry·y) = ua·rx x² + (ua·ry + ub·rx) xy + ub·ry y²
    if (sgn(ua) != 0) {
      rx = c20 / ua;
      ry = sgn(ub) != 0 ? c02 / ub : (c11 / ua);
    } else {
      ry = c02 / ub;
      rx = c11 / ub;
    }
    if (ua * rx != c20 || ua * ry + ub * rx != c11 || ub * ry != c02) {
      throw Error(Errc::NonSimpleFactorUnsupported, "quadratic part not divisible by the double factor");
    }
  }
  // r = α·u + β·v: solve [ua va; ub vb]·(α, β) = (rx, ry).
  const Rational ua(u.a()), ub(u.b()), va(v.a()), vb(v.b());
  const Rational det = ua * vb - va * ub;
  const Rational alpha = (rx * vb - va * ry) / det;
  const Rational beta = (ua * ry - rx * ub) / det;
  const Rational c1 = beta / (2 * lambda);
  const Rational c2 = alpha / lambda;
  const Poly2 u_full = Poly2::linear(ua, ub, c1);
  const Poly2 v_full = Poly2::linear(va, vb, c2);
  const Poly2 rest = f - lambda * (u_full * u_full * v_full);
  if (rest.degree() > 1) {
    throw Error(Errc::NonSimpleFactorUnsupported, "remainder is not linear");
  }
  const Poly2 rest_lin = rest.homogeneous(1);
  if (!rest_lin.is_zero() && ua * rest_lin.coeff(0, 1) != ub * rest_lin.coeff(1, 0)) {
    throw Error(Errc::NonSimpleFactorUnsupported, "linear remainder not parallel to the double factor");
  }
  return {Line::from_rational(ua, ub, c1), Line::from_rational(va, vb, c2)};
}

Line simple_factor_asymptote(const Poly2& f, const Line& u) {
  const Rational q2 = cofactor_at_kernel(f.homogeneous(f.degree()), u);
  const Rational f2 = f.homogeneous(f.degree() - 1)(kernel_direction(u));
  return Line::from_rational(Rational(u.a()), Rational(u.b()), f2 / q2);
}

IncidencePairParam pair_from_line_point(const Line& l, const Point& p) { return to_param(l, p); }

// y-coefficient-1 form of a non-vertical line: y − κx − β.
LinearForm slope_form(const Line& l) {
  if (l.is_vertical()) throw Error(Errc::VerticalLine, to_string(l));
  const Rational b(l.b());
  return LinearForm{Rational(l.a()) / b, Rational(1), Rational(l.c()) / b};
}

}  // namespace

// ---- BivariateCubic ----------------------------------------------------------

BivariateCubic BivariateCubic::from_poly(const Poly2& p) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial is not a curve");
  if (p.degree() > 3) throw Error(Errc::InvalidArgument, "degree above 3");
  Integer l = 1;
  for (auto [i, j] : kTermOrder) l = lcm(l, p.coeff(i, j).get_den());
  Integer g = 0;
  for (auto [i, j] : kTermOrder) g = gcd(g, Integer(p.coeff(i, j) * l));
  Rational scale = make_rational(l, g);
  for (auto [i, j] : kTermOrder) {
    const int s = sgn(p.coeff(i, j));
    if (s != 0) {
      if (s < 0) scale = -scale;
      break;
    }
  }
  return BivariateCubic(scale * p);
}

BivariateCubic BivariateCubic::from_terms(const std::vector<std::tuple<int, int, Rational>>& terms) {
  Poly2 p;
  for (const auto& [i, j, c] : terms) {
    if (i < 0 || j < 0 || i + j > 3) throw Error(Errc::InvalidArgument, "term outside degree 3");
    p.add_to(static_cast<std::size_t>(i), static_cast<std::size_t>(j), c);
  }
  return from_poly(p);
}

std::vector<std::tuple<int, int, Rational>> BivariateCubic::terms() const {
  std::vector<std::tuple<int, int, Rational>> out;
  for (auto [i, j] : kTermOrder) {
    Rational c = coeff(i, j);
    if (sgn(c) != 0) out.emplace_back(i, j, std::move(c));
  }
  return out;
}

std::string to_string(CurveTag tag) {
  switch (tag) {
    case CurveTag::General: return "General";
    case CurveTag::PointOnLine1: return "PointOnLine1";
    case CurveTag::PointOnLine2: return "PointOnLine2";
    case CurveTag::Empty: return "Empty";
    case CurveTag::Undefined: return "Undefined";
  }
  return "?";
}

std::optional<CurveTag> parse_curve_tag(const std::string& name) {
  for (CurveTag t : {CurveTag::General, CurveTag::PointOnLine1, CurveTag::PointOnLine2, CurveTag::Empty,
                     CurveTag::Undefined}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

// ---- gamma_star --------------------------------------------------------------

LinearFormBundle linear_form_bundle(const IncidencePairParam& p1, const IncidencePairParam& p2) {
  const Rational &a1 = p1.a, &b1 = p1.b, &k1 = p1.kappa;
  const Rational &a2 = p2.a, &b2 = p2.b, &k2 = p2.kappa;
  LinearFormBundle bd;
  bd.L1 = {-k1, Rational(1), k1 * a1 - b1};
  bd.L2 = {-k2, Rational(1), k2 * a2 - b2};
  bd.L3 = {b2 - b1, a1 - a2, a2 * b1 - a1 * b2};
  bd.L4 = {-k2, Rational(1), k2 * a1 - b1};
  bd.L5 = {-k1, Rational(1), k1 * a2 - b2};
  bd.C = k1 - k2;
  bd.D = 2 * k1 * k2 * (a2 - a1) - (k1 + k2) * (b2 - b1);
  bd.E = 2 * (b2 - b1) - (k1 + k2) * (a2 - a1);
  bd.F = k1 * k2 * (a1 * a1 - a2 * a2) + (k1 + k2) * (a2 * b2 - a1 * b1) + (b1 * b1 - b2 * b2);
  bd.L6 = {bd.D, bd.E, bd.F};
  return bd;
}

CurveCase gamma_star(const IncidencePairParam& p1, const IncidencePairParam& p2) {
  if (p1 == p2) throw Error(Errc::SamePair, to_string(p1));
  CurveCase out;
  if (p1.point == p2.point) {
    out.tag = CurveTag::Empty;
    return out;
  }
  if (p1.line == p2.line) {
    out.tag = CurveTag::Undefined;
    return out;
  }
  LinearFormBundle bd = linear_form_bundle(p1, p2);
  if (p1.line.contains(p2.point)) {
    out.tag = CurveTag::PointOnLine1;
    bd.s = bd.L4.c - bd.L2.c;  // L4 − L2 is constant here
  } else if (p2.line.contains(p1.point)) {
    out.tag = CurveTag::PointOnLine2;
    bd.s = bd.L1.c - bd.L5.c;
  } else {
    out.tag = CurveTag::General;
  }
  const Poly2 f = bd.L1.poly() * bd.L2.poly() * bd.L3.poly() + Rational(2) * bd.L6.poly() +
                  Poly2::constant(4 * bd.C);
  out.curve = BivariateCubic::from_poly(f);
  out.bundle = std::move(bd);
  return out;
}

bool Surface::contains(const Rational& x, const Rational& y, const Rational& w) const {
  return matches_ccw(generator, IncidencePairParam::from_triple(x, y, w));
}

std::optional<Rational> lift_to_surface(const IncidencePairParam& g, const Rational& x, const Rational& y) {
  const Rational l = y - g.b - g.kappa * (x - g.a);
  const Rational den = l * (x - g.a) + 2;
  if (sgn(den) == 0) return std::nullopt;
  Rational w = (l * (y - g.b) + 2 * g.kappa) / den;
  return w;
}

// ---- leading form ------------------------------------------------------------

LeadingFormFactorization leading_form_factors(const BivariateCubic& f) {
  const int deg = f.degree();
  LeadingFormFactorization out;
  if (deg <= 0) return out;
  const Poly2 h = f.poly().homogeneous(deg);
  // h = y^m · g(x, y) with g(x, 1) of degree deg − m.
  std::size_t m = 0;
  while (sgn(h.coeff(static_cast<std::size_t>(deg) - m, m)) == 0) ++m;
  if (m > 0) out.linear.push_back({Line::from_coefficients(0, 1, 0), m});
  std::vector<Rational> gc(static_cast<std::size_t>(deg) - m + 1);
  for (std::size_t i = 0; i < gc.size(); ++i) gc[i] = h.coeff(i, static_cast<std::size_t>(deg) - i);
  UPoly g(std::move(gc));
  for (const Rational& r : rational_roots(g)) {
    const std::size_t mult = root_multiplicity(g, r);
    // x − r·y
    out.linear.push_back({Line::from_rational(Rational(1), -r, Rational(0)), mult});
    for (std::size_t k = 0; k < mult; ++k) g = divmod(g, UPoly(std::vector<Rational>{-r, Rational(1)})).first;
  }
  if (g.degree() >= 2) {
    Poly2 q;
    const int dq = g.degree();
    for (int i = 0; i <= dq; ++i) q.set(static_cast<std::size_t>(i), static_cast<std::size_t>(dq - i), g.coeff(i));
    out.irreducible_part = q;
  }
  std::sort(out.linear.begin(), out.linear.end(),
            [](const LinearFactor& l, const LinearFactor& r) { return l.form < r.form; });
  return out;
}

std::vector<Line> asymptotes(const BivariateCubic& f) {
  const LeadingFormFactorization fac = leading_form_factors(f);
  if (fac.linear.empty()) throw Error(Errc::InvalidArgument, "leading form has no rational linear factor");
  std::vector<Line> out;
  const bool all_simple = std::all_of(fac.linear.begin(), fac.linear.end(),
                                      [](const LinearFactor& lf) { return lf.multiplicity == 1; });
  if (all_simple) {
    for (const LinearFactor& lf : fac.linear) out.push_back(simple_factor_asymptote(f.poly(), lf.form));
  } else if (f.degree() == 3 && fac.linear.size() == 2) {
    const auto& a = fac.linear[0];
    const auto& b = fac.linear[1];
    const Line& dbl = a.multiplicity == 2 ? a.form : b.form;
    const Line& sgl = a.multiplicity == 2 ? b.form : a.form;
    const LineShape shape = double_factor_asymptotes(f.poly(), dbl, sgl);
    out = {shape.double_line, shape.simple_line};
  } else {
    throw Error(Errc::NonSimpleFactorUnsupported, "leading form shape not handled");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- reconstruction ----------------------------------------------------------

namespace {

std::pair<IncidencePairParam, IncidencePairParam> ordered(IncidencePairParam p, IncidencePairParam q) {
  if (q < p) std::swap(p, q);
  return {std::move(p), std::move(q)};
}

void verify_round_trip(const BivariateCubic& f, const IncidencePairParam& p, const IncidencePairParam& q) {
  if (p == q) throw Error(Errc::NotAGammaStar, "reconstruction produced identical pairs");
  const CurveCase c = gamma_star(p, q);
  if (!c.curve || *c.curve != f) throw Error(Errc::NotAGammaStar, "recomputed curve differs from the input");
}

std::pair<IncidencePairParam, IncidencePairParam> reconstruct_general(const BivariateCubic& f,
                                                                      const std::vector<Line>& lines) {
  if (lines.size() != 3) throw Error(Errc::NotAGammaStar, "expected three asymptotes");
  const Poly2 triple = form_poly(lines[0]) * form_poly(lines[1]) * form_poly(lines[2]);
  const Rational nu = proportionality(f.poly().homogeneous(3), triple.homogeneous(3));
  const Poly2 rest = f.poly() - nu * triple;
  if (rest.degree() > 1) throw Error(Errc::NotAGammaStar, "f − ν·Λ1Λ2Λ3 is not linear");
  const Poly2 lin = rest.homogeneous(1);
  if (lin.is_zero()) throw Error(Errc::NotAGammaStar, "remainder has no direction");
  const Rational da = lin.coeff(1, 0);
  const Rational db = lin.coeff(0, 1);

  // vertices[i] is opposite lines[i].
  std::array<Point, 3> vertices = {intersection_point(lines[1], lines[2]), intersection_point(lines[0], lines[2]),
                                   intersection_point(lines[0], lines[1])};
  int apex = -1;
  for (int i = 0; i < 3; ++i) {
    const Point& v = vertices[i];
    const Point& w1 = vertices[(i + 1) % 3];
    const Point& w2 = vertices[(i + 2) % 3];
    const Rational mx = (w1.x + w2.x) / 2 - v.x;
    const Rational my = (w1.y + w2.y) / 2 - v.y;
    if (sgn(da * mx + db * my) == 0) {
      if (apex >= 0) throw Error(Errc::AmbiguousMedian, "two medians are parallel to the linear remainder");
      apex = i;
    }
  }
  if (apex < 0) throw Error(Errc::NotAGammaStar, "no median parallel to the linear remainder");
  const Point& o = vertices[apex];
  const Point& p = vertices[(apex + 1) % 3];
  const Point& q = vertices[(apex + 2) % 3];
  auto result = ordered(pair_from_line_point(line_through(o, p), p), pair_from_line_point(line_through(o, q), q));
  verify_round_trip(f, result.first, result.second);
  return result;
}

std::pair<IncidencePairParam, IncidencePairParam> reconstruct_point_on_line(const BivariateCubic& f,
                                                                            const LineShape& shape) {
  // The pair whose line carries both points owns the double line; the other
  // pair's point is where the two lines cross.
  const Point shared = intersection_point(shape.double_line, shape.simple_line);
  const LinearForm ld = slope_form(shape.double_line);
  const LinearForm ls = slope_form(shape.simple_line);
  // Walk along the simple line: direction (1, κ_s).
  const Rational ks = -ls.a;
  const UPoly along = f.poly().restrict_to_line(shared, Rational(1), ks);
  if (along.degree() != 1) throw Error(Errc::NotAGammaStar, "curve does not cross the simple asymptote once");
  const Rational t = -along.coeff(0) / along.coeff(1);
  const Point hit{shared.x + t, shared.y + t * ks};
  const Rational v = ld(hit);
  if (sgn(v) == 0) throw Error(Errc::NotAGammaStar, "crossing lies on the double asymptote");
  // L1 = 2 / (a1 − a2) at the crossing.
  const Rational a_double = shared.x + 2 / v;
  const Rational kd = -ld.a;
  const Point on_double{a_double, kd * a_double - ld.c};
  auto result = ordered(pair_from_line_point(shape.double_line, on_double),
                        pair_from_line_point(shape.simple_line, shared));
  verify_round_trip(f, result.first, result.second);
  return result;
}

}  // namespace

std::pair<IncidencePairParam, IncidencePairParam> reconstruct_generators(const BivariateCubic& f) {
  if (f.degree() != 3) throw Error(Errc::NotAGammaStar, "not a cubic");
  const LeadingFormFactorization fac = leading_form_factors(f);
  if (fac.irreducible_part) throw Error(Errc::NotAGammaStar, "leading form does not split over Q");
  if (fac.linear.size() == 3) return reconstruct_general(f, asymptotes(f));
  if (fac.linear.size() == 2) {
    const auto& a = fac.linear[0];
    const auto& b = fac.linear[1];
    const Line& dbl = a.multiplicity == 2 ? a.form : b.form;
    const Line& sgl = a.multiplicity == 2 ? b.form : a.form;
    return reconstruct_point_on_line(f, double_factor_asymptotes(f.poly(), dbl, sgl));
  }
  throw Error(Errc::NonSimpleFactorUnsupported, "triple factor in leading form");
}

// ---- irreducibility ----------------------------------------------------------

std::optional<Line> has_linear_factor(const BivariateCubic& f) {
  if (f.degree() <= 0) return std::nullopt;
  std::vector<Line> found;
  for (const LinearFactor& lf : leading_form_factors(f).linear) {
    const Rational ua(lf.form.a());
    const Rational ub(lf.form.b());
    // g(s, c) = f restricted to the line u + c = 0, parametrized by s.
    Poly2 g;
    if (sgn(ub) != 0) {
      // x = s, y = −(ua·s + c)/ub
      g = f.poly().substitute(Poly2::x(), Poly2::linear(-ua / ub, -1 / ub, Rational(0)));
    } else {
      // x = −c/ua, y = s
      g = f.poly().substitute(Poly2::linear(Rational(0), -1 / ua, Rational(0)), Poly2::x());
    }
    // u + c divides f iff every coefficient of s^i vanishes at c.
    UPoly common;
    const int deg_s = g.degree();
    for (int i = 0; i <= deg_s; ++i) {
      std::vector<Rational> cs(static_cast<std::size_t>(deg_s) + 1);
      for (int j = 0; j <= deg_s; ++j) cs[static_cast<std::size_t>(j)] = g.coeff(i, j);
      common = gcd(common, UPoly(std::move(cs)));
    }
    for (const Rational& c : rational_roots(common)) found.push_back(Line::from_rational(ua, ub, c));
  }
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end());
}

// ---- intersections -----------------------------------------------------------

namespace {

Poly2 shear_poly(const Poly2& p, const Rational& t) {
  return p.substitute(Poly2::linear(Rational(1), t, Rational(0)), Poly2::y());
}

// Coefficients of y^j, j = 0..deg, evaluated at x.
std::vector<Rational> y_coefficients_at(const std::vector<UPoly>& cy, const Rational& x, int deg) {
  std::vector<Rational> out(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j < static_cast<int>(cy.size()); ++j) out[static_cast<std::size_t>(j)] = cy[static_cast<std::size_t>(j)](x);
  return out;
}

Rational sylvester_determinant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) mat[r][r + k] = f[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) mat[n + r][r + k] = g[n - k];
  }
  return determinant(std::move(mat));
}

// Newton interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UPoly(std::vector<Rational>{-xs[i], Rational(1)}) + UPoly::constant(ys[i]);
  }
  return result;
}

UPoly univariate_in_y(const std::vector<UPoly>& cy, const Rational& x) {
  std::vector<Rational> c(cy.size());
  for (std::size_t j = 0; j < cy.size(); ++j) c[j] = cy[j](x);
  return UPoly(std::move(c));
}

}  // namespace

CurveIntersection curve_intersection_bound(const BivariateCubic& f, const BivariateCubic& g) {
  if (f == g) throw Error(Errc::InfiniteSharedComponent, "identical curves");
  const int df = f.degree();
  const int dg = g.degree();
  if (df <= 0 || dg <= 0) throw Error(Errc::InvalidArgument, "constant curve");
  const Poly2 hf = f.poly().homogeneous(df);
  const Poly2 hg = g.poly().homogeneous(dg);
  // Shear until both leading coefficients in y are nonzero constants.
  Rational t = 0;
  for (long k = 0;; ++k) {
    t = k % 2 == 0 ? Rational(k / 2) : Rational(-(k + 1) / 2);
    if (sgn(hf(t, Rational(1))) != 0 && sgn(hg(t, Rational(1))) != 0) break;
  }
  const Poly2 fs = shear_poly(f.poly(), t);
  const Poly2 gs = shear_poly(g.poly(), t);
  const auto cf = fs.coefficients_in_y();
  const auto cg = gs.coefficients_in_y();

  const int res_degree_bound = df * dg;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int i = 0; i <= res_degree_bound; ++i) {
    const Rational x(i);
    xs.push_back(x);
    ys.push_back(sylvester_determinant(y_coefficients_at(cf, x, df), y_coefficients_at(cg, x, dg)));
  }
  CurveIntersection out;
  out.shear = t;
  out.resultant = interpolate(xs, std::move(ys));
  if (out.resultant.is_zero()) throw Error(Errc::InfiniteSharedComponent, "resultant vanishes identically");
  out.resultant_degree = static_cast<std::size_t>(std::max(0, out.resultant.degree()));
  const auto parts = squarefree_decomposition(out.resultant);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t roots = count_real_roots(parts[i]);
    out.distinct_real_roots += roots;
    out.upper_bound += roots * (i + 1);
  }
  for (const Rational& x0 : rational_roots(out.resultant)) {
    const UPoly common = gcd(univariate_in_y(cf, x0), univariate_in_y(cg, x0));
    for (const Rational& y0 : rational_roots(common)) {
      Point p{x0 + t * y0, y0};
      if (sgn(f(p)) == 0 && sgn(g(p)) == 0) out.rational_points.push_back(std::move(p));
    }
  }
  std::sort(out.rational_points.begin(), out.rational_points.end());
  return out;
}

TripleIntersection triple_common_points(const Surface& s1, const Surface& s2, const Surface& s3) {
  const std::array<const IncidencePairParam*, 3> g = {&s1.generator, &s2.generator, &s3.generator};
  if (*g[0] == *g[1] || *g[0] == *g[2] || *g[1] == *g[2]) throw Error(Errc::SamePair, "triple needs distinct generators");
  std::array<CurveCase, 3> cases;  // γ*12, γ*13, γ*23
  cases[0] = gamma_star(*g[0], *g[1]);
  cases[1] = gamma_star(*g[0], *g[2]);
  cases[2] = gamma_star(*g[1], *g[2]);
  TripleIntersection out;
  for (const CurveCase& c : cases) {
    if (c.tag == CurveTag::Empty) return out;
  }
  if (cases[0].tag == CurveTag::Undefined || cases[1].tag == CurveTag::Undefined) {
    throw Error(Errc::DegenerateTriple, "a projected curve is undefined (shared line)");
  }
  // Any two of the three projections cut out the common points; fall back to
  // another pairing when the first two share a component.
  const std::array<std::pair<int, int>, 3> pairings = {{{0, 1}, {0, 2}, {1, 2}}};
  std::optional<CurveIntersection> hit;
  std::optional<Error> last;
  for (auto [i, j] : pairings) {
    if (!cases[i].curve || !cases[j].curve) continue;
    try {
      hit = curve_intersection_bound(*cases[i].curve, *cases[j].curve);
      break;
    } catch (const Error& e) {
      if (e.code() != Errc::InfiniteSharedComponent) throw;
      last = e;
    }
  }
  if (!hit) throw last ? *last : Error(Errc::DegenerateTriple, "no usable pair of projections");
  out.upper_bound = hit->upper_bound;
  for (const Point& p : hit->rational_points) {
    const auto w = lift_to_surface(*g[0], p.x, p.y);
    if (!w) continue;
    if (s1.contains(p.x, p.y, *w) && s2.contains(p.x, p.y, *w) && s3.contains(p.x, p.y, *w)) {
      out.rational_witnesses.push_back({p.x, p.y, *w});
    }
  }
  return out;
}

// ---- numeric probe -----------------------------------------------------------

namespace {

std::vector<long double> real_roots_numeric(const UPoly& p) {
  std::vector<long double> c;
  for (const Rational& v : p.coeffs()) c.push_back(to_long_double(v));
  std::vector<long double> roots;
  const int deg = p.degree();
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
  } else if (deg == 2) {
    const long double a = c[2], b = c[1], cc = c[0];
    const long double disc = b * b - 4 * a * cc;
    if (disc < 0) return roots;
    const long double q = -0.5L * (b + std::copysign(std::sqrt(disc), b));
    if (q != 0) {
      roots.push_back(cc / q);
      roots.push_back(q / a);
    } else {
      roots.push_back(0);
    }
  } else if (deg == 3) {
    // Depressed cubic, trigonometric or Cardano branch.
    const long double a = c[2] / c[3], b = c[1] / c[3], cc = c[0] / c[3];
    const long double pp = b - a * a / 3;
    const long double qq = 2 * a * a * a / 27 - a * b / 3 + cc;
    const long double disc = qq * qq / 4 + pp * pp * pp / 27;
    if (disc > 0) {
      const long double sq = std::sqrt(disc);
      roots.push_back(std::cbrt(-qq / 2 + sq) + std::cbrt(-qq / 2 - sq) - a / 3);
    } else {
      const long double r = std::sqrt(-pp / 3);
      const long double phi = std::acos(std::clamp(-qq / (2 * r * r * r), -1.0L, 1.0L));
      for (int k = 0; k < 3; ++k) roots.push_back(2 * r * std::cos((phi - 2 * M_PIl * k) / 3) - a / 3);
    }
  }
  return roots;
}

}  // namespace

std::vector<long double> asymptote_convergence_probe(const BivariateCubic& f, const Line& l,
                                                     const std::vector<Rational>& xs) {
  const auto lines = asymptotes(f);
  if (std::find(lines.begin(), lines.end(), l) == lines.end()) {
    throw Error(Errc::InvalidArgument, to_string(l) + " is not an asymptote");
  }
  // Section direction: kernel of another leading factor, so the section is of
  // degree <= 2; otherwise the normal of l.
  const Point own = kernel_direction(Line::from_coefficients(l.a(), l.b(), 0));
  Point e{Rational(l.a()), Rational(l.b())};
  for (const LinearFactor& lf : leading_form_factors(f).linear) {
    const Point d = kernel_direction(lf.form);
    if (sgn(d.x * own.y - d.y * own.x) != 0) {
      e = d;
      break;
    }
  }
  const Rational la(l.a()), lb(l.b()), lc(l.c());
  const long double norm = std::sqrt(to_long_double(la * la + lb * lb));
  const long double across = std::fabs(to_long_double(la * e.x + lb * e.y));
  std::vector<long double> out;
  for (const Rational& s : xs) {
    Point base = l.is_vertical() ? Point{-lc / la, s} : Point{s, -(la * s + lc) / lb};
    const UPoly section = f.poly().restrict_to_line(base, e.x, e.y);
    if (sgn(section.coeff(0)) == 0) {
      out.push_back(0);
      continue;
    }
    const auto roots = real_roots_numeric(section);
    if (roots.empty()) throw Error(Errc::NoBranch, "no real branch near sample " + to_string(s));
    long double best = std::fabs(roots[0]);
    for (long double r : roots) best = std::min(best, std::fabs(r));
    out.push_back(best * across / norm);
  }
  return out;
}

}  // namespace unitarea

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "support.hpp"
#include "unitarea/curve_json.hpp"
#include "unitarea/curves.hpp"
#include "unitarea/error.hpp"
#include "unitarea/matching.hpp"
#include "unitarea/scans.hpp"

using namespace unitarea;
using testsupport::matching_partner;

namespace {

IncidencePairParam P(long a, long b, long kappa) { return IncidencePairParam::from_triple(a, b, kappa); }

Poly2 lin(const Rational& a, const Rational& b, const Rational& c) { return Poly2::linear(a, b, c); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no unitarea::Error thrown";
  return Errc::InvalidArgument;
}

bool same_unordered(const std::pair<IncidencePairParam, IncidencePairParam>& got, const IncidencePairParam& p,
                    const IncidencePairParam& q) {
  return (got.first == p && got.second == q) || (got.first == q && got.second == p);
}

}  // namespace

TEST(CurveNormalization, PrimitiveWithSignRule) {
  Poly2 p = Rational(-2) * (Poly2::x() * Poly2::y()) + Poly2::constant(make_rational(4, 3));
  const BivariateCubic f = BivariateCubic::from_poly(p);
  EXPECT_EQ(f.coeff(1, 1), Rational(3));
  EXPECT_EQ(f.coeff(0, 0), Rational(-2));
  EXPECT_EQ(f, BivariateCubic::from_poly(Rational(7) * p));
  EXPECT_EQ(code_of([] { BivariateCubic::from_poly(Poly2()); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { BivariateCubic::from_terms({{4, 0, Rational(1)}}); }), Errc::InvalidArgument);
}

TEST(GammaStar, WorkedExampleBundle) {
  const auto p1 = P(0, 0, 0);
  const auto p2 = P(1, 2, 1);
  const CurveCase c = gamma_star(p1, p2);
  ASSERT_EQ(c.tag, CurveTag::General);
  const auto& b = *c.bundle;
  // L1 = y, L2 = y − x − 1, L3 = 2x − y, L4 = y − x, L5 = y − 2
  EXPECT_EQ(b.L1, (LinearForm{0, 1, 0}));
  EXPECT_EQ(b.L2, (LinearForm{-1, 1, -1}));
  EXPECT_EQ(b.L3, (LinearForm{2, -1, 0}));
  EXPECT_EQ(b.L4, (LinearForm{-1, 1, 0}));
  EXPECT_EQ(b.L5, (LinearForm{0, 1, -2}));
  EXPECT_EQ(b.C, Rational(-1));
  EXPECT_EQ(b.D, Rational(-2));
  EXPECT_EQ(b.E, Rational(3));
  EXPECT_EQ(b.F, Rational(-2));
  EXPECT_FALSE(b.s.has_value());
  // y(y − x − 1)(2x − y) + 2(−2x + 3y − 2) − 4, up to sign
  const auto expected = BivariateCubic::from_terms({{2, 1, Rational(2)},
                                                    {1, 2, Rational(-3)},
                                                    {0, 3, Rational(1)},
                                                    {1, 1, Rational(2)},
                                                    {0, 2, Rational(-1)},
                                                    {1, 0, Rational(4)},
                                                    {0, 1, Rational(-6)},
                                                    {0, 0, Rational(8)}});
  EXPECT_EQ(*c.curve, expected);
  EXPECT_EQ(*gamma_star(p2, p1).curve, expected);
}

TEST(GammaStar, BundleIdentitiesProperty) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p1 = testsupport::random_param(rng);
    const auto p2 = testsupport::random_param(rng);
    if (p1.point == p2.point || p1.line == p2.line) continue;
    const auto b = linear_form_bundle(p1, p2);
    EXPECT_EQ(b.L6.poly(), b.L1.poly() * b.L4.poly() - b.L2.poly() * b.L5.poly());
    EXPECT_EQ(b.C, p1.kappa - p2.kappa);
    EXPECT_EQ(sgn(b.L3(p1.point)), 0);
    EXPECT_EQ(sgn(b.L3(p2.point)), 0);
    EXPECT_EQ(sgn(b.L4(p1.point)), 0);
    EXPECT_EQ(-b.L4.a / b.L4.b, p2.kappa);
    EXPECT_EQ(sgn(b.L5(p2.point)), 0);
    EXPECT_EQ(-b.L5.a / b.L5.b, p1.kappa);
  }
}

// With w = N/D solved from each generator's matching equation, N1·D2 − N2·D1
// is the projected curve polynomial itself.
TEST(GammaStar, ProportionalToLiftDifferenceProperty) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p1 = testsupport::random_param(rng);
    const auto p2 = testsupport::random_param(rng);
    if (p1.point == p2.point || p1.line == p2.line) continue;
    const auto f = *gamma_star(p1, p2).curve;
    std::optional<Rational> ratio;
    for (int s = 0; s < 12; ++s) {
      const Rational x = testsupport::random_rational(rng, 9, 5);
      const Rational y = testsupport::random_rational(rng, 9, 5);
      const auto [n1, d1] = testsupport::oracle_lift(p1, x, y);
      const auto [n2, d2] = testsupport::oracle_lift(p2, x, y);
      const Rational g = n1 * d2 - n2 * d1;
      const Rational fv = f(Point(x, y));
      ASSERT_EQ(sgn(fv) == 0, sgn(g) == 0);
      if (sgn(fv) == 0) continue;
      if (!ratio) ratio = g / fv;
      EXPECT_EQ(g / fv, *ratio);
    }
  }
}

TEST(GammaStar, DegenerateCases) {
  const auto p = P(0, 0, 1);
  EXPECT_EQ(gamma_star(p, P(0, 0, 2)).tag, CurveTag::Empty);
  EXPECT_EQ(gamma_star(p, P(3, 3, 1)).tag, CurveTag::Undefined);
  EXPECT_FALSE(gamma_star(p, P(3, 3, 1)).curve.has_value());
  EXPECT_EQ(code_of([&] { gamma_star(p, p); }), Errc::SamePair);
}

TEST(GammaStar, PointOnLineExample) {
  // p1 = (0,0) on y = 0, p2 = (1,0) on y = x − 1; p2 ∈ ℓ1.
  const auto p1 = P(0, 0, 0);
  const auto p2 = P(1, 0, 1);
  const CurveCase c = gamma_star(p1, p2);
  ASSERT_EQ(c.tag, CurveTag::PointOnLine1);
  ASSERT_TRUE(c.bundle->s.has_value());
  EXPECT_EQ(*c.bundle->s, Rational(-1));
  // (a1 − a2)·L1²·L2 + 2s·L1 + 4C with L1 = y, L2 = y − x + 1, s = −1, C = −1
  const Poly2 y = Poly2::y();
  const Poly2 eq5 = Rational(-1) * (y * y * lin(-1, 1, 1)) + Rational(-2) * y + Poly2::constant(-4);
  EXPECT_EQ(*c.curve, BivariateCubic::from_poly(eq5));
  // meets y = x − 1 only at (−1, −2)
  EXPECT_EQ(sgn((*c.curve)(Point(-1, -2))), 0);
  EXPECT_EQ(gamma_star(p2, p1).tag, CurveTag::PointOnLine2);
  EXPECT_EQ(*gamma_star(p2, p1).curve, *c.curve);
  EXPECT_EQ(*gamma_star(p2, p1).bundle->s, Rational(1));
}

TEST(Surfaces, PointSurfaceDualityProperty) {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = testsupport::random_param(rng);
    const Rational t1 = testsupport::random_rational(rng, 4, 3), t2 = testsupport::random_rational(rng, 4, 3);
    const Rational k1 = testsupport::random_rational(rng, 4, 3), k2 = testsupport::random_rational(rng, 4, 3);
    if (sgn(t1) == 0 || sgn(t2) == 0 || k1 == x.kappa || k2 == x.kappa) continue;
    const auto g1 = matching_partner(x, t1, k1, 1);
    const auto g2 = matching_partner(x, t2, k2, 1);
    if (g1.point == g2.point || g1.line == g2.line) continue;
    const Surface s1{g1}, s2{g2};
    EXPECT_TRUE(s1.contains(x.a, x.b, x.kappa));
    EXPECT_TRUE(s2.contains(x.a, x.b, x.kappa));
    EXPECT_EQ(sgn((*gamma_star(g1, g2).curve)(x.point)), 0);
    const auto w1 = lift_to_surface(g1, x.a, x.b);
    const auto w2 = lift_to_surface(g2, x.a, x.b);
    ASSERT_TRUE(w1 && w2);
    EXPECT_EQ(*w1, x.kappa);
    EXPECT_EQ(*w2, x.kappa);
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(Asymptotes, WorkedExample) {
  const auto f = *gamma_star(P(0, 0, 0), P(1, 2, 1)).curve;
  const auto a = asymptotes(f);
  const std::vector<Line> expected = {Line::from_coefficients(0, 1, 0), Line::from_coefficients(1, -1, 1),
                                      Line::from_coefficients(2, -1, 0)};
  EXPECT_EQ(std::set<std::vector<Integer>>({{a[0].a(), a[0].b(), a[0].c()},
                                            {a[1].a(), a[1].b(), a[1].c()},
                                            {a[2].a(), a[2].b(), a[2].c()}}),
            std::set<std::vector<Integer>>({{0, 1, 0}, {1, -1, 1}, {2, -1, 0}}));
  EXPECT_EQ(a.size(), 3u);
}

TEST(Asymptotes, GeneralCaseProperty) {
  auto rng = trial_rng(54, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const auto [p1, p2] = random_general_couple(rng);
    const auto got = asymptotes(*gamma_star(p1, p2).curve);
    std::vector<Line> expected = {p1.line, p2.line, line_through(p1.point, p2.point)};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(Asymptotes, PointOnLineProperty) {
  auto rng = trial_rng(55, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [p1, p2] = random_point_on_line_couple(rng);
    const auto got = asymptotes(*gamma_star(p1, p2).curve);
    std::vector<Line> expected = {p1.line, p2.line};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(Asymptotes, NoRationalDirection) {
  const auto f = BivariateCubic::from_terms({{3, 0, Rational(1)}, {1, 2, Rational(1)}, {0, 0, Rational(1)}});
  // x³ + xy² + 1 = x(x² + y²) + 1: the only rational direction is x = 0
  const auto fac = leading_form_factors(f);
  ASSERT_EQ(fac.linear.size(), 1u);
  EXPECT_TRUE(fac.irreducible_part.has_value());
  const auto g = BivariateCubic::from_terms({{2, 0, Rational(1)}, {0, 2, Rational(1)}, {0, 0, Rational(-1)}});
  EXPECT_EQ(code_of([&] { asymptotes(g); }), Errc::InvalidArgument);
}

TEST(Reconstruct, WorkedExample) {
  const auto f = *gamma_star(P(1, 2, 1), P(0, 0, 0)).curve;
  const auto [p, q] = reconstruct_generators(f);
  EXPECT_EQ(p, P(0, 0, 0));
  EXPECT_EQ(q, P(1, 2, 1));
}

TEST(Reconstruct, PointOnLineExample) {
  const auto f = *gamma_star(P(0, 0, 0), P(1, 0, 1)).curve;
  const auto [p, q] = reconstruct_generators(f);
  EXPECT_EQ(p, P(0, 0, 0));
  EXPECT_EQ(q, P(1, 0, 1));
}

TEST(Reconstruct, RoundTripProperty) {
  auto rng = trial_rng(56, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const auto [p1, p2] = trial % 3 == 0 ? random_point_on_line_couple(rng) : random_general_couple(rng);
    const auto got = reconstruct_generators(*gamma_star(p1, p2).curve);
    EXPECT_TRUE(same_unordered(got, p1, p2)) << to_string(p1) << " | " << to_string(p2);
    EXPECT_FALSE(got.second < got.first);
  }
}

TEST(Reconstruct, RejectsOtherCubics) {
  EXPECT_EQ(code_of([] { reconstruct_generators(BivariateCubic::from_terms({{1, 1, Rational(1)}})); }),
            Errc::NotAGammaStar);
  const auto h = BivariateCubic::from_terms(
      {{2, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 0, Rational(5)}, {2, 0, Rational(3)}});
  EXPECT_THROW(reconstruct_generators(h), Error);
}

TEST(Irreducibility, ConstructedFactors) {
  // y·(xy + 1)
  const auto f = BivariateCubic::from_terms({{1, 2, Rational(1)}, {0, 1, Rational(1)}});
  EXPECT_EQ(has_linear_factor(f), Line::from_coefficients(0, 1, 0));
  // (y − 1)³
  const auto g = BivariateCubic::from_poly(pow(lin(0, 1, -1), 3));
  EXPECT_EQ(has_linear_factor(g), Line::from_coefficients(0, 1, -1));
  // x·(y² + 1): vertical factor
  const auto h = BivariateCubic::from_poly(Poly2::x() * (Poly2::y() * Poly2::y() + Poly2::constant(1)));
  EXPECT_EQ(has_linear_factor(h), Line::from_coefficients(1, 0, 0));
  EXPECT_FALSE(has_linear_factor(*gamma_star(P(0, 0, 0), P(1, 2, 1)).curve).has_value());
}

TEST(Irreducibility, GeneratedCurvesProperty) {
  auto rng = trial_rng(57, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [p1, p2] = trial % 2 == 0 ? random_general_couple(rng) : random_point_on_line_couple(rng);
    EXPECT_FALSE(has_linear_factor(*gamma_star(p1, p2).curve).has_value());
    // L1·((a1 − a2)·L1·L2 + 2s): the special-case shape with C = 0
    const auto b = linear_form_bundle(p1, p2);
    const Rational s = testsupport::random_rational(rng, 5, 3) + 6;
    const Poly2 prod = b.L1.poly() * ((p1.a - p2.a + 7) * (b.L1.poly() * b.L2.poly()) + Poly2::constant(2 * s));
    EXPECT_EQ(has_linear_factor(BivariateCubic::from_poly(prod)), p1.line);
  }
}

TEST(Intersection, IdenticalAndSharedComponents) {
  const auto f = *gamma_star(P(0, 0, 0), P(1, 2, 1)).curve;
  EXPECT_EQ(code_of([&] { curve_intersection_bound(f, f); }), Errc::InfiniteSharedComponent);
  const auto a = BivariateCubic::from_poly(Poly2::y() * (Poly2::x() * Poly2::x() + Poly2::constant(1)));
  const auto b = BivariateCubic::from_poly(Poly2::y() * (Poly2::y() + Poly2::constant(3)));
  EXPECT_EQ(code_of([&] { curve_intersection_bound(a, b); }), Errc::InfiniteSharedComponent);
}

TEST(Intersection, KnownPoints) {
  // y = x³ against y = x: points −1, 0, 1
  const auto f = BivariateCubic::from_poly(Poly2::y() - pow(Poly2::x(), 3));
  const auto g = BivariateCubic::from_poly(Poly2::y() - Poly2::x());
  const auto hit = curve_intersection_bound(f, g);
  EXPECT_EQ(hit.upper_bound, 3u);
  EXPECT_EQ(hit.distinct_real_roots, 3u);
  EXPECT_EQ(hit.rational_points, (std::vector<Point>{Point(-1, -1), Point(0, 0), Point(1, 1)}));
  // x² + y² = 1 against x = y: two irrational points
  const auto c = BivariateCubic::from_poly(pow(Poly2::x(), 2) + pow(Poly2::y(), 2) - Poly2::constant(1));
  const auto hit2 = curve_intersection_bound(c, g);
  EXPECT_EQ(hit2.upper_bound, 2u);
  EXPECT_TRUE(hit2.rational_points.empty());
  // x·y = 1 touches x + y = 2 at (1, 1); the tangency counts twice
  const auto h = BivariateCubic::from_poly(Poly2::x() * Poly2::y() - Poly2::constant(1));
  const auto t = BivariateCubic::from_poly(Poly2::x() + Poly2::y() - Poly2::constant(2));
  const auto hit3 = curve_intersection_bound(h, t);
  EXPECT_EQ(hit3.rational_points, std::vector<Point>{Point(1, 1)});
  EXPECT_EQ(hit3.distinct_real_roots, 1u);
  EXPECT_EQ(hit3.upper_bound, 2u);
}

TEST(Intersection, SharedPointOfTheSpecialCaseTrace) {
  // Another projected curve through (−1, −2), the point where the special
  // example meets y = x − 1.
  const auto f = *gamma_star(P(0, 0, 0), P(1, 0, 1)).curve;
  const auto x = IncidencePairParam::from_triple(-1, -2, 3);
  const auto g1 = matching_partner(x, 1, 0, 1);
  const auto g2 = matching_partner(x, -2, 1, 1);
  const auto g = *gamma_star(g1, g2).curve;
  ASSERT_EQ(sgn(g(Point(-1, -2))), 0);
  const auto hit = curve_intersection_bound(f, g);
  EXPECT_LE(hit.upper_bound, 9u);
  EXPECT_NE(std::find(hit.rational_points.begin(), hit.rational_points.end(), Point(-1, -2)),
            hit.rational_points.end());
}

TEST(Intersection, RandomPairsStayWithinNineProperty) {
  const auto s = bezout_scan(60, 58);
  EXPECT_EQ(s.violations, 0u);
  EXPECT_LE(s.max_upper_bound, 9u);
  EXPECT_GT(s.checked, 50u);
}

TEST(Triples, EmptyProjectionAndWitness) {
  const auto g1 = P(0, 0, 0);
  EXPECT_EQ(triple_common_points(Surface{g1}, Surface{P(0, 0, 1)}, Surface{P(5, 1, 2)}).upper_bound, 0u);
  EXPECT_EQ(code_of([&] { triple_common_points(Surface{g1}, Surface{P(3, 0, 0)}, Surface{P(5, 1, 2)}); }),
            Errc::DegenerateTriple);
  std::mt19937_64 rng(59);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = testsupport::random_param(rng);
    std::vector<IncidencePairParam> g;
    while (g.size() < 3) {
      const Rational t = testsupport::random_rational(rng, 4, 3);
      const Rational k = testsupport::random_rational(rng, 4, 3);
      if (sgn(t) == 0 || k == x.kappa) continue;
      g.push_back(matching_partner(x, t, k, 1));
    }
    bool distinct = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) distinct = distinct && g[i].point != g[j].point && g[i].line != g[j].line;
    if (!distinct) continue;
    const auto tri = triple_common_points(Surface{g[0]}, Surface{g[1]}, Surface{g[2]});
    EXPECT_LE(tri.upper_bound, 9u);
    const std::array<Rational, 3> w = {x.a, x.b, x.kappa};
    EXPECT_NE(std::find(tri.rational_witnesses.begin(), tri.rational_witnesses.end(), w), tri.rational_witnesses.end());
    ++found;
  }
  EXPECT_GT(found, 40);
}

TEST(Probe, WorkedExampleAlongXAxis) {
  const auto f = *gamma_star(P(0, 0, 0), P(1, 2, 1)).curve;
  const std::vector<Rational> xs = {Rational(1000), Rational(10000), Rational(100000), Rational(1000000)};
  const auto d = asymptote_convergence_probe(f, Line::from_coefficients(0, 1, 0), xs);
  ASSERT_EQ(d.size(), 4u);
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_LT(d[i], d[i - 1]);
  EXPECT_LT(d.back(), 1e-4L);
  // roughly like 1/x
  EXPECT_NEAR(static_cast<double>(d[0] / d[1]), 10.0, 1.0);
  EXPECT_EQ(code_of([&] { asymptote_convergence_probe(f, Line::from_coefficients(1, 1, 0), xs); }),
            Errc::InvalidArgument);
}

TEST(Probe, AxisAsymptoteShape) {
  // x·y·(x − y + 1) + (x + 2y + 3) has y = 0 as an asymptote
  const Poly2 p = Poly2::x() * Poly2::y() * lin(1, -1, 1) + lin(1, 2, 3);
  const auto f = BivariateCubic::from_poly(p);
  const auto a = asymptotes(f);
  ASSERT_NE(std::find(a.begin(), a.end(), Line::from_coefficients(0, 1, 0)), a.end());
  const std::vector<Rational> xs = {Rational(1000), Rational(10000), Rational(100000), Rational(1000000)};
  const auto d = asymptote_convergence_probe(f, Line::from_coefficients(0, 1, 0), xs);
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_LT(d[i], d[i - 1]);
}

TEST(CurveJson, RoundTrip) {
  const CurveCase c = gamma_star(P(0, 0, 0), P(1, 2, 1));
  const std::string doc = curve_to_json(c);
  EXPECT_EQ(curve_from_json(doc), *c.curve);
  EXPECT_NE(doc.find("\"case\": \"General\""), std::string::npos);
  EXPECT_NE(doc.find("\"asymptotes\""), std::string::npos);
  EXPECT_EQ(code_of([] { curve_from_json("{\"coefficients\": [[1, 0, \"1.5\"]]}"); }), Errc::Parse);
  EXPECT_EQ(code_of([] { curve_from_json("not json"); }), Errc::Parse);
  const std::string empty = curve_to_json(gamma_star(P(0, 0, 1), P(0, 0, 2)));
  EXPECT_NE(empty.find("\"Empty\""), std::string::npos);
}

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "unitarea/geometry.hpp"
#include "unitarea/incidence_pair.hpp"
#include "unitarea/poly.hpp"

namespace unitarea {

// a·x + b·y + c with exact coefficients; not normalized.
struct LinearForm {
  Rational a;
  Rational b;
  Rational c;

  Rational operator()(const Point& p) const { return a * p.x + b * p.y + c; }
  Poly2 poly() const { return Poly2::linear(a, b, c); }
  Line line() const { return Line::from_rational(a, b, c); }

  friend bool operator==(const LinearForm& l, const LinearForm& m) { return l.a == m.a && l.b == m.b && l.c == m.c; }
};

// Polynomial of total degree <= 3 stored with primitive integer coefficients
// and a sign rule: the first nonzero coefficient in the order
//   x³, x²y, xy², y³, x², xy, y², x, y, 1
// is positive. Curves that differ by a constant factor compare equal.
class BivariateCubic {
 public:
  // Throws InvalidArgument if p is zero or has degree above 3.
  static BivariateCubic from_poly(const Poly2& p);
  // Terms given as (i, j, c_ij) for x^i·y^j.
  static BivariateCubic from_terms(const std::vector<std::tuple<int, int, Rational>>& terms);

  const Poly2& poly() const { return poly_; }
  Rational coeff(int i, int j) const { return poly_.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  int degree() const { return poly_.degree(); }
  Rational operator()(const Point& p) const { return poly_(p); }
  // Nonzero terms in the normalization order above.
  std::vector<std::tuple<int, int, Rational>> terms() const;

  friend bool operator==(const BivariateCubic& f, const BivariateCubic& g) { return f.poly_ == g.poly_; }
  friend bool operator!=(const BivariateCubic& f, const BivariateCubic& g) { return !(f == g); }

 private:
  explicit BivariateCubic(Poly2 p) : poly_(std::move(p)) {}
  Poly2 poly_;
};

// The forms attached to the projected curve of two incidence pairs
// (a1,b1,κ1), (a2,b2,κ2):
//   L1 = y − b1 − κ1(x − a1)       L2 = y − b2 − κ2(x − a2)
//   L3 = (b2 − b1)x − (a2 − a1)y + (a2·b1 − a1·b2)
//   L4 = y − b1 − κ2(x − a1)       L5 = y − b2 − κ1(x − a2)
//   L6 = L1·L4 − L2·L5 = D·x + E·y + F,   C = κ1 − κ2
// s is the constant L4 − L2 when p2 ∈ ℓ1, and L1 − L5 when p1 ∈ ℓ2.
struct LinearFormBundle {
  LinearForm L1, L2, L3, L4, L5, L6;
  Rational C, D, E, F;
  std::optional<Rational> s;
};

enum class CurveTag { General, PointOnLine1, PointOnLine2, Empty, Undefined };

std::string to_string(CurveTag tag);
std::optional<CurveTag> parse_curve_tag(const std::string& name);

struct CurveCase {
  CurveTag tag = CurveTag::General;
  std::optional<BivariateCubic> curve;
  std::optional<LinearFormBundle> bundle;
};

LinearFormBundle linear_form_bundle(const IncidencePairParam& p1, const IncidencePairParam& p2);

// Projection onto the xy-plane of σ(p1) ∩ σ(p2):
//   L1·L2·L3 + 2·L6 + 4C = 0, with L1, L2 ≠ 0.
// When p2 ∈ ℓ1 this is (a1 − a2)·L1²·L2 + 2s·L1 + 4C. Empty when p1 = p2,
// Undefined when ℓ1 = ℓ2. Throws SamePair when p1 == p2 as incidence pairs.
CurveCase gamma_star(const IncidencePairParam& p1, const IncidencePairParam& p2);

// The surface σ of all incidence pairs that match the generator (ccw).
struct Surface {
  IncidencePairParam generator;
  bool contains(const Rational& x, const Rational& y, const Rational& w) const;
};

// w from the matching equation for the generator at (x, y); nullopt where
// the denominator L·(x − a) + 2 vanishes.
std::optional<Rational> lift_to_surface(const IncidencePairParam& generator, const Rational& x, const Rational& y);

struct LinearFactor {
  Line form;  // homogeneous: C = 0
  std::size_t multiplicity = 1;
};

struct LeadingFormFactorization {
  std::vector<LinearFactor> linear;        // ordered by Line
  std::optional<Poly2> irreducible_part;   // homogeneous, no rational root
};

// Factorization over Q of the top-degree homogeneous part.
LeadingFormFactorization leading_form_factors(const BivariateCubic& f);

// Exact asymptotes. Simple factors u give u + f₂(d)/q₂(d) = 0 where
// f₃ = u·q₂ and u(d) = 0. A double factor is accepted only in the shape
// λ(u + c₁)²(v + c₂) + β(u + c₁) + γ and yields u + c₁ = 0, v + c₂ = 0.
// Throws NonSimpleFactorUnsupported for other shapes and InvalidArgument
// when the leading form has no rational linear factor.
std::vector<Line> asymptotes(const BivariateCubic& f);

// Recovers the unordered pair of generators from their projected curve,
// returned in (a, b, κ) order. The result is checked by recomputing the
// curve. Throws NotAGammaStar, AmbiguousMedian or NonSimpleFactorUnsupported.
std::pair<IncidencePairParam, IncidencePairParam> reconstruct_generators(const BivariateCubic& f);

// A rational linear factor of f, if any.
std::optional<Line> has_linear_factor(const BivariateCubic& f);

struct CurveIntersection {
  // Real roots of the resultant counted with multiplicity: a bound on the
  // number of real intersection points, at most deg f · deg g.
  std::size_t upper_bound = 0;
  // Distinct real roots of the squarefree resultant.
  std::size_t distinct_real_roots = 0;
  std::size_t resultant_degree = 0;
  Rational shear;  // x ↦ x + shear·y applied before elimination
  UPoly resultant;
  std::vector<Point> rational_points;  // sorted
};

// Throws InfiniteSharedComponent when the curves share a component
// (including f == g).
CurveIntersection curve_intersection_bound(const BivariateCubic& f, const BivariateCubic& g);

struct TripleIntersection {
  std::size_t upper_bound = 0;
  std::vector<std::array<Rational, 3>> rational_witnesses;  // (x, y, w) on all three
};

// Common points of three surfaces through the projected curves γ*12, γ*13.
// Empty projections give 0; Undefined throws DegenerateTriple.
TripleIntersection triple_common_points(const Surface& s1, const Surface& s2, const Surface& s3);

// Perpendicular distance from the curve branch to the asymptote l at each
// sample abscissa (ordinate for a vertical l). Floating point. Throws
// InvalidArgument if l is not an asymptote, NoBranch if no real branch.
std::vector<long double> asymptote_convergence_probe(const BivariateCubic& f, const Line& l,
                                                     const std::vector<Rational>& xs);

}  // namespace unitarea

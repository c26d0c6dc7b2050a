#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "unitarea/geometry.hpp"
#include "unitarea/rational.hpp"

namespace unitarea {

// Dense univariate polynomial over Q; coeffs[i] multiplies t^i. The
// coefficient vector never has trailing zeros, so the zero polynomial is
// the empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // −1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;
  // Primitive integer multiple with positive leading coefficient.
  UPoly primitive() const;

  friend UPoly operator+(const UPoly& p, const UPoly& q);
  friend UPoly operator-(const UPoly& p, const UPoly& q);
  friend UPoly operator*(const UPoly& p, const UPoly& q);
  friend UPoly operator*(const Rational& c, const UPoly& p);
  friend UPoly operator-(const UPoly& p);
  friend bool operator==(const UPoly& p, const UPoly& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& p, const UPoly& d);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& p, const UPoly& q);
// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

// Yun decomposition: p = c·Π parts[i]^(i+1), each part monic and squarefree,
// pairwise coprime (some parts may be 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

// Number of distinct real roots of p, by Sturm sequences.
std::size_t count_real_roots(const UPoly& p);
// Distinct real roots in (lo, hi].
std::size_t count_real_roots(const UPoly& p, const Rational& lo, const Rational& hi);
// All distinct rational roots of p, ascending. Exact: real roots are isolated
// by Sturm bisection and the unique candidate fraction of bounded denominator
// inside each isolating interval is tested.
std::vector<Rational> rational_roots(const UPoly& p);
// Multiplicity of the root r in p (0 if not a root).
std::size_t root_multiplicity(const UPoly& p, const Rational& r);

// Fraction with the smallest denominator in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

// Bivariate polynomial over Q, dense: coeff(i, j) multiplies x^i·y^j.
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(const Rational& c);
  static Poly2 x();
  static Poly2 y();
  // a·x + b·y + c
  static Poly2 linear(const Rational& a, const Rational& b, const Rational& c);

  Rational coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& v);
  void add_to(std::size_t i, std::size_t j, const Rational& v);

  bool is_zero() const;
  // Total degree; −1 for zero.
  int degree() const;
  // Homogeneous component of total degree d.
  Poly2 homogeneous(int d) const;
  Rational operator()(const Rational& x, const Rational& y) const;
  Rational operator()(const Point& p) const { return (*this)(p.x, p.y); }

  // f(αx + βy + γ, δx + εy + ζ).
  Poly2 substitute(const Poly2& x_image, const Poly2& y_image) const;
  // t ↦ f(p0 + t·d) as a univariate polynomial.
  UPoly restrict_to_line(const Point& p0, const Rational& dx, const Rational& dy) const;
  // Coefficients of y^j as polynomials in x, j = 0..deg_y.
  std::vector<UPoly> coefficients_in_y() const;
  int degree_in_y() const;

  friend Poly2 operator+(const Poly2& p, const Poly2& q);
  friend Poly2 operator-(const Poly2& p, const Poly2& q);
  friend Poly2 operator*(const Poly2& p, const Poly2& q);
  friend Poly2 operator*(const Rational& c, const Poly2& p);
  friend bool operator==(const Poly2& p, const Poly2& q);

  std::string to_string() const;

 private:
  void trim();
  // terms_[i][j]; rows and columns trimmed of trailing zeros
  std::vector<std::vector<Rational>> terms_;
};

Poly2 pow(const Poly2& p, unsigned e);

// Determinant over Q by fraction-based Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace unitarea

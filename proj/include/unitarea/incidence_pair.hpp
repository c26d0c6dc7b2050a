#pragma once

#include <string>

#include "unitarea/geometry.hpp"

namespace unitarea {

// A point-line incidence (ℓ, p) encoded as (a, b, κ): p = (a, b) and κ the
// slope of ℓ. The line and point are kept alongside for lookups.
struct IncidencePairParam {
  Rational a;
  Rational b;
  Rational kappa;
  Line line;
  Point point;

  // Builds the pair for the line through (a, b) with slope kappa.
  static IncidencePairParam from_triple(const Rational& a, const Rational& b, const Rational& kappa);
};

// Throws VerticalLine or PointNotOnLine.
IncidencePairParam to_param(const Line& l, const Point& p);

bool operator==(const IncidencePairParam& p, const IncidencePairParam& q);
inline bool operator!=(const IncidencePairParam& p, const IncidencePairParam& q) { return !(p == q); }
// Lexicographic on (a, b, κ).
bool operator<(const IncidencePairParam& p, const IncidencePairParam& q);

std::string to_string(const IncidencePairParam& p);

}  // namespace unitarea

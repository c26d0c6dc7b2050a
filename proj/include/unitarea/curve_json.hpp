#pragma once

#include <string>

#include "unitarea/curves.hpp"

namespace unitarea {

// {case, coefficients: [[i, j, "num/den"], ...], bundle: {L1..L6 as [A, B, C],
// C, D, E, F, s}, asymptotes: [[A, B, C], ...]}, rationals as strings. Empty
// and Undefined cases carry no coefficients, a null bundle and no asymptotes.
std::string curve_to_json(const CurveCase& c);

// Reads the coefficient array of a curve document. Throws Parse.
BivariateCubic curve_from_json(const std::string& text);

}  // namespace unitarea

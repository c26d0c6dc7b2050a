#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace unitarea {

// Arbitrary precision integers and rationals. mpq_class keeps every value
// canonical (positive denominator, reduced), so structural equality is value
// equality.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n" or "n/d" with optional leading sign; no decimals, no spaces.
Rational parse_rational(std::string_view text);
bool try_parse_rational(std::string_view text, Rational& out);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

std::size_t hash_value(const Integer& value) noexcept;
std::size_t hash_value(const Rational& value) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline int sign(const Rational& v) { return sgn(v); }
inline int sign(const Integer& v) { return sgn(v); }

long double to_long_double(const Rational& value);

// n/d in canonical form; d must be nonzero.
Rational make_rational(const Integer& n, const Integer& d);

}  // namespace unitarea

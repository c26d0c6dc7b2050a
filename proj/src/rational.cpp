#include "unitarea/rational.hpp"

#include <cctype>

#include "unitarea/error.hpp"

namespace unitarea {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "ParseError";
    case Errc::IdenticalPoints: return "IdenticalPoints";
    case Errc::VerticalLine: return "VerticalLine";
    case Errc::PointNotOnLine: return "PointNotOnLine";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::VerticalLinePresent: return "VerticalLinePresent";
    case Errc::ParallelSlopes: return "ParallelSlopes";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::ZeroArea: return "ZeroArea";
    case Errc::Unsatisfiable: return "Unsatisfiable";
    case Errc::SamePair: return "SamePair";
    case Errc::NonSimpleFactorUnsupported: return "NonSimpleFactorUnsupported";
    case Errc::AmbiguousMedian: return "AmbiguousMedian";
    case Errc::NotAGammaStar: return "NotAGammaStar";
    case Errc::InfiniteSharedComponent: return "InfiniteSharedComponent";
    case Errc::DegenerateTriple: return "DegenerateTriple";
    case Errc::NoBranch: return "NoBranch";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

bool try_parse_rational(std::string_view text, Rational& out) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num, true)) return false;
  if (slash != std::string_view::npos && !is_integer_literal(den, false)) return false;
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  Integer n(num_str, 10);
  Integer d = 1;
  if (slash != std::string_view::npos) {
    d = Integer(std::string(den), 10);
    if (d == 0) return false;
  }
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (!try_parse_rational(text, r)) {
    throw Error(Errc::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  return r;
}

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::size_t hash_value(const Integer& value) noexcept {
  const mpz_srcptr z = value.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return seed;
}

std::size_t hash_value(const Rational& value) noexcept {
  std::size_t seed = hash_value(value.get_num());
  hash_combine(seed, hash_value(value.get_den()));
  return seed;
}

long double to_long_double(const Rational& value) {
  // mpq_get_d truncates to double; split to keep long double accuracy for
  // values with large numerator and denominator.
  const Integer& n = value.get_num();
  const Integer& d = value.get_den();
  const long exp_n = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  const long exp_d = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  if (exp_n < 1000 && exp_d < 1000) {
    mpf_class fn(0, 128);
    mpf_class fd(0, 128);
    fn = n;
    fd = d;
    mpf_class q(0, 128);
    q = fn / fd;
    // Two-part conversion: high double plus residual.
    const double hi = q.get_d();
    mpf_class rest(0, 128);
    rest = q - hi;
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
  }
  return static_cast<long double>(value.get_d());
}

}  // namespace unitarea

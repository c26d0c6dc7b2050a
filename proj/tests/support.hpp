#pragma once

// Test-side generators and oracles. The oracles avoid the library's own
// predicates: integer cross products, Cramer's rule, explicit formulas.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unitarea/geometry.hpp"
#include "unitarea/incidence_pair.hpp"

namespace testsupport {

using unitarea::IncidencePairParam;
using unitarea::Point;
using unitarea::Rational;

inline std::vector<Point> pts(std::initializer_list<std::pair<long, long>> list) {
  std::vector<Point> out;
  for (auto [x, y] : list) out.emplace_back(x, y);
  return out;
}

// Distinct integer points, duplicates rejected.
inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, long bound) {
  if (static_cast<long>(n) > (2 * bound + 1) * (2 * bound + 1)) throw std::invalid_argument("box too small");
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<std::pair<long, long>> raw;
  while (raw.size() < n) {
    std::pair<long, long> p{c(rng), c(rng)};
    bool dup = false;
    for (const auto& q : raw) dup = dup || q == p;
    if (!dup) raw.push_back(p);
  }
  std::vector<Point> out;
  for (auto [x, y] : raw) out.emplace_back(x, y);
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> n(-num_bound, num_bound);
  std::uniform_int_distribution<long> d(1, den_bound);
  return unitarea::make_rational(n(rng), d(rng));
}

inline IncidencePairParam random_param(std::mt19937_64& rng) {
  return IncidencePairParam::from_triple(random_rational(rng, 6, 3), random_rational(rng, 6, 3),
                                         random_rational(rng, 5, 3));
}

// Unordered triples with |cross| = 2A over integer points; A = num/den.
inline std::uint64_t oracle_count(const std::vector<Point>& p, long num, long den) {
  std::vector<std::pair<__int128, __int128>> v;
  for (const auto& q : p) v.emplace_back(q.x.get_num().get_si(), q.y.get_num().get_si());
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        __int128 c = (v[j].first - v[i].first) * (v[k].second - v[i].second) -
                     (v[j].second - v[i].second) * (v[k].first - v[i].first);
        if (c < 0) c = -c;
        if (c * den == 2 * static_cast<__int128>(num)) ++count;
      }
  return count;
}

// ℓ1 ∩ ℓ2 by Cramer's rule on y = κ(x − a) + b.
inline Point oracle_meet(const IncidencePairParam& p, const IncidencePairParam& q) {
  const Rational x = (q.b - p.b + p.kappa * p.a - q.kappa * q.a) / (p.kappa - q.kappa);
  return Point{x, p.kappa * (x - p.a) + p.b};
}

// Geometric form of the matching predicate: signed area of (o, p1, p2) is ±A.
inline bool oracle_matches(const IncidencePairParam& p, const IncidencePairParam& q, const Rational& area, int orient) {
  if (p.kappa == q.kappa) return false;
  const Point o = oracle_meet(p, q);
  const Rational cross = (p.a - o.x) * (q.b - o.y) - (p.b - o.y) * (q.a - o.x);
  return cross == orient * 2 * area;
}

// A pair (ℓ, p) with matches_ccw((ℓ, p), target, area): o slides along the
// target's line by t, p sits on the slope-κ line through o at the parameter
// that makes the signed area come out right.
inline IncidencePairParam matching_partner(const IncidencePairParam& target, const Rational& t, const Rational& kappa,
                                           const Rational& area) {
  const Point o{target.a - t, target.b - target.kappa * t};
  // cross((s, sκ), target − o) = s·t·(w − κ) with w the target slope.
  const Rational s = 2 * area / (t * (target.kappa - kappa));
  return IncidencePairParam::from_triple(o.x + s, o.y + s * kappa, kappa);
}

// N/D with w = N/D solving the matching equation of p at (x, y).
inline std::pair<Rational, Rational> oracle_lift(const IncidencePairParam& p, const Rational& x, const Rational& y) {
  const Rational l = y - p.b - p.kappa * (x - p.a);
  return {l * (y - p.b) + 2 * p.kappa, l * (x - p.a) + 2};
}

}  // namespace testsupport

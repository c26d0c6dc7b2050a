#include "unitarea/scans.hpp"

#include <algorithm>

#include "unitarea/counting.hpp"
#include "unitarea/error.hpp"
#include "unitarea/incidence.hpp"
#include "unitarea/matching.hpp"
#include "unitarea/parallel.hpp"

namespace unitarea {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

IncidencePairParam random_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-5, 5);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  const long a = coord(rng);
  const long b = coord(rng);
  const long kn = num(rng);
  const long kd = den(rng);
  return IncidencePairParam::from_triple(Rational(a), Rational(b), make_rational(kn, kd));
}

std::pair<IncidencePairParam, IncidencePairParam> random_general_couple(std::mt19937_64& rng) {
  for (;;) {
    IncidencePairParam p = random_pair(rng);
    IncidencePairParam q = random_pair(rng);
    if (p.point == q.point || p.kappa == q.kappa) continue;
    if (p.line.contains(q.point) || q.line.contains(p.point)) continue;
    const Line joint = line_through(p.point, q.point);
    if (joint.parallel_to(p.line) || joint.parallel_to(q.line)) continue;
    return {std::move(p), std::move(q)};
  }
}

std::pair<IncidencePairParam, IncidencePairParam> random_point_on_line_couple(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> step(-4, 4);
  for (;;) {
    IncidencePairParam p = random_pair(rng);
    const long t = step(rng);
    if (t == 0) continue;
    // Walk t·den along ℓ1 so that p2 stays rational with small height.
    const Rational dx(t * Integer(p.kappa.get_den()));
    const Point on{p.a + dx, p.b + p.kappa * dx};
    IncidencePairParam q = random_pair(rng);
    q = IncidencePairParam::from_triple(on.x, on.y, q.kappa);
    if (q.kappa == p.kappa || q.line.contains(p.point)) continue;
    return {std::move(p), std::move(q)};
  }
}

BezoutSummary bezout_scan(std::size_t trials, std::uint64_t seed, unsigned threads) {
  std::vector<BezoutSummary> parts(trials);
  parallel_sum(trials, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto rng = trial_rng(seed, i);
      BezoutSummary& s = parts[i];
      for (;;) {
        const auto [p1, p2] = random_general_couple(rng);
        const auto [p3, p4] = random_general_couple(rng);
        const CurveCase f = gamma_star(p1, p2);
        // Half the trials share a generator, the configuration behind K_{3,10}.
        const CurveCase g = i % 2 == 0 ? gamma_star(p1, p3) : gamma_star(p3, p4);
        if (!f.curve || !g.curve || *f.curve == *g.curve) continue;
        try {
          const auto hit = curve_intersection_bound(*f.curve, *g.curve);
          s.checked = 1;
          s.max_upper_bound = hit.upper_bound;
          s.violations = hit.upper_bound > 9 ? 1 : 0;
        } catch (const Error& e) {
          if (e.code() != Errc::InfiniteSharedComponent) throw;
          s.shared_component = 1;
        }
        break;
      }
    }
    return std::uint64_t{0};
  });
  BezoutSummary total;
  total.trials = trials;
  for (const auto& s : parts) {
    total.checked += s.checked;
    total.shared_component += s.shared_component;
    total.violations += s.violations;
    total.max_upper_bound = std::max(total.max_upper_bound, s.max_upper_bound);
  }
  return total;
}

K310Summary k310_scan(std::size_t trials, std::uint64_t seed, unsigned threads) {
  std::vector<K310Summary> parts(trials);
  parallel_sum(trials, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto rng = trial_rng(seed, i);
      K310Summary& s = parts[i];
      for (;;) {
        const auto raw = gen_random(14, 3, rng());
        const auto pts = shear(raw, find_shear(raw));
        const auto q = build_incidence_set(pts, 2);
        if (q.size() < 3) continue;
        // Odd trials draw the generators among the partners of one element of
        // Q, so that the triple has at least one common point.
        std::vector<std::size_t> pool(q.size());
        for (std::size_t j = 0; j < q.size(); ++j) pool[j] = j;
        if (i % 2 == 1) {
          const auto& x = q[std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng)];
          pool.clear();
          for (std::size_t j = 0; j < q.size(); ++j) {
            if (matches_ccw(q[j], x)) pool.push_back(j);
          }
          if (pool.size() < 3) continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const std::size_t a = pool[pick(rng)], b = pool[pick(rng)], c = pool[pick(rng)];
        if (a == b || a == c || b == c) continue;
        const Surface s1{q[a]}, s2{q[b]}, s3{q[c]};
        std::size_t common = 0;
        for (const auto& e : q) {
          if (matches_ccw(q[a], e) && matches_ccw(q[b], e) && matches_ccw(q[c], e)) ++common;
        }
        s.max_common_in_q = common;
        try {
          const auto hit = triple_common_points(s1, s2, s3);
          s.checked = 1;
          s.max_upper_bound = hit.upper_bound;
          s.violations = (hit.upper_bound > 9 || common > hit.upper_bound) ? 1 : 0;
        } catch (const Error& e) {
          if (e.code() == Errc::DegenerateTriple) {
            s.checked = 1;
            s.degenerate = 1;
            s.violations = common > 0 ? 1 : 0;
          } else if (e.code() == Errc::InfiniteSharedComponent) {
            s.unresolved = 1;
            s.violations = common > 9 ? 1 : 0;
          } else {
            throw;
          }
        }
        break;
      }
    }
    return std::uint64_t{0};
  });
  K310Summary total;
  total.trials = trials;
  for (const auto& s : parts) {
    total.checked += s.checked;
    total.degenerate += s.degenerate;
    total.unresolved += s.unresolved;
    total.violations += s.violations;
    total.max_upper_bound = std::max(total.max_upper_bound, s.max_upper_bound);
    total.max_common_in_q = std::max(total.max_common_in_q, s.max_common_in_q);
  }
  return total;
}

}  // namespace unitarea

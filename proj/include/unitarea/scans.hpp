#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

#include "unitarea/curves.hpp"
#include "unitarea/incidence_pair.hpp"

namespace unitarea {

// Independent stream for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// Random incidence pair: integer point in [−5, 5]², slope num/den with
// num ∈ [−6, 6], den ∈ [1, 4].
IncidencePairParam random_pair(std::mt19937_64& rng);

// Two pairs in general position: p1 ∉ ℓ2, p2 ∉ ℓ1, distinct points and no two
// of ℓ1, ℓ2, line(p1, p2) parallel.
std::pair<IncidencePairParam, IncidencePairParam> random_general_couple(std::mt19937_64& rng);

// Two pairs with p2 ∈ ℓ1, p1 ∉ ℓ2, ℓ1 and ℓ2 not parallel.
std::pair<IncidencePairParam, IncidencePairParam> random_point_on_line_couple(std::mt19937_64& rng);

struct BezoutSummary {
  std::size_t trials = 0;
  std::size_t checked = 0;
  std::size_t shared_component = 0;  // skipped: curves share a component
  std::size_t max_upper_bound = 0;
  std::size_t violations = 0;  // upper bound above 9
};

// γ*(P1, P2) against γ*(P3, P4) for random general couples.
BezoutSummary bezout_scan(std::size_t trials, std::uint64_t seed, unsigned threads = 1);

struct K310Summary {
  std::size_t trials = 0;
  std::size_t checked = 0;
  // Two generators on one line: the common points would need L = 0, where the
  // matching equation forces w = κ, so σ_i ∩ σ_j is empty and the bound is 0.
  std::size_t degenerate = 0;
  std::size_t unresolved = 0;  // every pairing of projections shares a component
  std::size_t max_upper_bound = 0;
  std::size_t max_common_in_q = 0;  // elements of Q matching all three generators
  std::size_t violations = 0;       // upper bound above 9, or more common elements than the bound allows
};

// Random triples of distinct elements of Q for random 14-point sets (k = 2);
// in odd trials the three generators share a matched partner.
K310Summary k310_scan(std::size_t trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace unitarea

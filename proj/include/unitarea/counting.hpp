#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "unitarea/geometry.hpp"

namespace unitarea {

// Unordered triples of S with area exactly A, by exhaustive O(n³) scan.
// Throws ZeroArea for A <= 0.
std::uint64_t count_brute(std::span<const Point> points, const Rational& area, unsigned threads = 1);

// Same count via pairs: for each pair (a, b) the third vertex lies on one of
// the two lines parallel to ab at the right distance, and those lines are
// looked up by their value of A·x + B·y. Each triangle is found once per
// side, so the sum is divided by 3.
std::uint64_t count_pairline(std::span<const Point> points, const Rational& area, unsigned threads = 1);

struct RichnessTally {
  std::uint64_t T0 = 0;
  std::uint64_t T1 = 0;
  std::uint64_t T2 = 0;
  std::uint64_t T3 = 0;
  std::uint64_t total = 0;
  // Largest number of area-A triangles with a poor top line over one base pair.
  std::uint64_t max_poor_per_base = 0;
};

// Classifies every area-A triangle by its number of k-rich top lines. Throws
// InvariantViolation if some base pair carries more than 2(k − 1) triangles
// whose top line over that base is poor.
RichnessTally tally_by_richness(std::span<const Point> points, std::size_t k, const Rational& area = Rational(1));

struct MatchingIdentity {
  std::uint64_t M = 0;             // with the q∈S filter
  std::uint64_t M_unfiltered = 0;  // every ccw matching pair of Q
  std::uint64_t N = 0;             // |Q|
  RichnessTally tally;
  bool holds = false;  // M == 3·T3 + T2
};

// Shears S if needed so that no spanned line is vertical, then compares the
// matching count with the tally.
MatchingIdentity matching_identity_check(std::span<const Point> points, std::size_t k,
                                         const Rational& area = Rational(1), unsigned threads = 1);

struct MatchingCount {
  std::size_t N = 0;
  std::uint64_t M = 0;
};

// Ordered ccw matching pairs of Q at area A, after the same internal shear.
MatchingCount matching_count(std::span<const Point> points, std::size_t k, const Rational& area, bool require_q_in_s,
                             unsigned threads = 1);

// ---- generators ----------------------------------------------------------------

// rows = max(2, round(√log₂ n)), cols = ⌈n / rows⌉; the first n points of
// {0..cols−1} × {0..rows−1}, y outer, x inner. Requires n >= 4.
std::vector<Point> gen_lattice_section(std::size_t n);

// n distinct integer points in [−bound, bound]², determined by seed. Throws
// Unsatisfiable if n > (2·bound + 1)².
std::vector<Point> gen_random(std::size_t n, long bound, std::uint64_t seed);

// {0..cols−1} × {0..rows−1}.
std::vector<Point> gen_grid(std::size_t rows, std::size_t cols);

// per_line points x = 0..per_line−1 on each of the lines y = 0, spacing, 2·spacing, ...
std::vector<Point> gen_parallel_lines(std::size_t lines, std::size_t per_line, long spacing);

enum class GeneratorKind { Lattice, Random, Grid, Parallel };

std::string to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(const std::string& name);

// Size-parametrized family used by the scaling experiment: random points in
// [−bound, bound]² with bound = ⌈√n⌉, the ⌈√n⌉-wide square grid and three
// parallel lines are all truncated to exactly n points.
std::vector<Point> generate(GeneratorKind kind, std::size_t n, std::uint64_t seed);

// ---- experiments ---------------------------------------------------------------

struct ExperimentRow {
  std::string generator;
  std::size_t n = 0;
  std::size_t k = 0;
  Rational area;
  std::uint64_t count = 0;
  std::size_t m = 0;
  std::size_t N = 0;
  std::optional<std::uint64_t> M;
  std::optional<RichnessTally> tally;
  double seconds = 0;
  std::uint64_t seed = 0;
};

struct ScalingOptions {
  unsigned threads = 1;
  // Sizes up to this bound also get the tally and the matching count.
  std::size_t matching_limit = 60;
  bool timing = true;
};

struct ScalingResult {
  std::vector<ExperimentRow> rows;
  // Lattice runs only: whether count/n² never decreases.
  std::optional<bool> trend_non_decreasing;
};

// Throws InvalidArgument unless sizes are strictly ascending.
ScalingResult scaling_experiment(GeneratorKind kind, const std::vector<std::size_t>& sizes, std::size_t k,
                                 const Rational& area, std::uint64_t seed, const ScalingOptions& options = {});

constexpr const char* kExperimentCsvHeader = "generator,n,k,area,count,m,N,M,T0,T1,T2,T3,seconds,seed";

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace unitarea

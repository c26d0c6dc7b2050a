#include "unitarea/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "unitarea/error.hpp"
#include "unitarea/incidence.hpp"
#include "unitarea/matching.hpp"
#include "unitarea/parallel.hpp"

namespace unitarea {

namespace {

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept { return hash_value(r); }
};

void require_positive_area(const Rational& area) {
  if (sgn(area) <= 0) throw Error(Errc::ZeroArea, "area must be positive, got " + to_string(area));
}

}  // namespace

std::uint64_t count_brute(std::span<const Point> points, const Rational& area, unsigned threads) {
  require_positive_area(area);
  const Rational twice = 2 * area;
  const std::size_t n = points.size();
  return parallel_sum(n, threads, [&](std::size_t begin, std::size_t end) {
    std::uint64_t count = 0;
    Rational s;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
          s = abs(signed_area2(points[i], points[j], points[l]));
          if (s == twice) ++count;
        }
      }
    }
    return count;
  });
}

std::uint64_t count_pairline(std::span<const Point> points, const Rational& area, unsigned threads) {
  require_positive_area(area);
  const auto lines = spanned_lines(points);
  // Lines are sorted by (A, B, C): each direction is a contiguous run.
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i == 0 || lines[i].line.a() != lines[i - 1].line.a() || lines[i].line.b() != lines[i - 1].line.b()) {
      group_start.push_back(i);
    }
  }
  group_start.push_back(lines.size());
  const Rational twice = 2 * area;

  const std::uint64_t sides = parallel_sum(group_start.size() - 1, threads, [&](std::size_t begin, std::size_t end) {
    std::uint64_t count = 0;
    std::unordered_map<Rational, std::uint32_t, RationalHash> level;
    for (std::size_t g = begin; g < end; ++g) {
      const Rational A(lines[group_start[g]].line.a());
      const Rational B(lines[group_start[g]].line.b());
      level.clear();
      level.reserve(points.size() * 2);
      for (const Point& p : points) ++level[A * p.x + B * p.y];
      auto at = [&](const Rational& v) -> std::uint32_t {
        auto it = level.find(v);
        return it == level.end() ? 0 : it->second;
      };
      for (std::size_t li = group_start[g]; li < group_start[g + 1]; ++li) {
        const auto& members = lines[li].members;
        const Rational v = A * members[0].x + B * members[0].y;
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t j = i + 1; j < members.size(); ++j) {
            // signed_area2(a, b, r) = λ·(val(r) − val(a)) with (−d.y, d.x) = λ·(A, B).
            const Rational lambda =
                sgn(B) != 0 ? (members[j].x - members[i].x) / B : (members[i].y - members[j].y) / A;
            const Rational offset = abs(twice / lambda);
            count += at(v + offset) + at(v - offset);
          }
        }
      }
    }
    return count;
  });
  if (sides % 3 != 0) throw Error(Errc::InvariantViolation, "pair-line side count is not a multiple of 3");
  return sides / 3;
}

RichnessTally tally_by_richness(std::span<const Point> points, std::size_t k, const Rational& area) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  require_positive_area(area);
  const LineIndex index(points);
  const Rational twice = 2 * area;
  const std::size_t n = points.size();
  RichnessTally tally;
  std::unordered_map<std::uint64_t, std::uint64_t> poor_per_base;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        if (abs(signed_area2(points[i], points[j], points[l])) != twice) continue;
        const Triangle t{{points[i], points[j], points[l]}};
        const auto tops = top_lines(t);
        const std::array<std::size_t, 3> idx = {i, j, l};
        int rich = 0;
        for (int v = 0; v < 3; ++v) {
          if (index.is_rich(tops[v], k)) {
            ++rich;
            continue;
          }
          // The base opposite vertex v.
          const std::size_t lo = idx[(v + 1) % 3];
          const std::size_t hi = idx[(v + 2) % 3];
          const std::uint64_t key = static_cast<std::uint64_t>(std::min(lo, hi)) * n + std::max(lo, hi);
          tally.max_poor_per_base = std::max(tally.max_poor_per_base, ++poor_per_base[key]);
        }
        switch (rich) {
          case 0: ++tally.T0; break;
          case 1: ++tally.T1; break;
          case 2: ++tally.T2; break;
          default: ++tally.T3; break;
        }
        ++tally.total;
      }
    }
  }
  if (tally.max_poor_per_base > 2 * (k - 1)) {
    throw Error(Errc::InvariantViolation, "a base pair carries " + std::to_string(tally.max_poor_per_base) +
                                              " poor assignments, more than 2(k-1)");
  }
  return tally;
}

MatchingIdentity matching_identity_check(std::span<const Point> points, std::size_t k, const Rational& area,
                                         unsigned threads) {
  MatchingIdentity out;
  out.tally = tally_by_richness(points, k, area);
  const auto sheared = shear(points, find_shear(points));
  const auto q = build_incidence_set(sheared, k);
  out.N = q.size();
  out.M = count_matching_pairs(q, area, true, sheared, threads);
  out.M_unfiltered = count_matching_pairs(q, area, false, sheared, threads);
  out.holds = out.M == 3 * out.tally.T3 + out.tally.T2;
  return out;
}

MatchingCount matching_count(std::span<const Point> points, std::size_t k, const Rational& area, bool require_q_in_s,
                             unsigned threads) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  const auto sheared = shear(points, find_shear(points));
  const auto q = build_incidence_set(sheared, k);
  return {q.size(), count_matching_pairs(q, area, require_q_in_s, sheared, threads)};
}

// ---- generators ----------------------------------------------------------------

std::vector<Point> gen_lattice_section(std::size_t n) {
  if (n < 4) throw Error(Errc::InvalidArgument, "lattice section needs n >= 4");
  const auto rows = std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(std::sqrt(std::log2(double(n))))));
  const std::size_t cols = (n + rows - 1) / rows;
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t y = 0; y < rows && out.size() < n; ++y) {
    for (std::size_t x = 0; x < cols && out.size() < n; ++x) out.emplace_back(long(x), long(y));
  }
  return out;
}

std::vector<Point> gen_random(std::size_t n, long bound, std::uint64_t seed) {
  if (bound < 0) throw Error(Errc::InvalidArgument, "bound must be non-negative");
  const long double side = 2.0L * bound + 1;
  if (static_cast<long double>(n) > side * side) {
    throw Error(Errc::Unsatisfiable, std::to_string(n) + " distinct points do not fit in [-" + std::to_string(bound) +
                                          ", " + std::to_string(bound) + "]^2");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::unordered_set<Point, PointHash> seen;
  std::vector<Point> out;
  out.reserve(n);
  while (out.size() < n) {
    const long x = coord(rng);
    const long y = coord(rng);
    Point p(x, y);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> gen_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error(Errc::InvalidArgument, "grid dimensions must be positive");
  std::vector<Point> out;
  out.reserve(rows * cols);
  for (std::size_t y = 0; y < rows; ++y) {
    for (std::size_t x = 0; x < cols; ++x) out.emplace_back(long(x), long(y));
  }
  return out;
}

std::vector<Point> gen_parallel_lines(std::size_t lines, std::size_t per_line, long spacing) {
  if (lines == 0 || per_line == 0 || spacing <= 0) {
    throw Error(Errc::InvalidArgument, "parallel lines need positive dimensions");
  }
  std::vector<Point> out;
  out.reserve(lines * per_line);
  for (std::size_t r = 0; r < lines; ++r) {
    for (std::size_t x = 0; x < per_line; ++x) out.emplace_back(long(x), long(r) * spacing);
  }
  return out;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Lattice: return "lattice";
    case GeneratorKind::Random: return "random";
    case GeneratorKind::Grid: return "grid";
    case GeneratorKind::Parallel: return "parallel";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator_kind(const std::string& name) {
  for (auto k : {GeneratorKind::Lattice, GeneratorKind::Random, GeneratorKind::Grid, GeneratorKind::Parallel}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<Point> generate(GeneratorKind kind, std::size_t n, std::uint64_t seed) {
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(double(n))));
  std::vector<Point> out;
  switch (kind) {
    case GeneratorKind::Lattice: return gen_lattice_section(n);
    case GeneratorKind::Random: return gen_random(n, long(std::max<std::size_t>(side, 1)), seed);
    case GeneratorKind::Grid: out = gen_grid(std::max<std::size_t>(side, 1), std::max<std::size_t>(side, 1)); break;
    case GeneratorKind::Parallel: out = gen_parallel_lines(3, std::max<std::size_t>((n + 2) / 3, 1), 1); break;
  }
  out.resize(std::min(out.size(), n));
  return out;
}

// ---- experiments ---------------------------------------------------------------

ScalingResult scaling_experiment(GeneratorKind kind, const std::vector<std::size_t>& sizes, std::size_t k,
                                 const Rational& area, std::uint64_t seed, const ScalingOptions& options) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  require_positive_area(area);
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw Error(Errc::InvalidArgument, "sizes must be strictly ascending");
  }
  ScalingResult result;
  for (std::size_t n : sizes) {
    const auto start = std::chrono::steady_clock::now();
    const auto points = generate(kind, n, seed);
    ExperimentRow row;
    row.generator = to_string(kind);
    row.n = points.size();
    row.k = k;
    row.area = area;
    row.seed = seed;
    row.count = count_pairline(points, area, options.threads);
    const IncidenceStats st = incidence_stats(points, k);
    row.m = st.m;
    row.N = st.N;
    if (row.n <= options.matching_limit) {
      const MatchingIdentity mi = matching_identity_check(points, k, area, options.threads);
      if (!mi.holds) throw Error(Errc::InvariantViolation, "matching identity fails at n=" + std::to_string(n));
      row.M = mi.M;
      row.tally = mi.tally;
    }
    if (options.timing) {
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    result.rows.push_back(std::move(row));
  }
  if (kind == GeneratorKind::Lattice) {
    bool ok = true;
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
      const auto& p = result.rows[i - 1];
      const auto& c = result.rows[i];
      // count_p / n_p² <= count_c / n_c²
      const Integer lhs = Integer(static_cast<unsigned long>(p.count)) * c.n * c.n;
      const Integer rhs = Integer(static_cast<unsigned long>(c.count)) * p.n * p.n;
      if (lhs > rhs) ok = false;
    }
    result.trend_non_decreasing = ok;
  }
  return result;
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kExperimentCsvHeader << '\n';
  for (const ExperimentRow& r : rows) {
    out << r.generator << ',' << r.n << ',' << r.k << ',' << to_string(r.area) << ',' << r.count << ',' << r.m << ','
        << r.N << ',';
    if (r.M) out << *r.M;
    out << ',';
    if (r.tally) out << r.tally->T0 << ',' << r.tally->T1 << ',' << r.tally->T2 << ',' << r.tally->T3;
    else out << ",,,";
    out << ',' << std::fixed << std::setprecision(6) << r.seconds << std::defaultfloat << ',' << r.seed << '\n';
  }
}

}  // namespace unitarea

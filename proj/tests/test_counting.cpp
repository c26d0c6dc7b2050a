#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "support.hpp"
#include "unitarea/counting.hpp"
#include "unitarea/error.hpp"

using namespace unitarea;
using testsupport::oracle_count;
using testsupport::pts;

namespace {

const std::vector<std::pair<long, long>> kAreas = {{1, 1}, {1, 2}, {3, 1}, {7, 2}};

}  // namespace

TEST(Count, SmallExamples) {
  const auto tri = pts({{0, 0}, {2, 0}, {0, 1}});
  EXPECT_EQ(count_brute(tri, 1), 1u);
  EXPECT_EQ(count_pairline(tri, 1), 1u);
  const auto sq = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(count_brute(sq, make_rational(1, 2)), 4u);
  EXPECT_EQ(count_pairline(sq, make_rational(1, 2)), 4u);
  EXPECT_EQ(count_brute(sq, 1), 0u);
  EXPECT_EQ(count_pairline(sq, 1), 0u);
  const auto five = pts({{0, 0}, {1, 0}, {2, 0}, {0, 2}, {1, 2}});
  EXPECT_EQ(oracle_count(five, 1, 1), 7u);
  EXPECT_EQ(count_brute(five, 1), 7u);
  EXPECT_EQ(count_pairline(five, 1), 7u);
}

TEST(Count, ZeroAreaRejected) {
  const auto sq = pts({{0, 0}, {1, 0}, {0, 1}});
  for (const Rational& a : {Rational(0), Rational(-1)}) {
    try {
      count_pairline(sq, a);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ZeroArea);
    }
    EXPECT_THROW(count_brute(sq, a), Error);
  }
}

TEST(Count, PairlineMatchesOraclesProperty) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testsupport::random_points(rng, 5 + trial, 3 + trial % 5);
    for (auto [num, den] : kAreas) {
      const Rational a = make_rational(num, den);
      const auto expected = oracle_count(p, num, den);
      EXPECT_EQ(count_brute(p, a), expected);
      EXPECT_EQ(count_pairline(p, a), expected);
    }
  }
}

TEST(Count, RationalCoordinates) {
  const std::vector<Point> p = {Point(make_rational(1, 2), Rational(0)), Point(Rational(0), make_rational(1, 3)),
                                Point(Rational(2), Rational(1)), Point(Rational(1), make_rational(-1, 2))};
  for (const Rational& a : {make_rational(1, 6), make_rational(5, 12), Rational(1)}) {
    EXPECT_EQ(count_pairline(p, a), count_brute(p, a));
  }
}

TEST(Count, ShearInvarianceProperty) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 15; ++trial) {
    const auto p = testsupport::random_points(rng, 20, 3);
    for (const Rational& t : {Rational(1), make_rational(1, 2), Rational(2)}) {
      const auto s = shear(p, t);
      EXPECT_EQ(count_brute(s, 1), count_brute(p, 1));
      EXPECT_EQ(count_pairline(s, 1), count_brute(p, 1));
    }
  }
}

TEST(Count, ThreadCountDoesNotChangeResult) {
  const auto p = gen_lattice_section(120);
  const auto one = count_pairline(p, make_rational(1, 2), 1);
  EXPECT_EQ(count_pairline(p, make_rational(1, 2), 3), one);
  const auto q = gen_random(40, 4, 7);
  EXPECT_EQ(count_brute(q, 1, 4), count_brute(q, 1, 1));
}

TEST(Tally, GridAndEmpty) {
  const auto g = gen_grid(3, 3);
  const auto t = tally_by_richness(g, 2, 1);
  EXPECT_EQ(t.total, count_brute(g, 1));
  EXPECT_EQ(t.T0 + t.T1 + t.T2 + t.T3, t.total);
  const auto none = tally_by_richness(pts({{0, 0}, {1, 0}, {0, 1}}), 2, 5);
  EXPECT_EQ(none.total, 0u);
  EXPECT_EQ(none.T3, 0u);
  EXPECT_THROW(tally_by_richness(g, 1, 1), Error);
}

TEST(Tally, PoorAssignmentsPerBaseProperty) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testsupport::random_points(rng, 20, 3);
    for (std::size_t k : {2u, 3u, 4u}) {
      const auto t = tally_by_richness(p, k, 1);
      EXPECT_LE(t.max_poor_per_base, 2 * (k - 1));
      EXPECT_EQ(t.total, oracle_count(p, 1, 1));
    }
  }
}

TEST(MatchingIdentity, GridsAndRandomSets) {
  for (std::size_t side : {3u, 4u}) {
    for (std::size_t k : {2u, 3u, 4u}) {
      const auto mi = matching_identity_check(gen_grid(side, side), k, 1);
      EXPECT_TRUE(mi.holds) << side << "x" << side << " k=" << k << " M=" << mi.M;
      EXPECT_EQ(mi.M, 3 * mi.tally.T3 + mi.tally.T2);
      EXPECT_GE(mi.M_unfiltered, mi.M);
    }
  }
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testsupport::random_points(rng, 20, 3);
    for (std::size_t k : {2u, 3u}) EXPECT_TRUE(matching_identity_check(p, k, 1).holds);
  }
  const auto none = matching_identity_check(pts({{0, 0}, {1, 0}, {0, 1}}), 2, 5);
  EXPECT_EQ(none.M, 0u);
  EXPECT_TRUE(none.holds);
}

TEST(MatchingIdentity, OtherAreas) {
  const auto g = gen_grid(4, 4);
  for (const Rational& a : {make_rational(1, 2), make_rational(3, 2), Rational(2)}) {
    EXPECT_TRUE(matching_identity_check(g, 2, a).holds);
  }
}

TEST(Generators, LatticeSection) {
  const auto p16 = gen_lattice_section(16);
  ASSERT_EQ(p16.size(), 16u);
  EXPECT_EQ(p16.front(), Point(0, 0));
  EXPECT_EQ(p16[7], Point(7, 0));
  EXPECT_EQ(p16[8], Point(0, 1));
  EXPECT_EQ(p16.back(), Point(7, 1));
  const auto p1024 = gen_lattice_section(1024);
  ASSERT_EQ(p1024.size(), 1024u);
  EXPECT_EQ(p1024[341], Point(341, 0));
  EXPECT_EQ(p1024[342], Point(0, 1));
  EXPECT_EQ(p1024.back(), Point(1024 - 2 * 342 - 1, 2));
  for (std::size_t n : {4u, 5u, 99u, 100u, 800u}) {
    const auto p = gen_lattice_section(n);
    EXPECT_EQ(std::set<Point>(p.begin(), p.end()).size(), n);
  }
  EXPECT_THROW(gen_lattice_section(3), Error);
}

TEST(Generators, RandomIsDeterministicAndBounded) {
  EXPECT_EQ(gen_random(30, 4, 9), gen_random(30, 4, 9));
  EXPECT_NE(gen_random(30, 4, 9), gen_random(30, 4, 10));
  EXPECT_TRUE(gen_random(0, 4, 1).empty());
  const auto p = gen_random(81, 4, 3);
  EXPECT_EQ(std::set<Point>(p.begin(), p.end()).size(), 81u);
  for (const auto& q : p) {
    EXPECT_LE(abs(q.x), 4);
    EXPECT_LE(abs(q.y), 4);
  }
  try {
    gen_random(82, 4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unsatisfiable);
  }
}

TEST(Generators, GridAndParallelLines) {
  EXPECT_EQ(gen_grid(3, 3).size(), 9u);
  EXPECT_EQ(count_pairline(gen_grid(1, 12), 1), 0u);
  EXPECT_EQ(count_brute(gen_grid(1, 12), make_rational(1, 2)), 0u);
  const std::size_t m = 6;
  const auto p = gen_parallel_lines(3, m, 1);
  EXPECT_EQ(p.size(), 3 * m);
  EXPECT_TRUE(std::find(p.begin(), p.end(), Point(5, 2)) != p.end());
  // Every unit-x-distance pair on y = 0 with any apex on y = 2 has area 1.
  EXPECT_GE(count_pairline(p, 1), (m - 1) * m);
  EXPECT_EQ(count_pairline(p, 1), oracle_count(p, 1, 1));
  EXPECT_THROW(gen_grid(0, 3), Error);
  EXPECT_THROW(gen_parallel_lines(2, 2, 0), Error);
}

TEST(Scaling, CsvIsReproducible) {
  ScalingOptions opt;
  opt.timing = false;
  const auto a = scaling_experiment(GeneratorKind::Random, {10, 20, 40}, 2, 1, 5, opt);
  const auto b = scaling_experiment(GeneratorKind::Random, {10, 20, 40}, 2, 1, 5, opt);
  std::ostringstream sa, sb;
  write_experiment_csv(sa, a.rows);
  write_experiment_csv(sb, b.rows);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(sa.str().substr(0, sa.str().find('\n')), "generator,n,k,area,count,m,N,M,T0,T1,T2,T3,seconds,seed");
  EXPECT_FALSE(a.trend_non_decreasing.has_value());
  for (const auto& r : a.rows) {
    EXPECT_TRUE(r.M.has_value());
    EXPECT_EQ(*r.M, 3 * r.tally->T3 + r.tally->T2);
    EXPECT_EQ(r.count, r.tally->total);
  }
  EXPECT_THROW(scaling_experiment(GeneratorKind::Random, {20, 10}, 2, 1, 5, opt), Error);
}

TEST(Scaling, LatticeTrendFlag) {
  ScalingOptions opt;
  opt.timing = false;
  opt.matching_limit = 0;
  const auto r = scaling_experiment(GeneratorKind::Lattice, {50, 100}, 2, make_rational(1, 2), 0, opt);
  ASSERT_TRUE(r.trend_non_decreasing.has_value());
  EXPECT_FALSE(r.rows[0].M.has_value());
  std::ostringstream s;
  write_experiment_csv(s, r.rows);
  EXPECT_NE(s.str().find("lattice,50,2,1/2,"), std::string::npos);
  EXPECT_NE(s.str().find(",,,,,0.000000,0\n"), std::string::npos);
}

#include <gtest/gtest.h>

#include <random>

#include "goeritz/coloring.hpp"
#include "test_support.hpp"

namespace goeritz {
namespace {

using testing::ints;

// Counts Dehn colorings straight from the quadrant table, without any relation matrix.
std::uint64_t dehn_oracle(const Diagram& d, long m) {
  const RegionMap rm = trace_regions(d);
  std::vector<long> v(rm.region_count, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& q : rm.quadrant_region) {
      if (((v[q[0]] + v[q[1]] - v[q[2]] - v[q[3]]) % m + m) % m != 0) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == m) v[i++] = 0;
    if (i == v.size()) break;
  }
  return count;
}

TEST(DehnCount, Examples) {
  EXPECT_EQ(dehn_count_bruteforce(parse_diagram("O 1"), 7), 49);
  EXPECT_EQ(dehn_count_bruteforce(parse_diagram(testing::kTrefoil), 3), 27);
  EXPECT_EQ(dehn_count_bruteforce(parse_diagram(testing::kTrefoil), 2), 4);
  EXPECT_EQ(dehn_count_bruteforce(parse_diagram(testing::kFigureEight), 5), 125);
  EXPECT_EQ(dehn_count_bruteforce(parse_diagram("O 2"), 3), 27);
}

TEST(DehnCount, AgreesWithQuadrantOracle) {
  for (const auto& e : testing::corpus()) {
    const Diagram d = parse_diagram(e.code);
    for (long m = 2; m <= 4; ++m) {
      EXPECT_EQ(dehn_count_bruteforce(d, m), Integer(std::to_string(dehn_oracle(d, m)))) << e.name << " m=" << m;
    }
  }
}

TEST(FoxCount, Examples) {
  EXPECT_EQ(fox_count_bruteforce(parse_diagram("O 1"), 5), 5);
  EXPECT_EQ(fox_count_bruteforce(parse_diagram(testing::kTrefoil), 3), 9);
  EXPECT_EQ(fox_count_bruteforce(parse_diagram(testing::kTrefoil), 5), 5);
  EXPECT_EQ(fox_count_bruteforce(parse_diagram(testing::kFigureEight), 5), 25);
  EXPECT_EQ(fox_count_bruteforce(parse_diagram(testing::kHopf), 2), 4);
}

TEST(ArcStructure, Counts) {
  EXPECT_EQ(arc_structure(parse_diagram(testing::kTrefoil)).arc_count, 3u);
  EXPECT_EQ(arc_structure(parse_diagram(testing::kFigureEight)).arc_count, 4u);
  EXPECT_EQ(arc_structure(parse_diagram("O 2")).arc_count, 2u);
  EXPECT_EQ(arc_structure(parse_diagram("X(1,2,2,1)")).arc_count, 1u);
}

TEST(ColoringReport, Descriptors) {
  const ColoringReport r = coloring_report(ints({0, 3, 1}));
  EXPECT_EQ(r.dehn.product_form(), "A x A x A(3)");
  EXPECT_EQ(r.fox.product_form(), "A x A(3)");
  EXPECT_EQ(structure_count(r, 3, ColoringKind::dehn), 27);
  EXPECT_EQ(structure_count(r, 3, ColoringKind::fox), 9);
  EXPECT_EQ(structure_count(r, 2, ColoringKind::dehn), 4);
  EXPECT_EQ(structure_count(r, 6, ColoringKind::fox), 18);
  EXPECT_THROW(structure_count(r, 1, ColoringKind::dehn), std::invalid_argument);
}

TEST(ColoringReport, DiagramStructure) {
  EXPECT_EQ(dehn_structure(parse_diagram(testing::kTrefoil), 0).phi, ints({0, 3, 1}));
  EXPECT_EQ(dehn_structure(parse_diagram(testing::kTrefoil), 1).phi, ints({0, 3}));
  EXPECT_EQ(dehn_structure(parse_diagram(testing::kFigureEight), 0).phi, ints({0, 5, 1}));
  EXPECT_EQ(dehn_structure(parse_diagram(testing::kHopf), 0).phi, ints({0, 2}));
}

TEST(ColoringEquivalent, IgnoresUnitsAndOrder) {
  EXPECT_TRUE(coloring_equivalent(ints({0, 3, 1}), ints({0, 3})));
  EXPECT_TRUE(coloring_equivalent(ints({0, 3, 3, 1, 1}), ints({0, 3, 3})));
  EXPECT_FALSE(coloring_equivalent(ints({0, 3}), ints({0, 5})));
  EXPECT_FALSE(coloring_equivalent(ints({0, 0}), ints({0})));
  EXPECT_FALSE(coloring_equivalent(ints({0, 9}), ints({0, 3, 3})));
}

TEST(ColoringEquivalent, ShadingsOfCorpusAgree) {
  for (const auto& e : testing::corpus()) {
    const Diagram d = parse_diagram(e.code);
    EXPECT_TRUE(coloring_equivalent(goeritz_for(d, 0), goeritz_for(d, 1))) << e.name;
  }
  EXPECT_FALSE(coloring_equivalent(goeritz_for(parse_diagram(testing::kTrefoil), 0),
                                   goeritz_for(parse_diagram(testing::kFigureEight), 0)));
}

TEST(CountOptions, CapExceeded) {
  const Diagram d = parse_diagram(testing::corpus()[6].code);  // eight regions, six arcs
  CountOptions opt;
  opt.method = CountMethod::enumerate;
  opt.enumeration_cap = 5;
  EXPECT_THROW(dehn_count_bruteforce(d, 3, opt), CapExceededError);
  EXPECT_THROW(fox_count_bruteforce(d, 3, opt), CapExceededError);
  opt.method = CountMethod::automatic;
  EXPECT_EQ(dehn_count_bruteforce(d, 3, opt), 81);
  EXPECT_THROW(dehn_count_bruteforce(d, 1), std::invalid_argument);
}

TEST(CountOptions, LinearMatchesEnumeration) {
  std::mt19937_64 rng(31);
  CountOptions enumerate{8, 2'000'000'000ULL, CountMethod::enumerate};
  CountOptions linear{8, 2'000'000'000ULL, CountMethod::linear};
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Diagram d = testing::random_diagram(rng);
    if (trace_regions(d).region_count > 7) continue;
    for (long m = 2; m <= 4; ++m) {
      EXPECT_EQ(dehn_count_bruteforce(d, m, linear), dehn_count_bruteforce(d, m, enumerate));
      EXPECT_EQ(fox_count_bruteforce(d, m, linear), fox_count_bruteforce(d, m, enumerate));
    }
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(ColoringCount, InvariantUnderRelabeling) {
  std::mt19937_64 rng(37);
  for (const auto& e : testing::corpus()) {
    const Diagram d = parse_diagram(e.code);
    const Diagram r = testing::relabel(d, rng);
    for (long m = 2; m <= 5; ++m) {
      EXPECT_EQ(dehn_count_bruteforce(d, m), dehn_count_bruteforce(r, m)) << e.name;
      EXPECT_EQ(fox_count_bruteforce(d, m), fox_count_bruteforce(r, m)) << e.name;
    }
  }
}

}  // namespace
}  // namespace goeritz

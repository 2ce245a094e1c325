#include "covpeb/solver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "covpeb/error.hpp"
#include "covpeb/families.hpp"
#include "testing.hpp"

namespace covpeb {
namespace {

using C = std::vector<std::uint64_t>;

TEST(CostFrom, Examples) {
  const auto fig = testing::figure1_digraph();
  EXPECT_EQ(cost_from(fig, GoalDistribution::ones(5), testing::kFigure1V), 23u);
  EXPECT_EQ(cost_from(testing::path(1), GoalDistribution(C{1}), 0), 1u);
  EXPECT_EQ(cost_from(testing::path(3), GoalDistribution::ones(3), 0), 7u);
  EXPECT_EQ(cost_from(testing::path(3), GoalDistribution::ones(3), 1), 5u);
}

TEST(CostFrom, OverflowIsReported) {
  // An endpoint of a 65-node path sees a node at distance 64.
  const auto long_path = testing::path(65);
  try {
    cost_from(long_path, GoalDistribution::ones(65), 0);
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
    EXPECT_NE(std::string(e.what()).find("node 64"), std::string::npos) << e.what();
  }
  // 64 nodes: 2^64 - 1 still fits.
  EXPECT_EQ(cost_from(testing::path(64), GoalDistribution::ones(64), 0), ~std::uint64_t{0});
  EXPECT_THROW(cost_from(testing::path(64), GoalDistribution(C(64, 2)), 0), Error);
}

TEST(Gamma, TableExamples) {
  const auto p4 = gamma(testing::path(4), GoalDistribution::ones(4));
  EXPECT_EQ(p4.gamma, 15u);
  EXPECT_EQ(p4.argmax_node, 0u);
  EXPECT_EQ(p4.costs, (C{15, 9, 9, 15}));

  EXPECT_EQ(gamma(testing::cycle(4), GoalDistribution::ones(4)).gamma, 9u);
  const auto wheel = family(FamilyKind::Wheel, C{4});
  EXPECT_EQ(gamma(wheel, GoalDistribution::ones(5)).gamma, 11u);
}

TEST(Gamma, Figure1Digraph) {
  // From node 0 the far branch node 1 is four arcs away: 1+2+4+8+16.
  const auto profile = gamma(testing::figure1_digraph(), GoalDistribution::ones(5));
  EXPECT_EQ(profile.costs, (C{31, 31, 17, 19, 23}));
  EXPECT_EQ(profile.gamma, 31u);
  EXPECT_EQ(profile.argmax_node, 0u);
}

TEST(Gamma, AgreesWithBruteCost) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 8);
    const auto g = testing::random_graph(rng, n, trial % 2 == 0, 0.35);
    const auto w = testing::random_goal(rng, n, 4);
    const auto profile = gamma(g, w);
    std::uint64_t best = 0;
    for (Node v = 0; v < n; ++v) {
      const auto expected = testing::brute_cost(g, w, v);
      ASSERT_EQ(profile.costs[v], expected);
      EXPECT_GE(profile.costs[v], w.total());
      best = std::max(best, expected);
    }
    EXPECT_EQ(profile.gamma, best);
    EXPECT_EQ(profile.costs[profile.argmax_node], best);
    for (Node v = 0; v < profile.argmax_node; ++v) EXPECT_LT(profile.costs[v], best);
  }
}

TEST(Gamma, InvariantUnderRelabeling) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 8);
    const auto g = testing::random_graph(rng, n, trial % 2 == 1, 0.35);
    const auto w = testing::random_goal(rng, n, 3);
    const auto perm = testing::random_permutation(rng, n);
    C moved(n);
    for (Node v = 0; v < n; ++v) moved[perm[v]] = w[v];
    EXPECT_EQ(gamma(relabel(g, perm), GoalDistribution(moved)).gamma, gamma(g, w).gamma);
  }
}

TEST(Gamma, LinearInGoalScaling) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 7);
    const auto g = testing::random_graph(rng, n, trial % 2 == 0, 0.4);
    const auto w = testing::random_goal(rng, n, 3);
    const std::uint64_t c = 1 + rng() % 9;
    const auto base = gamma(g, w);
    const auto scaled = gamma(g, w.scaled(c));
    EXPECT_EQ(scaled.gamma, c * base.gamma);
    EXPECT_EQ(scaled.argmax_node, base.argmax_node);
    for (Node v = 0; v < n; ++v) EXPECT_EQ(scaled.costs[v], c * base.costs[v]);
  }
}

TEST(Gamma, DimensionMismatch) {
  EXPECT_THROW(gamma(testing::path(3), GoalDistribution::ones(2)), Error);
}

TEST(ProductGammaCheck, Examples) {
  const auto p2 = testing::path(2);
  const auto square = product_gamma_check(p2, GoalDistribution::ones(2), p2, GoalDistribution::ones(2));
  EXPECT_EQ(square.lhs, 9u);
  EXPECT_EQ(square.rhs, 9u);
  EXPECT_TRUE(square.equal);

  const auto grid = product_gamma_check(p2, GoalDistribution::ones(2), testing::path(3),
                                        GoalDistribution::ones(3));
  EXPECT_EQ(grid.lhs, 21u);
  EXPECT_EQ(grid.rhs, 21u);

  const auto c5 = testing::cycle(5);
  const GoalDistribution w5(C{1, 2, 3, 1, 2});
  const auto identity = product_gamma_check(testing::path(1), GoalDistribution::ones(1), c5, w5);
  EXPECT_EQ(identity.lhs, gamma(c5, w5).gamma);
  EXPECT_TRUE(identity.equal);
}

TEST(ProductGammaCheck, HoldsOnSmallGraphPairs) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const bool directed = trial % 3 == 0;
    const auto g1 = testing::random_graph(rng, 1 + rng() % 5, directed, 0.4);
    const auto g2 = testing::random_graph(rng, 1 + rng() % 5, directed, 0.4);
    const auto w1 = testing::random_goal(rng, g1.node_count(), 3);
    const auto w2 = testing::random_goal(rng, g2.node_count(), 3);
    const auto check = product_gamma_check(g1, w1, g2, w2);
    EXPECT_TRUE(check.equal) << check.lhs << " vs " << check.rhs;
  }
}

}  // namespace
}  // namespace covpeb

#include "covpeb/collapse.hpp"

#include <gtest/gtest.h>

#include <random>

#include "covpeb/error.hpp"
#include "covpeb/oracle.hpp"
#include "covpeb/solver.hpp"
#include "testing.hpp"

namespace covpeb {
namespace {

using C = std::vector<std::uint64_t>;
using Pair = std::pair<Node, Node>;

ValuedDistribution unit(C counts) { return ValuedDistribution::lift(Distribution(std::move(counts))); }

void expect_violation(auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected ProofViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ProofViolation) << e.what();
  }
}

TEST(SelectPair, Examples) {
  const auto p2 = testing::path(2);
  EXPECT_EQ(select_pair(p2, unit({0, 2}), GoalDistribution::ones(2)), Pair(1, 0));
  EXPECT_FALSE(select_pair(p2, unit({1, 0}), GoalDistribution::ones(2)).has_value());
  EXPECT_FALSE(select_pair(p2, unit({3, 1}), GoalDistribution::ones(2)).has_value());
  EXPECT_EQ(select_pair(testing::path(5), unit({17, 1, 1, 1, 0}), GoalDistribution::ones(5)),
            Pair(0, 4));
  // Two pairs at distance 1: (0,1) and (2,1); least fat id wins.
  EXPECT_EQ(select_pair(testing::path(3), unit({2, 0, 2}), GoalDistribution::ones(3)), Pair(0, 1));
}

TEST(ChainMove, Figure2Replay) {
  const auto g = testing::path(5);
  const auto w = GoalDistribution::ones(5);
  const auto after = chain_move(g, unit({17, 1, 1, 1, 0}), w, 0, 4);
  EXPECT_EQ(after.counts(), Distribution(C{15, 0, 0, 0, 1}));
  // Two unit parents plus one unit pebble from each of three inner nodes.
  ASSERT_EQ(after.count(4), 1u);
  EXPECT_EQ(after.at(4)[0], 5u);
  EXPECT_LE(after.at(4)[0], 16u);
  EXPECT_EQ(after.total_value(), 20u);
}

TEST(ChainMove, ShortChains) {
  const auto p2 = chain_move(testing::path(2), unit({0, 2}), GoalDistribution::ones(2), 1, 0);
  EXPECT_EQ(p2.counts(), Distribution(C{1, 0}));
  EXPECT_EQ(p2.at(0)[0], 2u);

  const auto p3 = chain_move(testing::path(3), unit({4, 1, 0}), GoalDistribution::ones(3), 0, 2);
  EXPECT_EQ(p3.counts(), Distribution(C{2, 0, 1}));
  EXPECT_EQ(p3.at(2)[0], 3u);
}

TEST(ChainMove, InnerNodeTakesSmallestOldPebble) {
  const auto g = testing::path(3);
  const GoalDistribution w(C{1, 2, 1});
  const ValuedDistribution vd({{1, 1, 1}, {2, 1}, {}});
  const auto after = chain_move(g, vd, w, 0, 2);
  EXPECT_EQ(after.at(1).size(), 1u);
  EXPECT_EQ(after.at(1)[0], 2u);
  EXPECT_EQ(after.at(2)[0], 3u);
}

TEST(ChainMove, ProofViolations) {
  const auto p3 = testing::path(3);
  const auto w = GoalDistribution::ones(3);
  // Inner node 1 is thin, so (0,2) is not a closest pair.
  expect_violation([&] { chain_move(p3, unit({3, 0, 0}), w, 0, 2); });
  expect_violation([&] { chain_move(p3, unit({1, 1, 0}), w, 0, 2); });
  expect_violation([&] { chain_move(p3, unit({3, 1, 1}), w, 0, 2); });
  // A fat node holding a non-unit pebble breaks the efficiency condition.
  expect_violation([&] { chain_move(p3, ValuedDistribution({{1, 3}, {}, {1}}), w, 0, 1); });
}

TEST(EfficiencyAudit, Examples) {
  const auto p3 = testing::path(3);
  const auto w = GoalDistribution::ones(3);
  EXPECT_TRUE(efficiency_audit(p3, unit({5, 0, 0}), w));
  EXPECT_FALSE(efficiency_audit(p3, ValuedDistribution({{3, 1}, {}, {}}), w));
  EXPECT_TRUE(efficiency_audit(p3, ValuedDistribution({{1, 1}, {2}, {}}), w));
  EXPECT_FALSE(efficiency_audit(p3, ValuedDistribution({{1, 1}, {3}, {}}), w));
  EXPECT_TRUE(efficiency_audit(p3, ValuedDistribution({{1, 1}, {}, {4}}), w));
  EXPECT_FALSE(efficiency_audit(p3, ValuedDistribution({{1, 1}, {}, {5}}), w));
  // No fat node: vacuous.
  EXPECT_TRUE(efficiency_audit(p3, ValuedDistribution({{9}, {}, {}}), w));
}

TEST(CollapseWitness, Examples) {
  const auto p2 = testing::path(2);
  const auto w2 = GoalDistribution::ones(2);

  const auto single = collapse_witness(p2, Distribution(C{0, 2}), w2);
  EXPECT_EQ(single.witness, 1u);
  ASSERT_EQ(single.iterations.size(), 1u);
  EXPECT_EQ(single.iterations[0].path, (std::vector<Node>{1, 0}));
  EXPECT_EQ(single.iterations[0].new_pebble_value, 2u);
  EXPECT_EQ(single.iterations[0].fat_pebble_total_before, 2u);
  EXPECT_EQ(single.iterations[0].fat_pebble_total_after, 0u);
  EXPECT_TRUE(single.iterations[0].audit.all());
  EXPECT_GT(cost_from(p2, w2, single.witness), 2u);

  const auto none = collapse_witness(p2, Distribution(C{1, 0}), w2);
  EXPECT_EQ(none.witness, 0u);
  EXPECT_TRUE(none.iterations.empty());
  EXPECT_GT(cost_from(p2, w2, none.witness), 1u);

  const auto fig = testing::figure1_digraph();
  const auto w5 = GoalDistribution::ones(5);
  const auto report = collapse_witness(fig, Distribution::simple(5, testing::kFigure1V, 22), w5);
  EXPECT_EQ(report.witness, testing::kFigure1V);
  for (const auto& it : report.iterations) EXPECT_EQ(it.fat, testing::kFigure1V);
  EXPECT_EQ(cost_from(fig, w5, report.witness), 23u);
  EXPECT_EQ(report.final_distribution.total_value(), 22u);
}

TEST(CollapseWitness, Figure2FirstIteration) {
  const auto report = collapse_witness(testing::path(5), Distribution(C{17, 1, 1, 1, 0}),
                                       GoalDistribution::ones(5));
  ASSERT_FALSE(report.iterations.empty());
  EXPECT_EQ(report.iterations[0].fat, 0u);
  EXPECT_EQ(report.iterations[0].thin, 4u);
  EXPECT_EQ(report.iterations[0].path, (std::vector<Node>{0, 1, 2, 3, 4}));
  EXPECT_EQ(report.iterations[0].fat_pebble_total_before, 17u);
  EXPECT_EQ(report.iterations[0].fat_pebble_total_after, 15u);
}

TEST(CollapseWitness, CoverableInputsStillTerminate) {
  // Already a cover with spare pebbles: nothing thin, nothing to do.
  const auto report = collapse_witness(testing::path(3), Distribution(C{1, 3, 1}), GoalDistribution::ones(3));
  EXPECT_TRUE(report.iterations.empty());
  EXPECT_EQ(report.witness, 1u);
}

// Random instances: every run satisfies the audited invariants; on inputs
// the oracle certifies as non-coverable the witness really is a worse start.
TEST(CollapseWitness, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(51);
  int certified = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 5);
    const auto g = testing::random_graph(rng, n, trial % 3 == 0, 0.45);
    const auto w = testing::random_goal(rng, n, 3);
    const auto d = testing::random_distribution(rng, n, rng() % (2 * w.total() + 6));
    const auto report = collapse_witness(g, d, w);

    EXPECT_LE(report.iterations.size(), d.total() / 2);
    EXPECT_EQ(report.final_distribution.total_value(), d.total());
    for (const auto& it : report.iterations) {
      EXPECT_TRUE(it.audit.all());
      EXPECT_LT(it.fat_pebble_total_after, it.fat_pebble_total_before);
    }
    for (std::size_t i = 1; i < report.iterations.size(); ++i) {
      EXPECT_LE(report.iterations[i].fat_pebble_total_before,
                report.iterations[i - 1].fat_pebble_total_after);
    }

    if (can_cover(g, d, w).coverable) continue;
    ++certified;
    const auto final_counts = report.final_distribution.counts();
    for (Node v = 0; v < n; ++v) EXPECT_LE(final_counts[v], w[v]);
    EXPECT_GT(cost_from(g, w, report.witness), d.total());
    EXPECT_FALSE(can_cover(g, Distribution::simple(n, report.witness, d.total()), w).coverable);
  }
  EXPECT_GT(certified, 100);
}

}  // namespace
}  // namespace covpeb

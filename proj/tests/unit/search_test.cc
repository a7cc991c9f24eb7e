// Copyright 2026 The modlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "modlab/errors.h"
#include "modlab/generators.h"
#include "modlab/graph.h"
#include "modlab/modularity.h"
#include "modlab/partition.h"
#include "modlab/rng.h"
#include "modlab/search.h"
#include "oracles.h"

namespace modlab {
namespace {

Partition Labels(std::vector<std::uint32_t> labels) {
  return Partition::FromLabels(std::span<const std::uint32_t>(labels));
}

Graph TwoK2() { return BuildGraph(4, {{0, 1}, {2, 3}}); }

bool SplitsSet(const Partition& a, const std::vector<Vertex>& set) {
  for (Vertex v : set) {
    if (a.part_of(v) != a.part_of(set.front())) return true;
  }
  return false;
}

// Checks the three fattening guarantees.
void ExpectFat(const Graph& g, const Partition& b, double eta, const SearchResult& r) {
  const double two_m = static_cast<double>(g.total_volume());
  for (std::int64_t vol : r.partition.part_volumes(g)) {
    ASSERT_GE(static_cast<double>(vol), eta * two_m) << "eta " << eta;
  }
  ASSERT_TRUE(r.partition.IsCoarseningOf(b));
  ASSERT_LE(r.partition.num_parts(), b.num_parts());
  ASSERT_GT(r.score.q, ModularityScore(g, b).q - 2.0 * eta) << "eta " << eta;
}

TEST(ExactModularity, CompleteGraphsAreZero) {
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_NEAR(ExactModularity(CompleteGraph(n)).score.q, 0.0, 1e-12) << n;
  }
  EXPECT_NEAR(ExactModularity(CompleteBipartiteGraph(2, 3)).score.q, 0.0, 1e-12);
  EXPECT_NEAR(ExactModularity(CompleteBipartiteGraph(3, 3)).score.q, 0.0, 1e-12);
}

TEST(ExactModularity, TwoDisjointEdges) {
  const SearchResult r = ExactModularity(TwoK2());
  EXPECT_NEAR(r.score.q, 0.5, 1e-15);
  EXPECT_EQ(r.partition, Labels({0, 0, 1, 1}));
  EXPECT_EQ(r.evaluations, 15u);  // Bell(4)
}

TEST(ExactModularity, Errors) {
  EXPECT_THROW(ExactModularity(CycleGraph(13)), CapExceededError);
  EXPECT_THROW(ExactModularity(BuildGraph(3, {})), ValidationError);
}

TEST(ExactModularity, ScoreIsRecomputed) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomMultigraph(2 + rng.UniformInt(7), 1 + rng.UniformInt(15), rng);
    const SearchResult r = ExactModularity(g);
    EXPECT_DOUBLE_EQ(r.score.q, ModularityScore(g, r.partition).q);
  }
}

TEST(ExactModularity, AgreesWithNaiveEnumeratorOnAllConnectedGraphs) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : testing::ConnectedGraphs(n)) {
      const double naive = testing::NaiveOptimum(g);
      ASSERT_NEAR(ExactModularity(g).score.q, naive, 1e-12);
      ASSERT_NEAR(ExactModularity(g, {.connected_parts_only = true}).score.q, naive, 1e-12);
    }
  }
}

TEST(ExactModularity, AgreesWithNaiveEnumeratorOnMultigraphs) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomMultigraph(1 + rng.UniformInt(7), 1 + rng.UniformInt(14), rng);
    ASSERT_NEAR(ExactModularity(g).score.q, testing::NaiveOptimum(g), 1e-12);
    ASSERT_NEAR(ExactModularity(g, {.max_parts = 2}).score.q, testing::NaiveOptimum(g, 2), 1e-12);
  }
}

TEST(ConnectedGraphs, KnownCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(testing::ConnectedGraphs(n).size(), expected[n - 1]) << n;
  }
}

TEST(Rounding, BestBipartitionIsAtLeastHalfTheOptimum) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng.UniformInt(7);
    const Graph g = testing::RandomSimpleGraph(n, 0.35, rng);
    if (g.num_edges() == 0) continue;
    const double q_star = ExactModularity(g).score.q;
    EXPECT_GE(ExactModularity(g, {.max_parts = 2}).score.q, q_star / 2.0 - 1e-12);
    EXPECT_GE(ExactModularity(g, {.max_parts = 3}).score.q, 2.0 * q_star / 3.0 - 1e-12);
  }
}

TEST(SwapBipartition, NoEdgesIntoFixedSetsKeepsTheStart) {
  // n = 12: A1 = {8, 10}, B1 = {9, 11}; no edge touches them.
  const Graph g = BuildGraph(12, {{0, 2}, {1, 3}, {4, 7}, {5, 6}});
  const SearchResult r = SwapBipartition(g);
  EXPECT_EQ(r.partition, Labels({0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(r.method, "swap");
}

TEST(SwapBipartition, HandTracedSingleSwap) {
  // Pair (a_0, b_0) = (0, 1): vertex 0 sees two B1 vertices, so swapping
  // puts those edges inside a part. Pair (2, 3) has one edge each way into
  // A1 and B1 in the kept orientation, so it stays.
  const Graph g = BuildGraph(12, {{0, 9}, {0, 11}, {2, 8}, {3, 9}, {4, 6}});
  const SearchResult r = SwapBipartition(g);
  EXPECT_EQ(r.partition, Labels({1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
  EXPECT_NEAR(r.score.q, ModularityScore(g, r.partition).q, 0.0);
  // Internal edges: 0-9, 0-11, 2-8, 3-9, 4-6 = all five.
  EXPECT_NEAR(r.score.edge_contribution, 1.0, 1e-15);
}

TEST(SwapBipartition, TrailingVerticesStayOnTheirParitySide) {
  // n = 8: k = 1, fixed a_2 = 4 and b_2 = 5, vertices 6 and 7 frozen.
  const Graph g = BuildGraph(8, {{0, 5}, {6, 5}, {7, 4}});
  const SearchResult r = SwapBipartition(g);
  EXPECT_EQ(r.partition.part_of(6), r.partition.part_of(4));
  EXPECT_EQ(r.partition.part_of(7), r.partition.part_of(5));
  EXPECT_EQ(r.partition.part_of(0), r.partition.part_of(5));
}

TEST(SwapBipartition, EdgelessIsRefused) {
  EXPECT_THROW(SwapBipartition(BuildGraph(6, {})), ValidationError);
}

TEST(MergeToK, FewPartsIsIdentity) {
  const Partition a = Labels({0, 0, 1, 1});
  const SearchResult r = MergeToK(TwoK2(), a, 2, 1);
  EXPECT_EQ(r.partition, a);
  EXPECT_THROW(MergeToK(TwoK2(), a, 1, 1), ValidationError);
}

TEST(MergeToK, ExhaustiveLabelMeanIsExact) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + rng.UniformInt(6);
    const Graph g = testing::RandomMultigraph(n, 3 + rng.UniformInt(12), rng);
    const Partition a = testing::RandomPartition(n, 5, rng);
    const std::size_t parts = a.num_parts();
    const std::size_t k = 2 + rng.UniformInt(2);
    std::vector<std::uint32_t> part_label(parts, 0);
    double sum = 0.0, best = -1.0;
    std::size_t count = 0;
    while (true) {
      std::vector<std::uint32_t> labels(n);
      for (Vertex v = 0; v < n; ++v) labels[v] = part_label[a.part_of(v)];
      const double q = ModularityScore(g, Labels(labels)).q;
      sum += q;
      best = std::max(best, q);
      ++count;
      std::size_t i = 0;
      while (i < parts && ++part_label[i] == k) part_label[i++] = 0;
      if (i == parts) break;
    }
    const double target = (1.0 - 1.0 / static_cast<double>(k)) * ModularityScore(g, a).q;
    EXPECT_NEAR(sum / static_cast<double>(count), target, 1e-12);
    EXPECT_GE(best, target - 1e-12);
    if (parts > k) {
      const SearchResult r = MergeToK(g, a, k, 99, 256);
      EXPECT_LE(r.partition.num_parts(), k);
      EXPECT_LE(r.score.q, best + 1e-12);
      EXPECT_GE(r.score.q, target - 0.05);
    }
  }
}

TEST(MergeToK, MeanOfDrawsWithinThreeStandardErrors) {
  Rng rng(5);
  const Graph g = testing::RandomSimpleGraph(30, 0.15, rng);
  const SearchResult local = LocalMoving(g, 1);
  ASSERT_GT(local.partition.num_parts(), 3u);
  const std::size_t k = 3;
  Rng draws(6);
  const int count = 5000;
  double sum = 0.0, squares = 0.0;
  for (int i = 0; i < count; ++i) {
    const double q = ModularityScore(g, MergeByRandomLabels(local.partition, k, draws)).q;
    sum += q;
    squares += q * q;
  }
  const double mean = sum / count;
  const double se = std::sqrt((squares / count - mean * mean) / (count - 1));
  EXPECT_NEAR(mean, (1.0 - 1.0 / k) * local.score.q, 3.0 * se);
}

TEST(GreedyAmalgamate, EtaOneGivesOnePart) {
  const Graph g = TwoK2();
  const Partition b = Labels({0, 0, 1, 1});
  const SearchResult r = GreedyAmalgamate(g, 1.0, b);
  EXPECT_EQ(r.partition.num_parts(), 1u);
  EXPECT_NEAR(r.score.q, 0.0, 1e-15);
  EXPECT_GT(r.score.q, ModularityScore(g, b).q - 2.0);
}

TEST(GreedyAmalgamate, FatInputIsUnchanged) {
  const Partition b = Labels({0, 0, 1, 1});
  EXPECT_EQ(GreedyAmalgamate(TwoK2(), 0.5, b).partition, b);
  EXPECT_EQ(GreedyAmalgamate(TwoK2(), 0.25, b).partition, b);
}

TEST(GreedyAmalgamate, PathFromSingletons) {
  const Graph g = PathGraph(4);
  const Partition b = Partition::Singletons(4);
  const SearchResult r = GreedyAmalgamate(g, 0.25, b);
  ExpectFat(g, b, 0.25, r);
  EXPECT_LT(r.partition.num_parts(), 4u);
}

TEST(GreedyAmalgamate, RandomInstancesKeepAllGuarantees) {
  Rng rng(7);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t n = 2 + rng.UniformInt(30);
    const Graph g = rng.Bernoulli(0.5)
                        ? testing::RandomSimpleGraph(n, 0.05 + 0.5 * rng.Uniform(), rng)
                        : testing::RandomMultigraph(n, 1 + rng.UniformInt(60), rng);
    if (g.num_edges() == 0) continue;
    const Partition b = rng.Bernoulli(0.3)
                            ? LocalMoving(g, rng.Next()).partition
                            : testing::RandomPartition(n, 1 + rng.UniformInt(n), rng);
    const double eta = rng.Bernoulli(0.1) ? 1.0 : 0.01 + 0.6 * rng.Uniform();
    ExpectFat(g, b, eta, GreedyAmalgamate(g, eta, b));
  }
}

TEST(GreedyAmalgamate, ManyTinyPartsStressThePoolingStep) {
  // Star-like volumes force bins that cannot absorb the leftover.
  Rng rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 6 + rng.UniformInt(20);
    std::vector<Edge> edges;
    const std::size_t m = 5 + rng.UniformInt(40);
    for (std::size_t i = 0; i < m; ++i) {
      const auto u = static_cast<Vertex>(rng.UniformInt(n));
      const auto v = static_cast<Vertex>(rng.Bernoulli(0.5) ? rng.UniformInt(3) : rng.UniformInt(n));
      edges.emplace_back(u, v);
    }
    const Graph g(n, std::move(edges));
    const Partition b = Partition::Singletons(n);
    for (double eta : {0.09, 0.17, 0.26, 0.34, 0.4, 0.49, 0.5}) {
      ExpectFat(g, b, eta, GreedyAmalgamate(g, eta, b));
    }
  }
}

TEST(GreedyAmalgamate, Errors) {
  EXPECT_THROW(GreedyAmalgamate(TwoK2(), 0.0, Partition::Singletons(4)), ValidationError);
  EXPECT_THROW(GreedyAmalgamate(TwoK2(), 1.5, Partition::Singletons(4)), ValidationError);
  EXPECT_THROW(GreedyAmalgamate(BuildGraph(2, {}), 0.5, Partition::Singletons(2)),
               ValidationError);
}

TEST(PercolationTransfer, IsTheFatteningOfTheObservedGraph) {
  Rng rng(9);
  const Graph g = testing::RandomSimpleGraph(20, 0.3, rng);
  const Partition a = LocalMoving(g, 3).partition;
  EXPECT_EQ(PercolationTransfer(g, a, 0.1), GreedyAmalgamate(g, 0.1, a).partition);
  EXPECT_TRUE(PercolationTransfer(g, a, 0.1).IsCoarseningOf(a));
}

TEST(ArcPartition, CycleExamples) {
  EXPECT_NEAR(ArcPartition(CycleGraph(16), 4).score.q, 0.5, 1e-15);
  EXPECT_NEAR(ArcPartition(CycleGraph(16), 1).score.q, 0.0, 1e-15);
  EXPECT_NEAR(ArcPartition(CycleGraph(100), 10).score.q, 0.8, 1e-15);
  EXPECT_NEAR(ArcPartition(CycleGraph(10000), 100).score.q, 0.98, 1e-15);
}

TEST(ArcPartition, ArcsAreContiguousAndBalanced) {
  const SearchResult r = ArcPartition(CycleGraph(23), 5);
  std::vector<std::size_t> sizes;
  for (const auto& part : r.partition.parts()) {
    sizes.push_back(part.size());
    EXPECT_EQ(part.back() - part.front() + 1, part.size());
  }
  EXPECT_EQ(sizes.size(), 5u);
  EXPECT_LE(*std::max_element(sizes.begin(), sizes.end()) -
                *std::min_element(sizes.begin(), sizes.end()),
            1u);
}

TEST(ArcPartition, DisjointCyclesGetProportionalArcs) {
  const Graph g = DisjointUnion(CycleGraph(30), CycleGraph(10));
  const SearchResult r = ArcPartition(g, 8);
  EXPECT_EQ(r.partition.num_parts(), 8u);  // 6 + 2
  EXPECT_EQ(CycleDecomposition(g).size(), 2u);
}

TEST(ArcPartition, ExplicitCycleOrder) {
  // C_6 relabelled: the cycle is 0 3 1 4 2 5.
  const Graph g = BuildGraph(6, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}});
  const Vertex order[] = {0, 3, 1, 4, 2, 5};
  const SearchResult r = ArcPartition(g, 2, std::span<const Vertex>(order));
  EXPECT_EQ(r.partition, Labels({0, 0, 1, 0, 1, 1}));
}

TEST(ArcPartition, NotTwoRegularIsRefused) {
  EXPECT_THROW(ArcPartition(PathGraph(5), 2), ValidationError);
  EXPECT_THROW(CycleDecomposition(CompleteGraph(4)), ValidationError);
}

TEST(LocalMoving, Examples) {
  EXPECT_NEAR(LocalMoving(TwoK2(), 1).score.q, 0.5, 1e-15);
  EXPECT_NEAR(LocalMoving(CompleteGraph(4), 1).score.q, 0.0, 1e-15);
  const Partition optimal = Labels({0, 0, 1, 1});
  EXPECT_EQ(LocalMoving(TwoK2(), optimal, 5).partition, optimal);
}

TEST(LocalMoving, DeterministicAndNeverWorseThanStart) {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + rng.UniformInt(40);
    const Graph g = testing::RandomMultigraph(n, 5 + rng.UniformInt(80), rng);
    const Partition start = testing::RandomPartition(n, 4, rng);
    const SearchResult r = LocalMoving(g, start, 17);
    EXPECT_GE(r.score.q, ModularityScore(g, start).q - 1e-12);
    EXPECT_EQ(r.partition, LocalMoving(g, start, 17).partition);
  }
}

TEST(Heuristics, NeverExceedExactOptimum) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.UniformInt(8);
    const Graph g = testing::RandomMultigraph(n, 2 + rng.UniformInt(20), rng);
    const double q_star = ExactModularity(g, {.cap = 10}).score.q;
    EXPECT_LE(LocalMoving(g, trial).score.q, q_star + 1e-12);
    EXPECT_LE(SwapBipartition(g).score.q, q_star + 1e-12);
    EXPECT_LE(MergeToK(g, Partition::Singletons(n), 2, trial).score.q, q_star + 1e-12);
  }
}

TEST(ResolutionLimit, FlaggedComponentsAreNeverSplit) {
  Rng rng(12);
  int checked = 0;
  while (checked < 30) {
    // A small tree-like component next to a denser random graph.
    const std::size_t c = 2 + rng.UniformInt(3);
    const Graph small = PathGraph(c);
    const Graph big = testing::RandomSimpleGraph(4 + rng.UniformInt(4), 0.7, rng);
    const Graph g = DisjointUnion(small, big);
    if (g.has_isolated_vertices()) continue;
    const auto flagged = ResolutionLimitComponents(g);
    if (flagged.empty()) continue;
    const SearchResult r = ExactModularity(g);
    for (const auto& component : flagged) EXPECT_FALSE(SplitsSet(r.partition, component));
    ++checked;
  }
}

TEST(ResolutionLimit, TwoHalvesAboveThresholdAreSplit) {
  // Two triangles joined by an edge: e(C) = 7 > sqrt(2m) whether alone or
  // next to a K_2.
  const Graph c = BuildGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  for (const Graph& g : {c, DisjointUnion(c, CompleteGraph(2))}) {
    const SearchResult r = ExactModularity(g);
    EXPECT_TRUE(SplitsSet(r.partition, {0, 1, 2, 3, 4, 5}));
  }
}

TEST(DenseBipartitionScan, MatchesBruteForceOnNearCompleteGraphs) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.UniformInt(11);
    std::vector<Edge> edges;
    const double miss = rng.Uniform() * 0.4;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (!rng.Bernoulli(miss)) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, std::move(edges));
    if (g.num_edges() == 0) continue;
    const DenseBipartitionScan scan = ExactBestBipartitionDense(g);
    double proper = -2.0;
    testing::ForEachSetPartition(n, 2, [&](const std::vector<std::uint32_t>& labels) {
      if (std::count(labels.begin(), labels.end(), 1u) == 0) return;
      proper = std::max(proper, ModularityScore(g, Labels(labels)).q);
    });
    ASSERT_NEAR(scan.best_score, proper, 1e-12) << "n " << n;
    ASSERT_EQ(scan.positive_found, proper > 1e-12) << "n " << n;
  }
}

TEST(DenseBipartitionScan, CompleteGraphHasNoPositiveBipartition) {
  const DenseBipartitionScan scan = ExactBestBipartitionDense(CompleteGraph(40));
  EXPECT_FALSE(scan.positive_found);
  EXPECT_LT(scan.best_score, 0.0);
}

TEST(DenseBipartitionScan, Errors) {
  EXPECT_THROW(ExactBestBipartitionDense(BuildGraph(3, {{0, 1}, {0, 1}})), ValidationError);
  EXPECT_THROW(ExactBestBipartitionDense(CycleGraph(30)), CapExceededError);
}

}  // namespace
}  // namespace modlab

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

#include <cmath>
#include <vector>

#include "modlab/errors.h"
#include "modlab/generators.h"
#include "modlab/graph.h"
#include "modlab/modularity.h"
#include "modlab/partition.h"
#include "modlab/rng.h"
#include "modlab/search.h"
#include "modlab/weights.h"
#include "oracles.h"

namespace modlab {
namespace {

Partition Labels(std::vector<std::uint32_t> labels) {
  return Partition::FromLabels(std::span<const std::uint32_t>(labels));
}

Graph TwoK2() { return BuildGraph(4, {{0, 1}, {2, 3}}); }

// Average of the naive score over all k^n label vectors.
double ExhaustiveRandomScore(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> labels(n, 0);
  double sum = 0.0;
  std::size_t count = 0;
  while (true) {
    sum += testing::NaiveModularity(g, labels);
    ++count;
    std::size_t i = 0;
    while (i < n && ++labels[i] == k) labels[i++] = 0;
    if (i == n) break;
  }
  return sum / static_cast<double>(count);
}

TEST(ModularityScore, PathExample) {
  const ModularityBreakdown s = ModularityScore(PathGraph(3), Labels({0, 0, 1}));
  EXPECT_NEAR(s.edge_contribution, 0.5, 1e-15);
  EXPECT_NEAR(s.degree_tax, 10.0 / 16.0, 1e-15);
  EXPECT_NEAR(s.q, -0.125, 1e-15);
}

TEST(ModularityScore, SinglePartIsZero) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomMultigraph(2 + rng.UniformInt(8), 1 + rng.UniformInt(20), rng);
    const ModularityBreakdown s = ModularityScore(g, Partition::Whole(g.num_vertices()));
    EXPECT_DOUBLE_EQ(s.edge_contribution, 1.0);
    EXPECT_DOUBLE_EQ(s.degree_tax, 1.0);
    EXPECT_DOUBLE_EQ(s.q, 0.0);
  }
}

TEST(ModularityScore, WheelsRimCentreBisection) {
  for (std::size_t k : {3u, 4u, 7u, 12u}) {
    const Graph g = WheelsGraph(k);
    ASSERT_EQ(g.num_vertices(), 2 * k + 2);
    ASSERT_EQ(g.num_edges(), 4 * k);
    // Each rim goes with the other wheel's centre.
    std::vector<std::uint32_t> labels(2 * k + 2, 0);
    for (std::size_t v = k + 2; v < 2 * k + 2; ++v) labels[v] = 1;
    labels[0] = 1;
    labels[k + 1] = 0;
    const ModularityBreakdown s = ModularityScore(g, Labels(labels));
    EXPECT_NEAR(s.edge_contribution, 0.5, 1e-15);
    EXPECT_NEAR(s.degree_tax, 0.5, 1e-15);
    EXPECT_NEAR(s.q, 0.0, 1e-15);
  }
}

TEST(ModularityScore, EdgelessGraphScoresZero) {
  const Graph g = BuildGraph(3, {});
  EXPECT_EQ(ModularityScore(g, Partition::Singletons(3)).q, 0.0);
}

TEST(ModularityScore, VertexCountMismatch) {
  EXPECT_THROW(ModularityScore(PathGraph(3), Partition::Whole(4)), ValidationError);
}

TEST(ModularityScore, MatchesNaiveOracleAndInvariants) {
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.UniformInt(10);
    const Graph g = testing::RandomMultigraph(n, 1 + rng.UniformInt(25), rng);
    const Partition a = testing::RandomPartition(n, 1 + rng.UniformInt(5), rng);
    const ModularityBreakdown s = ModularityScore(g, a);
    const double k = static_cast<double>(a.num_parts());
    ASSERT_NEAR(s.q, testing::NaiveModularity(g, a.assignment()), 1e-12);
    ASSERT_NEAR(s.q, s.edge_contribution - s.degree_tax, 1e-15);
    EXPECT_GE(s.edge_contribution, 0.0);
    EXPECT_LE(s.edge_contribution, 1.0);
    EXPECT_GE(s.degree_tax, 1.0 / k - 1e-15);
    EXPECT_LE(s.degree_tax, 1.0);
    EXPECT_LE(s.q, 1.0 - 1.0 / k + 1e-15);
    ASSERT_NEAR(PartitionScoreViaRelative(g, a), s.q, 1e-12);
  }
}

TEST(WeightedModularity, RecoversUnweightedScore) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.UniformInt(9);
    const Graph g = testing::RandomSimpleGraph(n, 0.4, rng);
    const Partition a = testing::RandomPartition(n, 1 + rng.UniformInt(4), rng);
    const WeightFunction w = WeightFunction::FromFunction(
        n, [&](Vertex u, Vertex v) {
          for (Vertex x : g.neighbors(u)) {
            if (x == v) return 1.0;
          }
          return 0.0;
        });
    const ModularityBreakdown plain = ModularityScore(g, a);
    const ModularityBreakdown weighted = WeightedModularityScore(w, a);
    ASSERT_NEAR(weighted.q, plain.q, 1e-12);
    ASSERT_NEAR(weighted.edge_contribution, plain.edge_contribution, 1e-12);
  }
}

TEST(WeightedModularity, LoopsAndMultiplicities) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomMultigraph(1 + rng.UniformInt(8), 1 + rng.UniformInt(20), rng);
    const Partition a = testing::RandomPartition(g.num_vertices(), 3, rng);
    ASSERT_NEAR(WeightedModularityScore(WeightFunction::FromGraph(g), a).q,
                ModularityScore(g, a).q, 1e-12);
  }
}

TEST(WeightedModularity, ZeroAndScaling) {
  EXPECT_EQ(WeightedModularityScore(WeightFunction(4), Partition::Singletons(4)).q, 0.0);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.UniformInt(7);
    WeightFunction w(n), w2(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u; v < n; ++v) {
        const double x = rng.Uniform();
        w.set(u, v, x);
        w2.set(u, v, 2.0 * x);
      }
    }
    const Partition a = testing::RandomPartition(n, 3, rng);
    const ModularityBreakdown s1 = WeightedModularityScore(w, a);
    const ModularityBreakdown s2 = WeightedModularityScore(w2, a);
    EXPECT_NEAR(s1.q, s2.q, 1e-12);
    EXPECT_NEAR(s1.edge_contribution, s2.edge_contribution, 1e-12);
    EXPECT_NEAR(s1.degree_tax, s2.degree_tax, 1e-12);
  }
}

TEST(RelativeModularity, Examples) {
  const Vertex all3[] = {0, 1, 2};
  EXPECT_NEAR(RelativeModularity(CompleteGraph(3), all3), 0.0, 1e-15);
  const Vertex first_two[] = {0, 1};
  EXPECT_NEAR(RelativeModularity(PathGraph(3), first_two), -1.0 / 12.0, 1e-15);
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomMultigraph(2 + rng.UniformInt(8), 1 + rng.UniformInt(20), rng);
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    EXPECT_NEAR(RelativeModularity(g, all), 0.0, 1e-15);
  }
}

TEST(RelativeModularity, ZeroVolumeIsAnError) {
  const Graph g = BuildGraph(3, {{0, 1}});
  const Vertex isolated[] = {2};
  EXPECT_THROW(RelativeModularity(g, isolated), ValidationError);
  EXPECT_THROW(RelativeModularity(g, std::span<const Vertex>()), ValidationError);
}

TEST(PartitionScoreViaRelative, Examples) {
  EXPECT_NEAR(PartitionScoreViaRelative(PathGraph(3), Labels({0, 0, 1})), -0.125, 1e-15);
  EXPECT_NEAR(PartitionScoreViaRelative(PathGraph(3), Partition::Whole(3)), 0.0, 1e-15);
  EXPECT_NEAR(PartitionScoreViaRelative(TwoK2(), Labels({0, 0, 1, 1})), 0.5, 1e-15);
  // An isolated vertex alone in a part contributes nothing.
  const Graph g = BuildGraph(3, {{0, 1}});
  EXPECT_NEAR(PartitionScoreViaRelative(g, Labels({0, 0, 1})), ModularityScore(g, Labels({0, 0, 1})).q,
              1e-15);
}

TEST(MaxRelativeModularity, Examples) {
  EXPECT_NEAR(MaxRelativeModularity(CompleteGraph(3)).value, 0.0, 1e-15);
  const RelativeModularityResult two = MaxRelativeModularity(TwoK2());
  EXPECT_NEAR(two.value, 0.5, 1e-15);
  EXPECT_EQ(two.subset.size(), 2u);
  EXPECT_NEAR(MaxRelativeModularity(CompleteGraph(2)).value, 0.0, 1e-15);
}

TEST(MaxRelativeModularity, CapIsExplicit) {
  EXPECT_THROW(MaxRelativeModularity(CycleGraph(21)), CapExceededError);
  EXPECT_THROW(SubsetBipartitionBound(CycleGraph(21)), CapExceededError);
  EXPECT_NO_THROW(MaxRelativeModularity(CycleGraph(21), 21));
  EXPECT_THROW(MaxRelativeModularity(BuildGraph(3, {})), ValidationError);
}

TEST(SubsetBipartitionBound, Examples) {
  EXPECT_GE(SubsetBipartitionBound(CompleteGraph(3)), 0.0);
  EXPECT_GE(SubsetBipartitionBound(TwoK2()), 0.5 - 1e-15);
  EXPECT_NEAR(SubsetBipartitionBound(CompleteGraph(2)), 0.0, 1e-15);
}

TEST(UpperBounds, DominateExactOptimum) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.UniformInt(9);
    Graph g = testing::RandomSimpleGraph(n, 0.15 + 0.5 * rng.Uniform(), rng);
    if (g.num_edges() == 0) continue;
    const double q_star = ExactModularity(g, {.cap = 10}).score.q;
    EXPECT_LE(q_star, MaxRelativeModularity(g).value + 1e-12);
    EXPECT_LE(q_star, SubsetBipartitionBound(g) + 1e-12);
  }
}

TEST(Robustness, SingleEdgeDeletion) {
  Rng rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 4 + rng.UniformInt(6);
    const Graph g = testing::RandomSimpleGraph(n, 0.45, rng);
    if (g.num_edges() < 2) continue;
    const double m = static_cast<double>(g.num_edges());
    const SearchResult best = ExactModularity(g, {.cap = 9});
    const Partition fixed = testing::RandomPartition(n, 3, rng);
    for (std::size_t drop = 0; drop < g.num_edges(); ++drop) {
      std::vector<Edge> edges = g.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
      const Graph h(n, std::move(edges));
      const double q_h = ExactModularity(h, {.cap = 9}).score.q;
      EXPECT_LT(std::abs(best.score.q - q_h), 2.0 / m);
      EXPECT_LT(std::abs(ModularityScore(g, fixed).q - ModularityScore(h, fixed).q), 2.0 / m);
    }
  }
}

TEST(FriendlyBipartition, IsStrictlyPositive) {
  Rng rng(9);
  int friendly = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 4 + rng.UniformInt(7);
    // Two noisy clusters make friendly bipartitions common.
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        const bool same = (u < n / 2) == (v < n / 2);
        if (rng.Bernoulli(same ? 0.8 : 0.15)) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, std::move(edges));
    if (g.num_edges() == 0) continue;
    const Partition a = testing::RandomPartition(n, 2, rng);
    if (a.num_parts() != 2) continue;
    bool all_weak = true, some_strict = false;
    for (Vertex v = 0; v < n; ++v) {
      std::int64_t inside = 0, outside = 0;
      for (Vertex u : g.neighbors(v)) (a.part_of(u) == a.part_of(v) ? inside : outside) += 1;
      all_weak = all_weak && inside >= outside;
      some_strict = some_strict || inside > outside;
    }
    if (!all_weak || !some_strict) continue;
    // A part made only of isolated vertices gives q = 0 exactly.
    const std::vector<std::int64_t> volumes = a.part_volumes(g);
    if (volumes[0] == 0 || volumes[1] == 0) {
      EXPECT_EQ(ModularityScore(g, a).q, 0.0);
      continue;
    }
    ++friendly;
    EXPECT_GT(ModularityScore(g, a).q, 0.0);
  }
  EXPECT_GT(friendly, 50);
}

TEST(ExpectedRandomPartitionScore, Examples) {
  EXPECT_NEAR(ExpectedRandomPartitionScore(CompleteGraph(2), 2), -0.25, 1e-15);
  EXPECT_NEAR(ExhaustiveRandomScore(CompleteGraph(2), 2), -0.25, 1e-15);
  EXPECT_NEAR(ExpectedRandomPartitionScore(PathGraph(3), 2), -0.1875, 1e-15);
  EXPECT_NEAR(ExhaustiveRandomScore(PathGraph(3), 2), -0.1875, 1e-15);
  // Large-k limit.
  const Graph p3 = PathGraph(3);
  EXPECT_NEAR(ExpectedRandomPartitionScore(p3, 1000000), -6.0 / 16.0, 1e-6);
  EXPECT_THROW(ExpectedRandomPartitionScore(p3, 1), ValidationError);
}

TEST(ExpectedRandomPartitionScore, MatchesExhaustiveLabelsWithLoops) {
  Rng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.UniformInt(6);
    const Graph g = testing::RandomMultigraph(n, 1 + rng.UniformInt(10), rng);
    const std::size_t k = 2 + rng.UniformInt(2);
    EXPECT_NEAR(ExpectedRandomPartitionScore(g, k), ExhaustiveRandomScore(g, k), 1e-12);
    if (!g.has_loops()) {
      EXPECT_LT(ExpectedRandomPartitionScore(g, k), 0.0);
    }
  }
}

TEST(ExpectedRandomPartitionScore, MonteCarloWithinThreeStandardErrors) {
  Rng rng(11);
  const Graph g = testing::RandomSimpleGraph(40, 0.2, rng);
  const std::size_t k = 4;
  const int draws = 20000;
  double sum = 0.0, squares = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double q = ModularityScore(g, testing::RandomPartition(40, k, rng)).q;
    sum += q;
    squares += q * q;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((squares / draws - mean * mean) / (draws - 1));
  EXPECT_NEAR(mean, ExpectedRandomPartitionScore(g, k), 3.0 * se);
}

TEST(ResolutionLimitComponents, Examples) {
  const Graph two_triangles = DisjointUnion(CompleteGraph(3), CompleteGraph(3));
  EXPECT_EQ(ResolutionLimitComponents(two_triangles).size(), 2u);
  EXPECT_EQ(ResolutionLimitComponents(CompleteGraph(2)).size(), 1u);  // m = 1 < 2
  EXPECT_TRUE(ResolutionLimitComponents(PathGraph(3)).empty());      // m = 2
  const Graph k2_k10 = DisjointUnion(CompleteGraph(2), CompleteGraph(10));
  const auto flagged = ResolutionLimitComponents(k2_k10);
  ASSERT_EQ(flagged.size(), 1u);
  EXPECT_EQ(flagged[0], (std::vector<Vertex>{0, 1}));
}

}  // namespace
}  // namespace modlab

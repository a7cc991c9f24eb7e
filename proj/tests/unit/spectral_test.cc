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
#include "modlab/graph.h"
#include "modlab/rng.h"
#include "modlab/search.h"
#include "modlab/spectral.h"
#include "oracles.h"

namespace modlab {
namespace {

double Entry(const DenseMatrix& m, std::size_t i, std::size_t j) { return m.values[i * m.n + j]; }

TEST(NormalizedLaplacian, K2) {
  const DenseMatrix l = NormalizedLaplacian(CompleteGraph(2));
  ASSERT_EQ(l.n, 2u);
  EXPECT_DOUBLE_EQ(Entry(l, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(Entry(l, 0, 1), -1.0);
  EXPECT_DOUBLE_EQ(Entry(l, 1, 0), -1.0);
  EXPECT_DOUBLE_EQ(Entry(l, 1, 1), 1.0);
}

TEST(NormalizedLaplacian, C4) {
  const DenseMatrix l = NormalizedLaplacian(CycleGraph(4));
  EXPECT_DOUBLE_EQ(Entry(l, 0, 1), -0.5);
  EXPECT_DOUBLE_EQ(Entry(l, 0, 3), -0.5);
  EXPECT_DOUBLE_EQ(Entry(l, 0, 2), 0.0);
  EXPECT_DOUBLE_EQ(Entry(l, 2, 2), 1.0);
}

TEST(NormalizedLaplacian, MultiplicityAndLoops) {
  // Double edge 0-1 and a loop at 1: d_0 = 2, d_1 = 4.
  const DenseMatrix l = NormalizedLaplacian(BuildGraph(2, {{0, 1}, {0, 1}, {1, 1}}));
  EXPECT_DOUBLE_EQ(Entry(l, 0, 1), -2.0 / std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(Entry(l, 1, 1), 1.0 - 2.0 / 4.0);
}

TEST(NormalizedLaplacian, IsolatedVertexIsNamed) {
  try {
    NormalizedLaplacian(BuildGraph(3, {{0, 2}}));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos) << e.what();
  }
}

TEST(SpectralGap, K4) {
  const Spectrum s = SpectralGap(CompleteGraph(4));
  ASSERT_EQ(s.eigenvalues.size(), 4u);
  EXPECT_NEAR(s.eigenvalues[0], 0.0, 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(s.eigenvalues[i], 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(s.gap, 1.0 / 3.0, 1e-12);
}

TEST(SpectralGap, K2AndDisconnected) {
  const Spectrum k2 = SpectralGap(CompleteGraph(2));
  EXPECT_NEAR(k2.eigenvalues[1], 2.0, 1e-12);
  EXPECT_NEAR(k2.gap, 1.0, 1e-12);
  EXPECT_NEAR(SpectralGap(DisjointUnion(CompleteGraph(3), CompleteGraph(4))).gap, 1.0, 1e-12);
}

TEST(SpectralGap, CapIsExplicit) {
  EXPECT_THROW(SpectralGap(CycleGraph(50), 40), CapExceededError);
}

TEST(SpectralGap, SpectrumRangeTraceAndExactBound) {
  Rng rng(1);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 120; ++trial) {
    const std::size_t n = 2 + rng.UniformInt(9);
    const Graph g = rng.Bernoulli(0.5) ? testing::RandomSimpleGraph(n, 0.5, rng)
                                       : testing::RandomMultigraph(n, n + rng.UniformInt(15), rng);
    if (g.has_isolated_vertices()) continue;
    ++checked;
    const Spectrum s = SpectralGap(g);
    double trace = 0.0;
    for (double x : s.eigenvalues) {
      EXPECT_GE(x, -1e-9);
      EXPECT_LE(x, 2.0 + 1e-9);
      trace += x;
    }
    // Loops put 2*loops(v) on the diagonal of A.
    double expected_trace = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      expected_trace += 1.0 - 2.0 * static_cast<double>(g.loops(v)) / static_cast<double>(g.degree(v));
    }
    EXPECT_NEAR(trace, expected_trace, 1e-9);
    EXPECT_NEAR(s.eigenvalues[0], 0.0, 1e-9);
    const double q_star = ExactModularity(g, {.cap = 10}).score.q;
    EXPECT_LE(q_star, s.gap + 1e-9);
    const double bound = SpectralUpperBound(g, g);
    EXPECT_LE(bound, 1.0 + 1e-12);
    EXPECT_LE(q_star, bound + 1e-9);
  }
  EXPECT_GE(checked, 100);
}

TEST(SpectralUpperBound, Examples) {
  EXPECT_NEAR(SpectralUpperBound(CompleteGraph(4), CompleteGraph(4)), 1.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(SubgraphBound(1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(SubgraphBound(0.5, 0.5), 0.75);
}

TEST(SpectralUpperBound, SubgraphWithIsolatedVerticesUsesItsSupport) {
  // H = K_4 on the first four vertices of K_6: alpha = 6/15.
  const Graph g = CompleteGraph(6);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < 4; ++v) {
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  const Graph h(6, std::move(edges));
  EXPECT_TRUE(IsEdgeSubset(h, g));
  EXPECT_NEAR(SpectralUpperBound(g, h), SubgraphBound(6.0 / 15.0, 1.0 / 3.0), 1e-12);
}

TEST(SpectralUpperBound, RejectsNonSubgraph) {
  EXPECT_THROW(SpectralUpperBound(PathGraph(3), CompleteGraph(3)), ValidationError);
  EXPECT_THROW(SpectralUpperBound(PathGraph(3), BuildGraph(3, {})), ValidationError);
  EXPECT_FALSE(IsEdgeSubset(BuildGraph(2, {{0, 1}, {0, 1}}), CompleteGraph(2)));
}

TEST(WithoutIsolatedVertices, Relabels) {
  const Graph g = WithoutIsolatedVertices(BuildGraph(5, {{1, 3}, {3, 4}}));
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.SortedEdges(), PathGraph(3).SortedEdges());
}

}  // namespace
}  // namespace modlab

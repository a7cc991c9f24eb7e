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

#ifndef MODLAB_MODULARITY_H_
#define MODLAB_MODULARITY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modlab/graph.h"
#include "modlab/partition.h"
#include "modlab/weights.h"

namespace modlab {

inline constexpr std::size_t kDefaultSubsetCap = 20;

// q = edge_contribution - degree_tax.
struct ModularityBreakdown {
  double q = 0.0;
  double edge_contribution = 0.0;
  double degree_tax = 0.0;
};

// Score from per-part integer counts: internal edges e(A) and volumes vol(A)
// of every part, and the edge count m of the graph. m == 0 gives all zeros.
ModularityBreakdown ScoreFromCounts(std::span<const std::int64_t> internal,
                                    std::span<const std::int64_t> volumes, std::int64_t m);

// Throws ValidationError if the partition and graph disagree on n.
ModularityBreakdown ModularityScore(const Graph& g, const Partition& a);

// Per-part internal edge counts, indexed by part id.
std::vector<std::int64_t> PartInternalEdges(const Graph& g, const Partition& a);

// Weighted score; identically zero weights score 0.
ModularityBreakdown WeightedModularityScore(const WeightFunction& w, const Partition& a);

// 2e(A)/vol(A) - vol(A)/2m. Throws ValidationError if vol(A) == 0.
double RelativeModularity(const Graph& g, std::span<const Vertex> subset);

// Volume-weighted average of the relative modularities of the parts. Parts
// of zero volume contribute nothing. Equals ModularityScore(g, a).q.
double PartitionScoreViaRelative(const Graph& g, const Partition& a);

struct RelativeModularityResult {
  std::vector<Vertex> subset;
  double value = 0.0;
};

// Maximum of the relative modularity over all subsets of positive volume,
// by exhaustive enumeration. Throws CapExceededError if n > cap and
// ValidationError if m == 0.
RelativeModularityResult MaxRelativeModularity(const Graph& g,
                                               std::size_t cap = kDefaultSubsetCap);

// 4 * max over S of (e(S)/m - vol(S)^2/4m^2), exhaustive; the empty set is
// included so the value is never negative. Same errors as above.
double SubsetBipartitionBound(const Graph& g, std::size_t cap = kDefaultSubsetCap);

// Exact expectation of q over partitions given by i.i.d. uniform labels in
// {0..k-1}: (1 - 1/k)(L/m - sum_v d_v^2 / 4m^2), L the number of loops. For a
// loopless graph this is strictly negative. Requires k >= 2 and m >= 1.
double ExpectedRandomPartitionScore(const Graph& g, std::size_t k);

// Connected components C with at least one edge and e(C) < sqrt(2m). No
// optimal partition splits such a component. Requires m >= 1.
std::vector<std::vector<Vertex>> ResolutionLimitComponents(const Graph& g);

}  // namespace modlab

#endif  // MODLAB_MODULARITY_H_

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

#ifndef MODLAB_SEARCH_H_
#define MODLAB_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modlab/graph.h"
#include "modlab/modularity.h"
#include "modlab/partition.h"
#include "modlab/rng.h"

namespace modlab {

inline constexpr std::size_t kDefaultPartitionCap = 12;

// `score` is always recomputed from `partition`.
struct SearchResult {
  Partition partition;
  ModularityBreakdown score;
  std::string method;
  std::uint64_t evaluations = 0;
};

struct ExactOptions {
  std::size_t cap = kDefaultPartitionCap;
  // Only visit partitions whose parts induce connected subgraphs. Some
  // optimal partition always has this form, so q* is unchanged.
  bool connected_parts_only = false;
  // If nonzero, only partitions with at most this many parts.
  std::size_t max_parts = 0;
};

// Maximum modularity over all set partitions of V, by exhaustive
// enumeration. Ties keep the first partition in restricted-growth order.
// Throws CapExceededError if n > cap, ValidationError if m == 0.
SearchResult ExactModularity(const Graph& g, const ExactOptions& options = {});

// Balanced bipartition from the odd/even start with pair swaps decided
// against the fixed last sixth of each side. With k = floor(n/6), vertices
// at 0-based even positions form A, odd positions form B, and the last k of
// each are held fixed; pairs (a_i, b_i), i < 2k, swap iff that strictly
// raises the number of their edges into A1 u B1 that fall inside a part.
// Vertices beyond 6k keep their parity side. Throws ValidationError if
// m == 0.
SearchResult SwapBipartition(const Graph& g);

// One draw: every part of `a` gets an independent uniform label in
// {0..k-1} and parts with equal labels merge.
Partition MergeByRandomLabels(const Partition& a, std::size_t k, Rng& rng);

// Best of `repeats` draws of MergeByRandomLabels. Returns `a` unchanged when
// it already has at most k parts. Requires k >= 2.
SearchResult MergeToK(const Graph& g, const Partition& a, std::size_t k, std::uint64_t seed,
                      std::size_t repeats = 64);

// Coarsens `b` to an eta-fat partition (every part has volume at least
// eta * 2m) whose parts are unions of parts of `b`, losing less than 2 eta
// in score. Light parts are packed into bins that close once they reach the
// threshold; the leftover joins the cheapest part that keeps the bound, and
// otherwise is combined with the lightest bin and split in two by a
// number-partitioning step. Requires m >= 1 and 0 < eta <= 1.
SearchResult GreedyAmalgamate(const Graph& g, double eta, const Partition& b);

// The coarsening of `a` computed on an observed graph, to be scored on the
// underlying graph.
Partition PercolationTransfer(const Graph& observed, const Partition& a, double eta);

// Cuts cycles into contiguous arcs whose sizes differ by at most one.
// Without `cycle_order` the graph must be 2-regular, and each of its cycles
// receives max(1, min(L, round(k * L / n))) arcs, L the cycle length. With
// `cycle_order` (a permutation of V, read cyclically) that sequence is cut
// into k arcs. Requires k >= 1.
SearchResult ArcPartition(const Graph& g, std::size_t k,
                          std::optional<std::span<const Vertex>> cycle_order = std::nullopt);

// Vertices of each cycle of a 2-regular graph, in walk order, starting from
// the smallest vertex. Throws ValidationError if g is not 2-regular.
std::vector<std::vector<Vertex>> CycleDecomposition(const Graph& g);

// Single-vertex moves from singletons, each to the part of best strictly
// positive gain (ties to the lowest part id, an empty part allowed), in a
// seeded random order per sweep, until a sweep makes no move or max_sweeps.
SearchResult LocalMoving(const Graph& g, std::uint64_t seed, std::size_t max_sweeps = 100);
// As above but starting from `start`.
SearchResult LocalMoving(const Graph& g, const Partition& start, std::uint64_t seed,
                         std::size_t max_sweeps = 100);

// Exhaustive scan of all bipartitions of a simple graph that is close to
// complete. Bipartitions are grouped by how they cut the complement graph,
// so the cost depends on the missing edges rather than on 2^n.
struct DenseBipartitionScan {
  // Maximum score over bipartitions {S, V\S} with S and V\S non-empty.
  double best_score = 0.0;
  bool positive_found = false;
  // |S|, missing-edge degree sum over S, and missing edges across the cut
  // for one maximiser.
  std::int64_t size = 0;
  std::int64_t missing_degree = 0;
  std::int64_t missing_cut = 0;
  std::uint64_t states = 0;
};

// Throws ValidationError unless g is simple with m >= 1, and
// CapExceededError if a complement component has more than
// `max_component` vertices or the state table would exceed `max_states`.
DenseBipartitionScan ExactBestBipartitionDense(const Graph& g, std::size_t max_component = 20,
                                               std::uint64_t max_states = 4'000'000);

}  // namespace modlab

#endif  // MODLAB_SEARCH_H_

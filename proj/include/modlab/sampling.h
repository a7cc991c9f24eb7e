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

#ifndef MODLAB_SAMPLING_H_
#define MODLAB_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modlab/graph.h"
#include "modlab/weights.h"

namespace modlab {

struct PercolationRun {
  double p = 0.0;
  std::uint64_t seed = 0;
  // retained[i] says whether edge i of the underlying graph was kept.
  std::vector<char> retained;
  Graph observed;
};

// Keeps each edge independently with probability p. Same vertex set.
PercolationRun PercolateRun(const Graph& g, double p, std::uint64_t seed);
Graph Percolate(const Graph& g, double p, std::uint64_t seed);

// Simple graph with each pair u < v present independently with probability
// w_uv. The diagonal is ignored. Throws ValidationError if an off-diagonal
// entry exceeds 1.
Graph PercolateWeighted(const WeightFunction& w, std::uint64_t seed);

struct VertexSampleResult {
  Graph graph;
  // mapping[i] is the original vertex relabelled to i; increasing.
  std::vector<Vertex> mapping;
};

// Subgraph induced on a uniform random k-subset. Requires 1 <= k <= n.
VertexSampleResult VertexSample(const Graph& g, std::size_t k, std::uint64_t seed);

inline constexpr std::size_t kDefaultCutDistanceCap = 12;

// max over S, T of |e_G(S,T) - e_H(S,T)| / n^2, where e(S,T) counts ordered
// pairs (s, t) in S x T joined by an edge (with multiplicity; a loop at v
// counts once for (v, v)). Exact by enumerating S and choosing T optimally.
double CutDistance(const Graph& g, const Graph& h, std::size_t cap = kDefaultCutDistanceCap);

// Each vertex replaced by b copies; copies of u and v are all joined iff uv
// is an edge. Requires b >= 1 and a simple graph.
Graph BlowUp(const Graph& g, std::size_t b);

struct EstimabilitySummary {
  std::size_t k = 0;
  std::size_t trials = 0;
  // q* of each sampled induced subgraph (0 when it has no edges).
  std::vector<double> samples;
  double mean = 0.0;
  double stddev = 0.0;
  // Present when g itself is small enough for the exact optimiser.
  std::optional<double> full_value;
  // Mean of |q*(G[X]) - q*(G)| when full_value is present.
  std::optional<double> mean_abs_deviation;
};

// Monte-Carlo distribution of q*(G[X]) for uniform k-subsets X. Trial i uses
// child stream i of `seed`. Throws CapExceededError if k > 10.
EstimabilitySummary EstimabilityProbe(const Graph& g, std::size_t k, std::size_t trials,
                                      std::uint64_t seed);

}  // namespace modlab

#endif  // MODLAB_SAMPLING_H_

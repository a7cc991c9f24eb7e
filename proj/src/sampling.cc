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

#include "modlab/sampling.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "modlab/errors.h"
#include "modlab/rng.h"
#include "modlab/search.h"

namespace modlab {
namespace {

constexpr std::size_t kEstimabilityCap = 10;

double ExactOrZero(const Graph& g) {
  if (g.num_edges() == 0) return 0.0;
  return ExactModularity(g, {.cap = kDefaultPartitionCap}).score.q;
}

}  // namespace

PercolationRun PercolateRun(const Graph& g, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  Rng rng(seed);
  PercolationRun run;
  run.p = p;
  run.seed = seed;
  run.retained.assign(g.num_edges(), 0);
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (rng.Bernoulli(p)) {
      run.retained[i] = 1;
      kept.push_back(g.edges()[i]);
    }
  }
  run.observed = Graph(g.num_vertices(), std::move(kept));
  return run;
}

Graph Percolate(const Graph& g, double p, std::uint64_t seed) {
  return PercolateRun(g, p, seed).observed;
}

Graph PercolateWeighted(const WeightFunction& w, std::uint64_t seed) {
  const std::size_t n = w.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (w.weight(u, v) > 1.0) {
        throw ValidationError("weight (" + std::to_string(u) + "," + std::to_string(v) +
                              ") exceeds 1");
      }
    }
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (rng.Bernoulli(w.weight(u, v))) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

VertexSampleResult VertexSample(const Graph& g, std::size_t k, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (k < 1 || k > n) {
    throw ValidationError("sample size must lie in 1.." + std::to_string(n));
  }
  Rng rng(seed);
  // Partial Fisher-Yates.
  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v) pool[v] = v;
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.UniformInt(n - i)]);
  }
  VertexSampleResult result;
  result.mapping.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(result.mapping.begin(), result.mapping.end());
  result.graph = g.Induced(result.mapping);
  return result;
}

double CutDistance(const Graph& g, const Graph& h, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  if (h.num_vertices() != n) throw ValidationError("cut distance needs equal vertex sets");
  if (n > cap) {
    throw CapExceededError("cut distance over " + std::to_string(n) +
                           " vertices exceeds the cap of " + std::to_string(cap));
  }
  if (n == 0) return 0.0;
  // Difference of ordered-pair adjacency counts.
  std::vector<std::int64_t> diff(n * n, 0);
  auto add = [&](const Graph& graph, std::int64_t sign) {
    for (const Edge& e : graph.edges()) {
      diff[e.u * n + e.v] += sign;
      if (!e.is_loop()) diff[e.v * n + e.u] += sign;
    }
  };
  add(g, 1);
  add(h, -1);
  std::int64_t best = 0;
  std::vector<std::int64_t> column(n);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    std::fill(column.begin(), column.end(), 0);
    for (std::uint64_t bits = s; bits != 0; bits &= bits - 1) {
      const auto row = static_cast<std::size_t>(std::countr_zero(bits));
      for (std::size_t t = 0; t < n; ++t) column[t] += diff[row * n + t];
    }
    std::int64_t positive = 0, negative = 0;
    for (std::int64_t c : column) (c > 0 ? positive : negative) += c;
    best = std::max({best, positive, -negative});
  }
  return static_cast<double>(best) / static_cast<double>(n * n);
}

Graph BlowUp(const Graph& g, std::size_t b) {
  if (b < 1) throw ValidationError("blow-up needs b >= 1");
  if (g.has_loops()) throw ValidationError("blow-up needs a loopless graph");
  if (g.has_parallel_edges()) throw ValidationError("blow-up needs a simple graph");
  const auto bb = static_cast<Vertex>(b);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() * b * b);
  for (const Edge& e : g.edges()) {
    for (Vertex i = 0; i < bb; ++i) {
      for (Vertex j = 0; j < bb; ++j) edges.emplace_back(e.u * bb + i, e.v * bb + j);
    }
  }
  return Graph(g.num_vertices() * b, std::move(edges));
}

EstimabilitySummary EstimabilityProbe(const Graph& g, std::size_t k, std::size_t trials,
                                      std::uint64_t seed) {
  if (k > kEstimabilityCap) {
    throw CapExceededError("estimability probe needs k <= " + std::to_string(kEstimabilityCap));
  }
  if (trials == 0) throw ValidationError("estimability probe needs at least one trial");
  EstimabilitySummary summary;
  summary.k = k;
  summary.trials = trials;
  const Rng root(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    VertexSampleResult sample = VertexSample(g, k, root.Split(i).seed());
    summary.samples.push_back(ExactOrZero(sample.graph));
  }
  double sum = 0.0;
  for (double x : summary.samples) sum += x;
  summary.mean = sum / static_cast<double>(trials);
  double squares = 0.0;
  for (double x : summary.samples) squares += (x - summary.mean) * (x - summary.mean);
  summary.stddev = trials > 1 ? std::sqrt(squares / static_cast<double>(trials - 1)) : 0.0;
  if (g.num_vertices() <= kDefaultPartitionCap) {
    const double full = ExactOrZero(g);
    summary.full_value = full;
    double deviation = 0.0;
    for (double x : summary.samples) deviation += std::abs(x - full);
    summary.mean_abs_deviation = deviation / static_cast<double>(trials);
  }
  return summary;
}

}  // namespace modlab

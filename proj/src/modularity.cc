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

#include "modlab/modularity.h"

#include <bit>
#include <string>

#include "modlab/errors.h"

namespace modlab {
namespace {

void RequireEdges(const Graph& g, const char* what) {
  if (g.num_edges() == 0) throw ValidationError(std::string(what) + " needs at least one edge");
}

void RequireMatchingSize(std::size_t graph_n, const Partition& a) {
  if (graph_n != a.num_vertices()) {
    throw ValidationError("partition covers " + std::to_string(a.num_vertices()) +
                          " vertices but the graph has " + std::to_string(graph_n));
  }
}

// Visits every subset of V in Gray-code order, tracking e(S) and vol(S).
// The callback receives (mask, e, vol); mask 0 is visited first.
template <typename Visit>
void ForEachSubset(const Graph& g, std::size_t cap, Visit visit) {
  const std::size_t n = g.num_vertices();
  if (n > cap) {
    throw CapExceededError("subset enumeration over " + std::to_string(n) +
                           " vertices exceeds the cap of " + std::to_string(cap));
  }
  if (n >= 63) throw CapExceededError("subset enumeration needs n < 63");
  std::uint64_t mask = 0;
  std::int64_t e = 0;
  std::int64_t vol = 0;
  visit(mask, e, vol);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i));
    const bool adding = !(mask >> v & 1);
    // Edges between v and the rest of S, plus the loops at v.
    std::int64_t delta = g.loops(v);
    for (Vertex u : g.neighbors(v)) {
      if (u != v && (mask >> u & 1)) ++delta;
    }
    if (adding) {
      mask |= std::uint64_t{1} << v;
      e += delta;
      vol += g.degree(v);
    } else {
      mask &= ~(std::uint64_t{1} << v);
      e -= delta;
      vol -= g.degree(v);
    }
    visit(mask, e, vol);
  }
}

std::vector<Vertex> MaskToVertices(std::uint64_t mask) {
  std::vector<Vertex> vertices;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) vertices.push_back(v);
  }
  return vertices;
}

}  // namespace

ModularityBreakdown ScoreFromCounts(std::span<const std::int64_t> internal,
                                    std::span<const std::int64_t> volumes, std::int64_t m) {
  ModularityBreakdown result;
  if (m == 0) return result;
  std::int64_t edges_inside = 0;
  for (std::int64_t e : internal) edges_inside += e;
  // Squares of volumes can reach (2m)^2; long double keeps them exact well
  // beyond any graph that fits in memory.
  long double squares = 0;
  for (std::int64_t v : volumes) squares += static_cast<long double>(v) * v;
  const long double two_m = 2.0L * m;
  result.edge_contribution = static_cast<double>(static_cast<long double>(edges_inside) / m);
  result.degree_tax = static_cast<double>(squares / (two_m * two_m));
  result.q = static_cast<double>(static_cast<long double>(edges_inside) / m -
                                 squares / (two_m * two_m));
  return result;
}

std::vector<std::int64_t> PartInternalEdges(const Graph& g, const Partition& a) {
  RequireMatchingSize(g.num_vertices(), a);
  std::vector<std::int64_t> internal(a.num_parts(), 0);
  for (const Edge& e : g.edges()) {
    if (a.part_of(e.u) == a.part_of(e.v)) ++internal[a.part_of(e.u)];
  }
  return internal;
}

ModularityBreakdown ModularityScore(const Graph& g, const Partition& a) {
  std::vector<std::int64_t> internal = PartInternalEdges(g, a);
  std::vector<std::int64_t> volumes = a.part_volumes(g);
  return ScoreFromCounts(internal, volumes, static_cast<std::int64_t>(g.num_edges()));
}

ModularityBreakdown WeightedModularityScore(const WeightFunction& w, const Partition& a) {
  RequireMatchingSize(w.num_vertices(), a);
  const std::size_t n = w.num_vertices();
  std::vector<double> internal(a.num_parts(), 0.0);
  std::vector<double> volumes(a.num_parts(), 0.0);
  double total = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const double x = w.weight(u, v);
      total += x;
      volumes[a.part_of(u)] += x;
      if (a.part_of(u) == a.part_of(v)) internal[a.part_of(u)] += x;
    }
  }
  ModularityBreakdown result;
  if (total == 0.0) return result;
  // total = 2 m_w and each internal entry is 2 e_w(A).
  double edges_inside = 0.0;
  double squares = 0.0;
  for (std::size_t i = 0; i < a.num_parts(); ++i) {
    edges_inside += internal[i];
    squares += volumes[i] * volumes[i];
  }
  result.edge_contribution = edges_inside / total;
  result.degree_tax = squares / (total * total);
  result.q = result.edge_contribution - result.degree_tax;
  return result;
}

double RelativeModularity(const Graph& g, std::span<const Vertex> subset) {
  RequireEdges(g, "relative modularity");
  const std::int64_t vol = g.volume(subset);
  if (vol == 0) throw ValidationError("relative modularity is undefined for a zero-volume set");
  const std::int64_t e = g.internal_edges(subset);
  const double two_m = static_cast<double>(g.total_volume());
  return 2.0 * static_cast<double>(e) / static_cast<double>(vol) -
         static_cast<double>(vol) / two_m;
}

double PartitionScoreViaRelative(const Graph& g, const Partition& a) {
  RequireEdges(g, "partition score");
  std::vector<std::int64_t> internal = PartInternalEdges(g, a);
  std::vector<std::int64_t> volumes = a.part_volumes(g);
  const double two_m = static_cast<double>(g.total_volume());
  double score = 0.0;
  for (std::size_t i = 0; i < a.num_parts(); ++i) {
    if (volumes[i] == 0) continue;
    const double vol = static_cast<double>(volumes[i]);
    const double relative = 2.0 * static_cast<double>(internal[i]) / vol - vol / two_m;
    score += vol / two_m * relative;
  }
  return score;
}

RelativeModularityResult MaxRelativeModularity(const Graph& g, std::size_t cap) {
  RequireEdges(g, "relative modularity");
  const double two_m = static_cast<double>(g.total_volume());
  bool found = false;
  double best = 0.0;
  std::uint64_t best_mask = 0;
  ForEachSubset(g, cap, [&](std::uint64_t mask, std::int64_t e, std::int64_t vol) {
    if (vol == 0) return;
    const double value = 2.0 * static_cast<double>(e) / static_cast<double>(vol) -
                         static_cast<double>(vol) / two_m;
    if (!found || value > best || (value == best && mask < best_mask)) {
      found = true;
      best = value;
      best_mask = mask;
    }
  });
  return {MaskToVertices(best_mask), best};
}

double SubsetBipartitionBound(const Graph& g, std::size_t cap) {
  RequireEdges(g, "subset bound");
  const std::int64_t m = static_cast<std::int64_t>(g.num_edges());
  const std::int64_t two_m = 2 * m;
  // Compare e/m - vol^2/4m^2 exactly as (4m e - vol^2) / 4m^2.
  std::int64_t best = 0;
  ForEachSubset(g, cap, [&](std::uint64_t, std::int64_t e, std::int64_t vol) {
    const std::int64_t numerator = 2 * two_m * e - vol * vol;
    if (numerator > best) best = numerator;
  });
  return 4.0 * static_cast<double>(best) / (static_cast<double>(two_m) * two_m);
}

double ExpectedRandomPartitionScore(const Graph& g, std::size_t k) {
  if (k < 2) throw ValidationError("random partition needs k >= 2");
  RequireEdges(g, "random partition score");
  const double m = static_cast<double>(g.num_edges());
  double squares = 0.0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const double d = static_cast<double>(g.degree(static_cast<Vertex>(v)));
    squares += d * d;
  }
  const double inv_k = 1.0 / static_cast<double>(k);
  return (1.0 - inv_k) * (static_cast<double>(g.num_loops()) / m - squares / (4.0 * m * m));
}

std::vector<std::vector<Vertex>> ResolutionLimitComponents(const Graph& g) {
  RequireEdges(g, "resolution-limit check");
  std::vector<std::vector<Vertex>> flagged;
  for (std::vector<Vertex>& component : g.Components()) {
    const std::int64_t e = g.internal_edges(component);
    if (e >= 1 && e * e < g.total_volume()) flagged.push_back(std::move(component));
  }
  return flagged;
}

}  // namespace modlab

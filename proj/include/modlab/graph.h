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

#ifndef MODLAB_GRAPH_H_
#define MODLAB_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace modlab {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored with u <= v. A loop has u == v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// kept. A loop adds 2 to the degree of its vertex and 1 to the edge count,
// so the degrees always sum to 2m. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws ValidationError naming the first edge with an endpoint >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::int64_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::int64_t loops(Vertex v) const { return loops_[v]; }
  std::int64_t num_loops() const { return num_loops_; }
  std::int64_t total_volume() const { return 2 * static_cast<std::int64_t>(edges_.size()); }

  // Neighbour multiset of v. Each parallel edge appears once per copy and a
  // loop at v contributes v twice, so the span length equals degree(v).
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  std::vector<std::int64_t> degrees() const;

  // Sum of degrees over `vertices`. Duplicates are not detected.
  std::int64_t volume(std::span<const Vertex> vertices) const;
  // Edges with both endpoints in `vertices`; a loop counts once.
  std::int64_t internal_edges(std::span<const Vertex> vertices) const;

  bool has_loops() const { return num_loops_ > 0; }
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }
  bool has_isolated_vertices() const;

  // Loops removed and parallel edges merged.
  Graph Simplified() const;
  // Subgraph induced on `vertices`, relabelled in the given order.
  Graph Induced(std::span<const Vertex> vertices) const;
  // Edge multiset sorted, for order-insensitive comparison.
  std::vector<Edge> SortedEdges() const;

  // Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> Components() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<Vertex> adjacency_;
  std::vector<std::int64_t> loops_;
  std::int64_t num_loops_ = 0;
};

// Public construction entry point: additionally requires n >= 1.
Graph BuildGraph(std::size_t n, std::vector<Edge> edges);

// Common deterministic graphs.
Graph CompleteGraph(std::size_t n);
Graph CompleteBipartiteGraph(std::size_t a, std::size_t b);
Graph CycleGraph(std::size_t n);
Graph PathGraph(std::size_t n);
// Disjoint union; vertices of `b` are shifted by a.num_vertices().
Graph DisjointUnion(const Graph& a, const Graph& b);

}  // namespace modlab

#endif  // MODLAB_GRAPH_H_

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

#include "modlab/graph.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "modlab/errors.h"

namespace modlab {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), loops_(n, 0) {
  std::vector<std::int64_t> degree(n, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n || e.v >= n) {
      throw ValidationError("edge " + std::to_string(i) + " (" +
                            std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." +
                            std::to_string(n == 0 ? 0 : n - 1));
    }
    degree[e.u] += 1;
    degree[e.v] += 1;
    if (e.is_loop()) {
      loops_[e.u] += 1;
      ++num_loops_;
    }
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

std::vector<std::int64_t> Graph::degrees() const {
  std::vector<std::int64_t> d(n_);
  for (std::size_t v = 0; v < n_; ++v) d[v] = degree(static_cast<Vertex>(v));
  return d;
}

std::int64_t Graph::volume(std::span<const Vertex> vertices) const {
  std::int64_t total = 0;
  for (Vertex v : vertices) total += degree(v);
  return total;
}

std::int64_t Graph::internal_edges(std::span<const Vertex> vertices) const {
  std::vector<char> member(n_, 0);
  for (Vertex v : vertices) member[v] = 1;
  // Every internal non-loop edge is seen twice, a loop is listed twice at v.
  std::int64_t twice = 0;
  for (Vertex v : vertices) {
    if (member[v] != 1) continue;
    member[v] = 2;
    for (Vertex u : neighbors(v)) {
      if (member[u]) ++twice;
    }
  }
  return twice / 2;
}

bool Graph::has_parallel_edges() const {
  for (std::size_t v = 0; v < n_; ++v) {
    auto nb = neighbors(static_cast<Vertex>(v));
    for (std::size_t i = 1; i < nb.size(); ++i) {
      if (nb[i] == nb[i - 1] && nb[i] != v) return true;
    }
    // Two loops at v show up as four consecutive copies of v.
    if (loops_[v] > 1) return true;
  }
  return false;
}

bool Graph::has_isolated_vertices() const {
  for (std::size_t v = 0; v < n_; ++v) {
    if (degree(static_cast<Vertex>(v)) == 0) return true;
  }
  return false;
}

Graph Graph::Simplified() const {
  std::vector<Edge> simple;
  simple.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!e.is_loop()) simple.push_back(e);
  }
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  return Graph(n_, std::move(simple));
}

Graph Graph::Induced(std::span<const Vertex> vertices) const {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(n_, kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_) throw ValidationError("induced subgraph vertex out of range");
    if (relabel[vertices[i]] != kAbsent) {
      throw ValidationError("induced subgraph vertex listed twice");
    }
    relabel[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (relabel[e.u] != kAbsent && relabel[e.v] != kAbsent) {
      kept.emplace_back(relabel[e.u], relabel[e.v]);
    }
  }
  return Graph(vertices.size(), std::move(kept));
}

std::vector<Edge> Graph::SortedEdges() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::vector<std::vector<Vertex>> Graph::Components() const {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n_; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component;
    seen[start] = 1;
    stack.push_back(static_cast<Vertex>(start));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex u : neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

Graph BuildGraph(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw ValidationError("a graph needs at least one vertex");
  return Graph(n, std::move(edges));
}

Graph CompleteGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph CompleteBipartiteGraph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(u, static_cast<Vertex>(a + j));
  }
  return Graph(a + b, std::move(edges));
}

Graph CycleGraph(std::size_t n) {
  if (n < 3) throw ValidationError("a simple cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph PathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace modlab

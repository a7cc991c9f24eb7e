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

#include "modlab/spectral.h"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "modlab/errors.h"

namespace modlab {

DenseMatrix NormalizedLaplacian(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> inv_sqrt(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " is isolated; the normalised Laplacian is undefined");
    }
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  DenseMatrix l{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t v = 0; v < n; ++v) l.values[v * n + v] = 1.0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      l.values[e.u * n + e.u] -= 2.0 * inv_sqrt[e.u] * inv_sqrt[e.u];
    } else {
      const double x = inv_sqrt[e.u] * inv_sqrt[e.v];
      l.values[e.u * n + e.v] -= x;
      l.values[e.v * n + e.u] -= x;
    }
  }
  return l;
}

Spectrum SpectralGap(const Graph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  if (n > cap) {
    throw CapExceededError("dense eigendecomposition of " + std::to_string(n) +
                           " vertices exceeds the cap of " + std::to_string(cap));
  }
  DenseMatrix l = NormalizedLaplacian(g);
  Spectrum spectrum;
  spectrum.eigenvalues.resize(n);
  const auto order = static_cast<lapack_int>(n);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', order, l.values.data(),
                                         order, spectrum.eigenvalues.data());
  if (info != 0) {
    throw std::runtime_error("symmetric eigensolver failed with code " + std::to_string(info));
  }
  for (std::size_t i = 1; i < n; ++i) {
    spectrum.gap = std::max(spectrum.gap, std::abs(1.0 - spectrum.eigenvalues[i]));
  }
  return spectrum;
}

double SubgraphBound(double alpha, double gap) {
  return 1.0 - alpha * std::min(alpha, 1.0 - gap);
}

bool IsEdgeSubset(const Graph& h, const Graph& g) {
  if (h.num_vertices() != g.num_vertices()) return false;
  const std::vector<Edge> small = h.SortedEdges();
  const std::vector<Edge> large = g.SortedEdges();
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

double SpectralUpperBound(const Graph& g, const Graph& h, std::size_t cap) {
  if (g.num_edges() == 0) throw ValidationError("spectral bound needs at least one edge");
  if (h.num_edges() == 0) throw ValidationError("the subgraph has no edges");
  if (!IsEdgeSubset(h, g)) throw ValidationError("the second graph is not a subgraph of the first");
  const double alpha = static_cast<double>(h.num_edges()) / static_cast<double>(g.num_edges());
  const Spectrum spectrum = SpectralGap(WithoutIsolatedVertices(h), cap);
  return SubgraphBound(alpha, spectrum.gap);
}

Graph WithoutIsolatedVertices(const Graph& g) {
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) kept.push_back(v);
  }
  return g.Induced(kept);
}

}  // namespace modlab

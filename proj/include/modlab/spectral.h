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

#ifndef MODLAB_SPECTRAL_H_
#define MODLAB_SPECTRAL_H_

#include <cstddef>
#include <vector>

#include "modlab/graph.h"

namespace modlab {

inline constexpr std::size_t kDefaultEigenCap = 2000;

// Dense symmetric matrix, row-major.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

struct Spectrum {
  // Ascending.
  std::vector<double> eigenvalues;
  // max over i != 0 of |1 - lambda_i|; 0 for a single vertex.
  double gap = 0.0;
};

// I - D^{-1/2} A D^{-1/2}, with a_uv the edge multiplicity and a_vv twice
// the number of loops at v. Throws ValidationError naming the first isolated
// vertex.
DenseMatrix NormalizedLaplacian(const Graph& g);

// Full spectrum of the normalised Laplacian by dense symmetric
// eigendecomposition. Throws CapExceededError if n > cap.
Spectrum SpectralGap(const Graph& g, std::size_t cap = kDefaultEigenCap);

// 1 - alpha * min(alpha, 1 - gap).
double SubgraphBound(double alpha, double gap);

// True iff the edge multiset of `h` is contained in that of `g`.
bool IsEdgeSubset(const Graph& h, const Graph& g);

// Upper bound on q*(g) from a subgraph h on the same vertex set, with
// alpha = e(h)/e(g) and the gap of h computed after dropping the vertices h
// does not touch. With h == g this is the gap of g. Throws ValidationError if
// h is not a subgraph of g or has no edges.
double SpectralUpperBound(const Graph& g, const Graph& h, std::size_t cap = kDefaultEigenCap);

// g restricted to vertices of positive degree, relabelled in increasing
// order.
Graph WithoutIsolatedVertices(const Graph& g);

}  // namespace modlab

#endif  // MODLAB_SPECTRAL_H_

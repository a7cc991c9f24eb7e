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

#ifndef MODLAB_WEIGHTS_H_
#define MODLAB_WEIGHTS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "modlab/graph.h"

namespace modlab {

// Symmetric nonnegative weights on V x V, diagonal allowed. Stored densely,
// so intended for n up to a few thousand.
//
// Degrees follow the graph convention: d_u = sum_v w_uv with the diagonal
// counted once, so a graph loop maps to w_vv = 2 and the weighted and
// unweighted scores agree.
class WeightFunction {
 public:
  WeightFunction() = default;

  // All-zero weights on n vertices.
  explicit WeightFunction(std::size_t n);

  // w_uv = number of u-v edges for u != v, w_vv = 2 * (loops at v).
  static WeightFunction FromGraph(const Graph& g);
  // w_uv = f(u, v) for u <= v. Throws ValidationError on a negative or
  // non-finite value.
  static WeightFunction FromFunction(std::size_t n,
                                     const std::function<double(Vertex, Vertex)>& f);

  std::size_t num_vertices() const { return n_; }
  double weight(Vertex u, Vertex v) const { return w_[u * n_ + v]; }
  // Sets w_uv and w_vu. Throws ValidationError if w < 0 or not finite.
  void set(Vertex u, Vertex v, double w);

  double degree(Vertex u) const;
  double volume(std::span<const Vertex> vertices) const;
  // e_w(A) = (1/2) sum_{u,v in A} w_uv, each ordered pair once.
  double internal_weight(std::span<const Vertex> vertices) const;
  // m_w = e_w(V).
  double total() const;

  // True iff every entry lies in [0, 1].
  bool is_probability() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

}  // namespace modlab

#endif  // MODLAB_WEIGHTS_H_

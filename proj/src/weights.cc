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

#include "modlab/weights.h"

#include <cmath>
#include <string>

#include "modlab/errors.h"

namespace modlab {

WeightFunction::WeightFunction(std::size_t n) : n_(n), w_(n * n, 0.0) {}

WeightFunction WeightFunction::FromGraph(const Graph& g) {
  WeightFunction w(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      w.w_[e.u * w.n_ + e.u] += 2.0;
    } else {
      w.w_[e.u * w.n_ + e.v] += 1.0;
      w.w_[e.v * w.n_ + e.u] += 1.0;
    }
  }
  return w;
}

WeightFunction WeightFunction::FromFunction(
    std::size_t n, const std::function<double(Vertex, Vertex)>& f) {
  WeightFunction w(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) w.set(u, v, f(u, v));
  }
  return w;
}

void WeightFunction::set(Vertex u, Vertex v, double w) {
  if (u >= n_ || v >= n_) throw ValidationError("weight index out of range");
  if (!std::isfinite(w) || w < 0.0) {
    throw ValidationError("weight (" + std::to_string(u) + "," + std::to_string(v) +
                          ") must be finite and nonnegative");
  }
  w_[u * n_ + v] = w;
  w_[v * n_ + u] = w;
}

double WeightFunction::degree(Vertex u) const {
  double d = 0.0;
  for (std::size_t v = 0; v < n_; ++v) d += w_[u * n_ + v];
  return d;
}

double WeightFunction::volume(std::span<const Vertex> vertices) const {
  double total = 0.0;
  for (Vertex v : vertices) total += degree(v);
  return total;
}

double WeightFunction::internal_weight(std::span<const Vertex> vertices) const {
  double sum = 0.0;
  for (Vertex u : vertices) {
    for (Vertex v : vertices) sum += w_[u * n_ + v];
  }
  return sum / 2.0;
}

double WeightFunction::total() const {
  double sum = 0.0;
  for (double x : w_) sum += x;
  return sum / 2.0;
}

bool WeightFunction::is_probability() const {
  for (double x : w_) {
    if (x > 1.0) return false;
  }
  return true;
}

}  // namespace modlab

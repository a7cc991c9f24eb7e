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

#include "modlab/partition.h"

#include <string>
#include <unordered_map>

#include "modlab/errors.h"

namespace modlab {
namespace {

template <typename Label>
std::vector<std::uint32_t> Canonicalize(std::span<const Label> labels, std::size_t* num_parts) {
  std::unordered_map<Label, std::uint32_t> ids;
  std::vector<std::uint32_t> assignment(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = ids.try_emplace(labels[v], static_cast<std::uint32_t>(ids.size()));
    assignment[v] = it->second;
  }
  *num_parts = ids.size();
  return assignment;
}

}  // namespace

Partition Partition::FromLabels(std::span<const std::int64_t> labels) {
  Partition p;
  p.assignment_ = Canonicalize(labels, &p.num_parts_);
  return p;
}

Partition Partition::FromLabels(std::span<const std::uint32_t> labels) {
  Partition p;
  p.assignment_ = Canonicalize(labels, &p.num_parts_);
  return p;
}

Partition Partition::FromParts(std::size_t n, const std::vector<std::vector<Vertex>>& parts) {
  constexpr std::int64_t kUnassigned = -1;
  std::vector<std::int64_t> labels(n, kUnassigned);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw ValidationError("part " + std::to_string(i) + " is empty");
    for (Vertex v : parts[i]) {
      if (v >= n) throw ValidationError("vertex " + std::to_string(v) + " out of range");
      if (labels[v] != kUnassigned) {
        throw ValidationError("vertex " + std::to_string(v) + " assigned twice");
      }
      labels[v] = static_cast<std::int64_t>(i);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] == kUnassigned) {
      throw ValidationError("vertex " + std::to_string(v) + " is not assigned");
    }
  }
  return FromLabels(std::span<const std::int64_t>(labels));
}

Partition Partition::Singletons(std::size_t n) {
  Partition p;
  p.assignment_.resize(n);
  for (std::size_t v = 0; v < n; ++v) p.assignment_[v] = static_cast<std::uint32_t>(v);
  p.num_parts_ = n;
  return p;
}

Partition Partition::Whole(std::size_t n) {
  Partition p;
  p.assignment_.assign(n, 0);
  p.num_parts_ = n == 0 ? 0 : 1;
  return p;
}

std::vector<std::vector<Vertex>> Partition::parts() const {
  std::vector<std::vector<Vertex>> result(num_parts_);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    result[assignment_[v]].push_back(static_cast<Vertex>(v));
  }
  return result;
}

std::vector<std::int64_t> Partition::part_volumes(const Graph& g) const {
  std::vector<std::int64_t> volumes(num_parts_, 0);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    volumes[assignment_[v]] += g.degree(static_cast<Vertex>(v));
  }
  return volumes;
}

bool Partition::HasExactPart(std::span<const Vertex> vertices) const {
  if (vertices.empty()) return false;
  const std::uint32_t part = assignment_[vertices.front()];
  std::size_t size = 0;
  for (std::uint32_t a : assignment_) size += (a == part);
  if (size != vertices.size()) return false;
  for (Vertex v : vertices) {
    if (assignment_[v] != part) return false;
  }
  return true;
}

bool Partition::IsCoarseningOf(const Partition& finer) const {
  if (finer.num_vertices() != num_vertices()) return false;
  std::vector<std::int64_t> image(finer.num_parts(), -1);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    std::int64_t& target = image[finer.part_of(static_cast<Vertex>(v))];
    if (target == -1) target = assignment_[v];
    if (target != assignment_[v]) return false;
  }
  return true;
}

}  // namespace modlab

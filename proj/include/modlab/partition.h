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

#ifndef MODLAB_PARTITION_H_
#define MODLAB_PARTITION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modlab/graph.h"

namespace modlab {

// Assignment of every vertex to exactly one non-empty part. Part ids are
// contiguous from 0 and numbered in order of first appearance when scanning
// vertices 0..n-1, so two partitions with the same parts compare equal.
class Partition {
 public:
  Partition() = default;

  // Arbitrary labels, one per vertex; relabelled to canonical ids.
  static Partition FromLabels(std::span<const std::int64_t> labels);
  static Partition FromLabels(std::span<const std::uint32_t> labels);
  // Throws ValidationError unless `parts` covers 0..n-1 exactly once with no
  // empty part.
  static Partition FromParts(std::size_t n, const std::vector<std::vector<Vertex>>& parts);
  static Partition Singletons(std::size_t n);
  static Partition Whole(std::size_t n);

  std::size_t num_vertices() const { return assignment_.size(); }
  std::size_t num_parts() const { return num_parts_; }
  std::uint32_t part_of(Vertex v) const { return assignment_[v]; }
  const std::vector<std::uint32_t>& assignment() const { return assignment_; }

  // Parts as sorted vertex lists, indexed by part id.
  std::vector<std::vector<Vertex>> parts() const;
  // Sum of degrees per part.
  std::vector<std::int64_t> part_volumes(const Graph& g) const;

  // True iff every vertex of `vertices` shares one part and that part has no
  // other member.
  bool HasExactPart(std::span<const Vertex> vertices) const;
  // True iff every part of *this is a union of parts of `finer`.
  bool IsCoarseningOf(const Partition& finer) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> assignment_;
  std::size_t num_parts_ = 0;
};

}  // namespace modlab

#endif  // MODLAB_PARTITION_H_

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

#ifndef MODLAB_EDGE_LIST_IO_H_
#define MODLAB_EDGE_LIST_IO_H_

#include <iosfwd>
#include <string>

#include "modlab/graph.h"
#include "modlab/partition.h"

namespace modlab {

// Edge-list text format:
//
//   # optional comments and blank lines anywhere
//   <n>
//   <u> <v>
//   ...
//
// Parse failures raise ParseError carrying the 1-based line number. An
// endpoint >= n is reported as an inconsistent header.
Graph ReadEdgeList(std::istream& in);
void WriteEdgeList(const Graph& g, std::ostream& out);

// File wrappers; an unopenable file raises IoError.
Graph LoadEdgeList(const std::string& path);
void SaveEdgeList(const Graph& g, const std::string& path);

// Partition files hold one "<v> <part_id>" line per vertex, in any order.
// Every vertex 0..n-1 must appear exactly once.
Partition ReadPartition(std::istream& in, std::size_t n);
void WritePartition(const Partition& p, std::ostream& out);
Partition LoadPartition(const std::string& path, std::size_t n);
void SavePartition(const Partition& p, const std::string& path);

}  // namespace modlab

#endif  // MODLAB_EDGE_LIST_IO_H_

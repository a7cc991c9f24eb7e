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

#include "modlab/edge_list_io.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "modlab/errors.h"

namespace modlab {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool IsSkippable(std::string_view line) { return line.empty() || line.front() == '#'; }

// Splits on runs of spaces/tabs and parses each field as an unsigned integer.
std::vector<std::uint64_t> ParseFields(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::uint64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw ParseError(line_no, "expected a non-negative integer, got '" +
                                    std::string(line.substr(pos, end - pos)) + "'");
    }
    fields.push_back(value);
    pos = end;
  }
  return fields;
}

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void CheckWritten(std::ostream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

Graph ReadEdgeList(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (IsSkippable(line)) continue;
    std::vector<std::uint64_t> fields = ParseFields(line, line_no);
    if (!have_header) {
      if (fields.size() != 1) throw ParseError(line_no, "expected the vertex count");
      n = fields[0];
      if (n == 0) throw ParseError(line_no, "vertex count must be at least 1");
      have_header = true;
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected two endpoints");
    if (fields[0] >= n || fields[1] >= n) {
      throw ParseError(line_no, "endpoint exceeds header vertex count " + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing vertex count");
  return Graph(n, std::move(edges));
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph LoadEdgeList(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return ReadEdgeList(in);
}

void SaveEdgeList(const Graph& g, const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  WriteEdgeList(g, out);
  CheckWritten(out, path);
}

Partition ReadPartition(std::istream& in, std::size_t n) {
  constexpr std::int64_t kUnset = -1;
  std::vector<std::int64_t> labels(n, kUnset);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (IsSkippable(line)) continue;
    std::vector<std::uint64_t> fields = ParseFields(line, line_no);
    if (fields.size() != 2) throw ParseError(line_no, "expected '<vertex> <part>'");
    if (fields[0] >= n) throw ParseError(line_no, "vertex out of range");
    if (labels[fields[0]] != kUnset) throw ParseError(line_no, "vertex listed twice");
    labels[fields[0]] = static_cast<std::int64_t>(fields[1]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] == kUnset) {
      throw ValidationError("partition does not assign vertex " + std::to_string(v));
    }
  }
  return Partition::FromLabels(std::span<const std::int64_t>(labels));
}

void WritePartition(const Partition& p, std::ostream& out) {
  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    out << v << ' ' << p.part_of(static_cast<Vertex>(v)) << '\n';
  }
}

Partition LoadPartition(const std::string& path, std::size_t n) {
  std::ifstream in = OpenForRead(path);
  return ReadPartition(in, n);
}

void SavePartition(const Partition& p, const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  WritePartition(p, out);
  CheckWritten(out, path);
}

}  // namespace modlab

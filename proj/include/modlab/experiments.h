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

#ifndef MODLAB_EXPERIMENTS_H_
#define MODLAB_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace modlab {

// A named experiment over the cartesian product of a parameter grid.
// JSON form:
//
//   {"name": "sbm-planted", "seed": 7, "replicates": 10,
//    "grid": {"n": [3000], "k": [2, 3, 5]},
//    "output": "rows.csv", "format": "csv", "threads": 0,
//    "options": {"graph": "observed.txt"}}
//
// "name" and "seed" are required. Grid values may be a number or a list of
// numbers; grid keys keep their file order and the last key varies fastest.
// "threads" 0 means one per hardware thread.
struct ExperimentSpec {
  std::string name;
  std::vector<std::pair<std::string, std::vector<double>>> grid;
  std::size_t replicates = 1;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "csv";
  std::size_t threads = 0;
  std::map<std::string, std::string> options;
};

struct ExperimentRecord {
  std::string experiment;
  std::size_t grid_index = 0;
  std::size_t replicate = 0;
  // Regenerates this row: SplitSeed(SplitSeed(spec seed, grid_index), replicate).
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, double>> metrics;
  double wall_time_s = 0.0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

// Throws ValidationError on malformed specs.
ExperimentSpec ParseExperimentSpec(const std::string& json_text);
ExperimentSpec LoadExperimentSpec(const std::string& path);

std::vector<std::string> RegisteredExperiments();

// Grid points as (name, value) lists, in grid_index order.
std::vector<std::vector<std::pair<std::string, double>>> ExpandGrid(const ExperimentSpec& spec);

// Runs every (grid point, replicate) and returns the rows sorted by
// (grid_index, replicate). Throws ValidationError for an unknown experiment
// (the message lists the registered names), an empty grid, an unknown grid
// key, or zero replicates.
std::vector<ExperimentRecord> RunExperiment(const ExperimentSpec& spec);

// Columns: experiment, grid_index, replicate, seed, the parameters, the
// metrics, wall_time_s. Reals use 9 significant digits. Parameter and metric
// columns come from the first record, so an empty list gives only the fixed
// columns.
void EmitCsv(const std::vector<ExperimentRecord>& records, std::ostream& out);
// JSON array with one object per row, values rounded as in the CSV.
void EmitJson(const std::vector<ExperimentRecord>& records, std::ostream& out);
std::vector<ExperimentRecord> ParseRecordsJson(const std::string& json_text);

// Writes in `format` ("csv" or "json") to `path`; IoError on failure.
void EmitToFile(const std::vector<ExperimentRecord>& records, const std::string& format,
                const std::string& path);

// Value rounded to 9 significant digits, as emitted.
double RoundForOutput(double x);

}  // namespace modlab

#endif  // MODLAB_EXPERIMENTS_H_

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

#include "modlab/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "modlab/edge_list_io.h"
#include "modlab/errors.h"
#include "modlab/generators.h"
#include "modlab/modularity.h"
#include "modlab/rng.h"
#include "modlab/sampling.h"
#include "modlab/search.h"
#include "modlab/spectral.h"

namespace modlab {
namespace {

using Json = nlohmann::ordered_json;
using Metrics = std::vector<std::pair<std::string, double>>;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kExperimentEigenCap = 3000;

// Parameter lookup for one grid point, with per-experiment defaults.
class Params {
 public:
  Params(const std::vector<std::pair<std::string, double>>& values,
         const std::map<std::string, std::string>& options)
      : values_(values), options_(options) {}

  double Get(const std::string& key, double fallback) const {
    for (const auto& [k, v] : values_) {
      if (k == key) return v;
    }
    return fallback;
  }
  std::size_t Count(const std::string& key, double fallback) const {
    const double x = Get(key, fallback);
    if (!(x >= 0.0) || x != std::floor(x)) {
      throw ValidationError("parameter '" + key + "' must be a non-negative integer");
    }
    return static_cast<std::size_t>(x);
  }
  const std::string* Option(const std::string& key) const {
    auto it = options_.find(key);
    return it == options_.end() ? nullptr : &it->second;
  }

 private:
  const std::vector<std::pair<std::string, double>>& values_;
  const std::map<std::string, std::string>& options_;
};

struct Experiment {
  std::string name;
  std::vector<std::string> keys;
  std::function<Metrics(const Params&, std::uint64_t)> run;
};

double SpectralGapOrNan(const Graph& g) {
  const Graph core = WithoutIsolatedVertices(g);
  if (core.num_vertices() == 0 || core.num_vertices() > kExperimentEigenCap) return kNan;
  return SpectralGap(core, kExperimentEigenCap).gap;
}

// Swap and local moving, the common heuristic pair.
struct Heuristics {
  double swap = kNan;
  double local = kNan;
  double best = kNan;
};

Heuristics RunHeuristics(const Graph& g, std::uint64_t seed) {
  Heuristics h;
  if (g.num_edges() == 0) return h;
  h.swap = SwapBipartition(g).score.q;
  h.local = LocalMoving(g, seed).score.q;
  h.best = std::max(h.swap, h.local);
  return h;
}

double BoundOk(double heuristic, double bound) {
  if (std::isnan(heuristic) || std::isnan(bound)) return kNan;
  return heuristic <= bound + 1e-9 ? 1.0 : 0.0;
}

Metrics GnpScaling(const Params& params, std::uint64_t seed) {
  const std::size_t n = params.Count("n", 1000);
  const double np = params.Get("np", 10);
  if (n < 2 || np <= 0.0 || np > static_cast<double>(n)) {
    throw ValidationError("gnp-scaling needs n >= 2 and 0 < np <= n");
  }
  const Rng root(seed);
  const Graph g = Gnp(n, np / static_cast<double>(n), root.Split(0).seed());
  const Heuristics h = RunHeuristics(g, root.Split(1).seed());
  const double gap = SpectralGapOrNan(g);
  return {{"edges", static_cast<double>(g.num_edges())},
          {"swap", h.swap},
          {"local", h.local},
          {"qhat", h.best},
          {"spectral_gap", gap},
          {"lower_ref", 0.2 / std::sqrt(np)},
          {"upper_ref", 3.06 / std::sqrt(np)},
          {"bound_ok", BoundOk(h.best, gap)}};
}

Metrics GnpDense(const Params& params, std::uint64_t seed) {
  const std::size_t n = params.Count("n", 200);
  const double c = params.Get("c", 0.5);
  if (n < 2 || c < 0.0 || c > static_cast<double>(n)) {
    throw ValidationError("gnp-dense needs n >= 2 and 0 <= c <= n");
  }
  const Rng root(seed);
  const Graph g = Gnp(n, 1.0 - c / static_cast<double>(n), root.Split(0).seed());
  const Heuristics h = RunHeuristics(g, root.Split(1).seed());
  double best_bipartition = kNan;
  double positive = kNan;
  try {
    const DenseBipartitionScan scan = ExactBestBipartitionDense(g);
    best_bipartition = scan.best_score;
    positive = scan.positive_found ? 1.0 : 0.0;
  } catch (const CapExceededError&) {
  }
  return {{"edges", static_cast<double>(g.num_edges())},
          {"missing_edges", static_cast<double>(n * (n - 1) / 2 - g.num_edges())},
          {"swap", h.swap},
          {"local", h.local},
          {"qhat", h.best},
          {"best_bipartition", best_bipartition},
          {"positive_bipartition", positive}};
}

Metrics CycleArc(const Params& params, std::uint64_t) {
  const std::size_t n = params.Count("n", 100);
  if (n < 3) throw ValidationError("cycle-arc needs n >= 3");
  std::size_t k = params.Count("k", 0);
  if (k == 0) k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  k = std::clamp<std::size_t>(k, 1, n);
  const Graph g = CycleGraph(n);
  const double arc = ArcPartition(g, k).score.q;
  const double kk = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  return {{"arcs", kk},
          {"arc", arc},
          {"closed_form", k == 1 ? 0.0 : 1.0 - kk / nn - 1.0 / kk},
          {"target", 1.0 - 2.0 / std::sqrt(nn)}};
}

Metrics RegularScaling(const Params& params, std::uint64_t seed) {
  const std::size_t n = params.Count("n", 1000);
  const std::size_t r = params.Count("r", 4);
  if (n < 3 || r < 2 || (n * (r - 2)) % 2 != 0) {
    throw ValidationError("regular-scaling needs n >= 3, r >= 2 and n(r-2) even");
  }
  const Rng root(seed);
  // A planted Hamiltonian cycle plus an (r-2)-regular configuration model,
  // so the arc construction has a known cycle to cut.
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  Rng order_rng = root.Split(0);
  order_rng.Shuffle(order);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);
  const Graph rest = ConfigurationModel(n, r - 2, root.Split(1).seed(), ConfigMode::kMultigraph);
  edges.insert(edges.end(), rest.edges().begin(), rest.edges().end());
  const Graph g(n, std::move(edges));

  const Heuristics h = RunHeuristics(g, root.Split(2).seed());
  const double m = static_cast<double>(g.num_edges());
  const auto k = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(std::sqrt(m))), 1, n);
  const double arc = ArcPartition(g, k, std::span<const Vertex>(order)).score.q;
  const double rr = static_cast<double>(r);
  const double gap = SpectralGapOrNan(g);
  const double qhat = std::max(h.best, arc);
  return {{"swap", h.swap},
          {"local", h.local},
          {"arc", arc},
          {"qhat", qhat},
          {"spectral_gap", gap},
          {"upper_envelope", 2.0 / std::sqrt(rr)},
          {"arc_lower_ref", 2.0 / rr - 2.0 * std::sqrt(6.0 / static_cast<double>(n))},
          {"bound_ok", BoundOk(qhat, gap)}};
}

Metrics PaScaling(const Params& params, std::uint64_t seed) {
  const std::size_t n = params.Count("n", 1000);
  const std::size_t h = params.Count("h", 4);
  if (n < 1 || h < 1) throw ValidationError("pa-scaling needs n >= 1 and h >= 1");
  const Rng root(seed);
  const PaTrace trace = PreferentialAttachment(n, h, root.Split(0).seed());
  const Heuristics heur = RunHeuristics(trace.merged, root.Split(1).seed());
  const double hh = static_cast<double>(h);
  const double gap = SpectralGapOrNan(trace.merged);
  return {{"edges", static_cast<double>(trace.merged.num_edges())},
          {"swap", heur.swap},
          {"local", heur.local},
          {"qhat", heur.best},
          {"spectral_gap", gap},
          {"lower_ref", 1.0 / std::sqrt(hh)},
          {"upper_ref", h >= 2 ? std::sqrt(std::log(hh)) / std::sqrt(hh) : kNan},
          {"bound_ok", BoundOk(heur.best, gap)}};
}

Metrics HyperbolicSector(const Params& params, std::uint64_t seed) {
  const std::size_t n = params.Count("n", 2000);
  const double alpha = params.Get("alpha", 0.75);
  const double nu = params.Get("nu", 1.0);
  const std::size_t k = params.Count("k", 20);
  const bool poissonised = params.Get("poissonised", 1.0) != 0.0;
  const Rng root(seed);
  const HyperbolicInstance inst = Hyperbolic(n, alpha, nu, root.Split(0).seed(), poissonised);
  double sector = kNan;
  double local = kNan;
  if (inst.graph.num_edges() > 0) {
    sector = ModularityScore(inst.graph, SectorPartition(inst, k)).q;
    local = LocalMoving(inst.graph, root.Split(1).seed()).score.q;
  }
  return {{"points", static_cast<double>(inst.graph.num_vertices())},
          {"edges", static_cast<double>(inst.graph.num_edges())},
          {"disc_radius", inst.disc_radius},
          {"sector", sector},
          {"local", local},
          {"qhat", std::max(sector, local)}};
}

Metrics SbmPlanted(const Params& params, std::uint64_t seed) {
  const std::size_t n = params.Count("n", 3000);
  const std::size_t k = params.Count("k", 3);
  const double p = params.Get("p", 0.1);
  const double q = params.Get("q", 0.02);
  const Rng root(seed);
  const SbmInstance sbm = SbmBalanced(n, k, p, q, root.Split(0).seed());
  const ModularityBreakdown planted = ModularityScore(sbm.graph, sbm.planted);
  const Heuristics h = RunHeuristics(sbm.graph, root.Split(1).seed());
  return {{"edges", static_cast<double>(sbm.graph.num_edges())},
          {"planted", planted.q},
          {"edge_contribution", planted.edge_contribution},
          {"degree_tax", planted.degree_tax},
          {"formula", PlantedScoreFormula(p, q, k)},
          {"swap", h.swap},
          {"local", h.local},
          {"qhat", std::max(h.best, planted.q)}};
}

Metrics BickelMerge(const Params& params, std::uint64_t seed) {
  const std::size_t n = params.Count("n", 1500);
  const double rho = params.Get("rho", 1.0);
  const std::vector<double> pi(3, 1.0 / 3.0);
  const std::vector<std::vector<double>> p = {
      {0.06, 0.04, 0.0}, {0.04, 0.12, 0.04}, {0.0, 0.04, 0.66}};
  const SbmInstance sbm = SbmGeneral(n, pi, p, rho, seed);
  std::vector<std::uint32_t> merged_labels = sbm.block;
  for (std::uint32_t& b : merged_labels) b = b == 2 ? 1 : 0;
  const ModularityBreakdown planted = ModularityScore(sbm.graph, sbm.planted);
  const ModularityBreakdown merged = ModularityScore(
      sbm.graph, Partition::FromLabels(std::span<const std::uint32_t>(merged_labels)));
  const ZhaoReport zhao = ZhaoCondition(pi, p, rho, n);
  return {{"edges", static_cast<double>(sbm.graph.num_edges())},
          {"planted", planted.q},
          {"planted_edge_contribution", planted.edge_contribution},
          {"planted_degree_tax", planted.degree_tax},
          {"merged", merged.q},
          {"merged_edge_contribution", merged.edge_contribution},
          {"merged_degree_tax", merged.degree_tax},
          {"merged_beats_planted", merged.q > planted.q ? 1.0 : 0.0},
          {"conditions_hold", zhao.all_hold ? 1.0 : 0.0}};
}

Metrics PercolationCurve(const Params& params, std::uint64_t seed,
                         const Graph& underlying) {
  const double p = params.Get("p", 0.5);
  const double eps = params.Get("eps", 0.2);
  const double eta = eps / 4.0;
  const Rng root(seed);
  const Graph observed = Percolate(underlying, p, root.Split(0).seed());
  double observed_local = kNan;
  double transferred = kNan;
  double parts = kNan;
  if (observed.num_edges() > 0) {
    const SearchResult found = LocalMoving(observed, root.Split(1).seed());
    observed_local = found.score.q;
    const Partition transfer = PercolationTransfer(observed, found.partition, eta);
    transferred = ModularityScore(underlying, transfer).q;
    parts = static_cast<double>(transfer.num_parts());
  }
  const double full = LocalMoving(underlying, root.Split(2).seed()).score.q;
  return {{"observed_edges", static_cast<double>(observed.num_edges())},
          {"eta", eta},
          {"observed_local", observed_local},
          {"transferred", transferred},
          {"transferred_parts", parts},
          {"underlying_local", full}};
}

Metrics ResolutionDemo(const Params& params, std::uint64_t) {
  const std::size_t h = params.Count("h", 2);
  const std::size_t b = params.Count("b", 5);
  if (h < 1) throw ValidationError("resolution-demo needs h >= 1");
  // C: two paths of h edges joined end to end by one edge; then K_b.
  const std::size_t c_size = 2 * (h + 1);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < c_size; ++v) edges.emplace_back(v, v + 1);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      edges.emplace_back(static_cast<Vertex>(c_size + i), static_cast<Vertex>(c_size + j));
    }
  }
  const Graph g(c_size + b, std::move(edges));
  const SearchResult best = ExactModularity(g);
  std::vector<Vertex> c(c_size);
  for (Vertex v = 0; v < c_size; ++v) c[v] = v;
  const std::int64_t e_c = g.internal_edges(c);
  bool split = false;
  for (Vertex v = 1; v < c_size; ++v) split = split || best.partition.part_of(v) != best.partition.part_of(0);
  const double threshold = std::sqrt(static_cast<double>(g.total_volume()));
  return {{"m", static_cast<double>(g.num_edges())},
          {"e_c", static_cast<double>(e_c)},
          {"sqrt_2m", threshold},
          {"below_threshold", e_c * e_c < g.total_volume() ? 1.0 : 0.0},
          {"optimum", best.score.q},
          {"splits_c", split ? 1.0 : 0.0}};
}

Graph LoadOrDefaultUnderlying(const std::map<std::string, std::string>& options,
                              std::uint64_t seed) {
  auto it = options.find("graph");
  if (it != options.end()) return LoadEdgeList(it->second);
  return SbmBalanced(300, 3, 0.2, 0.02, SplitSeed(seed, 0xfeed)).graph;
}

const std::vector<Experiment>& Registry() {
  static const std::vector<Experiment> registry = {
      {"gnp-scaling", {"n", "np"}, GnpScaling},
      {"gnp-dense", {"n", "c"}, GnpDense},
      {"cycle-arc", {"n", "k"}, CycleArc},
      {"regular-scaling", {"n", "r"}, RegularScaling},
      {"pa-scaling", {"n", "h"}, PaScaling},
      {"hyperbolic-sector", {"n", "alpha", "nu", "k", "poissonised"}, HyperbolicSector},
      {"sbm-planted", {"n", "k", "p", "q"}, SbmPlanted},
      {"bickel-merge", {"n", "rho"}, BickelMerge},
      {"percolation-curve", {"p", "eps"}, nullptr},
      {"resolution-demo", {"h", "b"}, ResolutionDemo},
  };
  return registry;
}

std::string FormatReal(double x) {
  if (std::isnan(x)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", x);
  return buffer;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

Json RealToJson(double x) {
  if (std::isnan(x)) return nullptr;
  return RoundForOutput(x);
}

double RealFromJson(const Json& j) {
  if (j.is_null()) return kNan;
  return j.get<double>();
}

}  // namespace

double RoundForOutput(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(FormatReal(x).c_str(), nullptr);
}

std::vector<std::string> RegisteredExperiments() {
  std::vector<std::string> names;
  for (const Experiment& e : Registry()) names.push_back(e.name);
  return names;
}

ExperimentSpec ParseExperimentSpec(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("experiment spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("experiment spec must be a JSON object");
  ExperimentSpec spec;
  try {
    if (!j.contains("name")) throw ValidationError("experiment spec needs \"name\"");
    if (!j.contains("seed")) throw ValidationError("experiment spec needs \"seed\"");
    spec.name = j.at("name").get<std::string>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("replicates")) {
      const auto r = j.at("replicates").get<std::int64_t>();
      if (r < 1) throw ValidationError("replicates must be at least 1");
      spec.replicates = static_cast<std::size_t>(r);
    }
    if (j.contains("output")) spec.output = j.at("output").get<std::string>();
    if (j.contains("format")) spec.format = j.at("format").get<std::string>();
    if (spec.format != "csv" && spec.format != "json") {
      throw ValidationError("format must be \"csv\" or \"json\"");
    }
    if (j.contains("threads")) spec.threads = j.at("threads").get<std::size_t>();
    if (j.contains("grid")) {
      const Json& grid = j.at("grid");
      if (!grid.is_object()) throw ValidationError("grid must be an object");
      for (const auto& [key, value] : grid.items()) {
        std::vector<double> values;
        if (value.is_array()) {
          for (const Json& x : value) values.push_back(x.get<double>());
        } else {
          values.push_back(value.get<double>());
        }
        if (values.empty()) throw ValidationError("grid key '" + key + "' has no values");
        spec.grid.emplace_back(key, std::move(values));
      }
    }
    if (j.contains("options")) {
      for (const auto& [key, value] : j.at("options").items()) {
        spec.options[key] = value.is_string() ? value.get<std::string>() : value.dump();
      }
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("experiment spec has a field of the wrong type: ") +
                          e.what());
  }
  return spec;
}

ExperimentSpec LoadExperimentSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseExperimentSpec(buffer.str());
}

std::vector<std::vector<std::pair<std::string, double>>> ExpandGrid(const ExperimentSpec& spec) {
  std::vector<std::vector<std::pair<std::string, double>>> points(1);
  for (const auto& [key, values] : spec.grid) {
    std::vector<std::vector<std::pair<std::string, double>>> next;
    for (const auto& point : points) {
      for (double x : values) {
        auto extended = point;
        extended.emplace_back(key, x);
        next.push_back(std::move(extended));
      }
    }
    points = std::move(next);
  }
  return points;
}

std::vector<ExperimentRecord> RunExperiment(const ExperimentSpec& spec) {
  const Experiment* experiment = nullptr;
  for (const Experiment& e : Registry()) {
    if (e.name == spec.name) experiment = &e;
  }
  if (experiment == nullptr) {
    std::string names;
    for (const std::string& name : RegisteredExperiments()) names += (names.empty() ? "" : ", ") + name;
    throw ValidationError("unknown experiment '" + spec.name + "'; registered: " + names);
  }
  if (spec.replicates < 1) throw ValidationError("replicates must be at least 1");
  for (const auto& [key, values] : spec.grid) {
    if (values.empty()) throw ValidationError("grid key '" + key + "' has no values");
    if (std::find(experiment->keys.begin(), experiment->keys.end(), key) ==
        experiment->keys.end()) {
      std::string known;
      for (const std::string& k : experiment->keys) known += (known.empty() ? "" : ", ") + k;
      throw ValidationError("experiment '" + spec.name + "' has no parameter '" + key +
                            "'; known: " + known);
    }
  }
  const auto points = ExpandGrid(spec);

  std::function<Metrics(const Params&, std::uint64_t)> run = experiment->run;
  std::shared_ptr<Graph> underlying;
  if (experiment->name == "percolation-curve") {
    underlying = std::make_shared<Graph>(LoadOrDefaultUnderlying(spec.options, spec.seed));
    if (underlying->num_edges() == 0) throw ValidationError("percolation-curve graph has no edges");
    run = [underlying](const Params& params, std::uint64_t seed) {
      return PercolationCurve(params, seed, *underlying);
    };
  }

  const std::size_t jobs = points.size() * spec.replicates;
  std::vector<ExperimentRecord> records(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t grid_index = job / spec.replicates;
      const std::size_t replicate = job % spec.replicates;
      ExperimentRecord& record = records[job];
      record.experiment = spec.name;
      record.grid_index = grid_index;
      record.replicate = replicate;
      record.seed = SplitSeed(SplitSeed(spec.seed, grid_index), replicate);
      record.params = points[grid_index];
      const auto start = std::chrono::steady_clock::now();
      try {
        record.metrics = run(Params(record.params, spec.options), record.seed);
      } catch (...) {
        errors[job] = std::current_exception();
      }
      record.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::size_t threads = spec.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, jobs);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return records;
}

void EmitCsv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
  out << "experiment,grid_index,replicate,seed";
  if (!records.empty()) {
    for (const auto& [name, value] : records.front().params) out << ',' << CsvField(name);
    for (const auto& [name, value] : records.front().metrics) out << ',' << CsvField(name);
  }
  out << ",wall_time_s\n";
  for (const ExperimentRecord& r : records) {
    out << CsvField(r.experiment) << ',' << r.grid_index << ',' << r.replicate << ',' << r.seed;
    for (const auto& [name, value] : r.params) out << ',' << FormatReal(value);
    for (const auto& [name, value] : r.metrics) out << ',' << FormatReal(value);
    out << ',' << FormatReal(r.wall_time_s) << '\n';
  }
}

void EmitJson(const std::vector<ExperimentRecord>& records, std::ostream& out) {
  Json rows = Json::array();
  for (const ExperimentRecord& r : records) {
    Json row;
    row["experiment"] = r.experiment;
    row["grid_index"] = r.grid_index;
    row["replicate"] = r.replicate;
    row["seed"] = r.seed;
    Json params = Json::object();
    for (const auto& [name, value] : r.params) params[name] = RealToJson(value);
    Json metrics = Json::object();
    for (const auto& [name, value] : r.metrics) metrics[name] = RealToJson(value);
    row["params"] = std::move(params);
    row["metrics"] = std::move(metrics);
    row["wall_time_s"] = RealToJson(r.wall_time_s);
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

std::vector<ExperimentRecord> ParseRecordsJson(const std::string& json_text) {
  std::vector<ExperimentRecord> records;
  try {
    const Json rows = Json::parse(json_text);
    if (!rows.is_array()) throw ValidationError("records JSON must be an array");
    for (const Json& row : rows) {
      ExperimentRecord r;
      r.experiment = row.at("experiment").get<std::string>();
      r.grid_index = row.at("grid_index").get<std::size_t>();
      r.replicate = row.at("replicate").get<std::size_t>();
      r.seed = row.at("seed").get<std::uint64_t>();
      for (const auto& [name, value] : row.at("params").items()) {
        r.params.emplace_back(name, RealFromJson(value));
      }
      for (const auto& [name, value] : row.at("metrics").items()) {
        r.metrics.emplace_back(name, RealFromJson(value));
      }
      r.wall_time_s = RealFromJson(row.at("wall_time_s"));
      records.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed records JSON: ") + e.what());
  }
  return records;
}

void EmitToFile(const std::vector<ExperimentRecord>& records, const std::string& format,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (format == "json") {
    EmitJson(records, out);
  } else if (format == "csv") {
    EmitCsv(records, out);
  } else {
    throw ValidationError("unknown output format '" + format + "'");
  }
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace modlab

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

// modlab command-line tool. Subcommands read and write the edge-list and
// partition text formats; results are printed as JSON on stdout.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modlab/edge_list_io.h"
#include "modlab/errors.h"
#include "modlab/experiments.h"
#include "modlab/generators.h"
#include "modlab/graph.h"
#include "modlab/modularity.h"
#include "modlab/partition.h"
#include "modlab/sampling.h"
#include "modlab/search.h"
#include "modlab/spectral.h"

namespace {

using Json = nlohmann::ordered_json;
using modlab::Graph;
using modlab::Partition;

constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

void PrintJson(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json ScoreJson(const modlab::ModularityBreakdown& s) {
  return Json{{"q", s.q}, {"edge_contribution", s.edge_contribution}, {"degree_tax", s.degree_tax}};
}

Json PartitionLabels(const Partition& p) { return Json(p.assignment()); }

// Edge list to `path` (stdout for "-" or empty) and, when asked, a JSON
// sidecar with the parameters.
void EmitGraph(const Graph& g, const std::string& path, const std::string& sidecar,
               const Json& meta) {
  if (path.empty() || path == "-") {
    modlab::WriteEdgeList(g, std::cout);
  } else {
    modlab::SaveEdgeList(g, path);
  }
  std::string sidecar_path = sidecar;
  if (sidecar_path.empty() && !path.empty() && path != "-") sidecar_path = path + ".json";
  if (sidecar_path.empty()) return;
  std::ofstream out(sidecar_path);
  if (!out) throw modlab::IoError("cannot open '" + sidecar_path + "' for writing");
  Json full = meta;
  full["vertices"] = g.num_vertices();
  full["edges"] = g.num_edges();
  out << full.dump(2) << '\n';
  if (!out) throw modlab::IoError("write to '" + sidecar_path + "' failed");
}

void EmitPartition(const Partition& p, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    modlab::WritePartition(p, std::cout);
  } else {
    modlab::SavePartition(p, path);
  }
}

struct GenOptions {
  std::string out;
  std::string sidecar;
  std::uint64_t seed = 0;
  std::size_t n = 100;
  double p = 0.1;
  double q = 0.02;
  std::uint64_t m = 0;
  std::size_t r = 3;
  std::string mode = "multigraph";
  std::size_t h = 2;
  std::size_t k = 2;
  std::size_t dimension = 2;
  double a1 = 1.0, a2 = 1.0;
  double alpha = 0.75, nu = 1.0;
  bool poissonised = false;
  std::vector<double> pi;
  std::vector<double> matrix;
  double rho = 1.0;
  bool show_mini = false;
};

modlab::ConfigMode ParseMode(const std::string& mode) {
  if (mode == "multigraph") return modlab::ConfigMode::kMultigraph;
  if (mode == "erased") return modlab::ConfigMode::kErased;
  if (mode == "rejection") return modlab::ConfigMode::kRejection;
  throw modlab::ValidationError("unknown configuration mode '" + mode + "'");
}

void AddGen(CLI::App& app, GenOptions& o, std::function<void()>& action) {
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph as an edge list plus a JSON sidecar");
  gen->require_subcommand(1);
  auto common = [&o](CLI::App* sub, bool seeded) {
    sub->add_option("-o,--out", o.out, "Edge-list output path (stdout if omitted)");
    sub->add_option("--sidecar", o.sidecar, "JSON sidecar path (default: <out>.json)");
    if (seeded) sub->add_option("--seed", o.seed, "Random seed")->required();
  };

  CLI::App* gnp = gen->add_subcommand("gnp", "Binomial random graph G(n, p)");
  common(gnp, true);
  gnp->add_option("-n", o.n, "Vertices")->capture_default_str();
  gnp->add_option("-p", o.p, "Edge probability")->capture_default_str();
  gnp->callback([&] {
    action = [&] {
      EmitGraph(modlab::Gnp(o.n, o.p, o.seed), o.out, o.sidecar,
                {{"model", "gnp"}, {"n", o.n}, {"p", o.p}, {"seed", o.seed}});
    };
  });

  CLI::App* gnm = gen->add_subcommand("gnm", "Uniform random graph with m edges");
  common(gnm, true);
  gnm->add_option("-n", o.n, "Vertices")->capture_default_str();
  gnm->add_option("-m", o.m, "Edges")->required();
  gnm->callback([&] {
    action = [&] {
      EmitGraph(modlab::Gnm(o.n, o.m, o.seed), o.out, o.sidecar,
                {{"model", "gnm"}, {"n", o.n}, {"m", o.m}, {"seed", o.seed}});
    };
  });

  CLI::App* config = gen->add_subcommand("config", "Random r-regular configuration model");
  common(config, true);
  config->add_option("-n", o.n, "Vertices")->capture_default_str();
  config->add_option("-r", o.r, "Degree")->capture_default_str();
  config->add_option("--mode", o.mode, "multigraph, erased or rejection")
      ->check(CLI::IsMember({"multigraph", "erased", "rejection"}))
      ->capture_default_str();
  config->callback([&] {
    action = [&] {
      EmitGraph(modlab::ConfigurationModel(o.n, o.r, o.seed, ParseMode(o.mode)), o.out,
                o.sidecar,
                {{"model", "config"}, {"n", o.n}, {"r", o.r}, {"mode", o.mode}, {"seed", o.seed}});
    };
  });

  CLI::App* pa = gen->add_subcommand("pa", "Preferential attachment multigraph with h*n edges");
  common(pa, true);
  pa->add_option("-n", o.n, "Vertices")->capture_default_str();
  pa->add_option("--edges-per-vertex", o.h, "Edges added per vertex (h)")->capture_default_str();
  pa->add_flag("--mini", o.show_mini, "Emit the mini-vertex tree instead of the merged graph");
  pa->callback([&] {
    action = [&] {
      const modlab::PaTrace trace = modlab::PreferentialAttachment(o.n, o.h, o.seed);
      EmitGraph(o.show_mini ? trace.mini : trace.merged, o.out, o.sidecar,
                {{"model", "pa"}, {"n", o.n}, {"h", o.h}, {"mini", o.show_mini}, {"seed", o.seed}});
    };
  });

  CLI::App* spa = gen->add_subcommand("spa", "Spatial preferential attachment on the unit torus");
  common(spa, true);
  spa->add_option("-n", o.n, "Vertices")->capture_default_str();
  spa->add_option("--dimension", o.dimension, "Torus dimension (1 to 3)")->capture_default_str();
  spa->add_option("--a1", o.a1, "In-degree coefficient of the sphere volume")->capture_default_str();
  spa->add_option("--a2", o.a2, "Constant term of the sphere volume")->capture_default_str();
  spa->add_option("-p", o.p, "Edge probability inside a sphere")->capture_default_str();
  spa->callback([&] {
    action = [&] {
      const modlab::SpaInstance inst = modlab::Spa(o.n, o.dimension, o.a1, o.a2, o.p, o.seed);
      Json arcs = Json::array();
      for (const modlab::Edge& e : inst.arcs) arcs.push_back({e.u, e.v});
      EmitGraph(inst.graph, o.out, o.sidecar,
                {{"model", "spa"},
                 {"n", o.n},
                 {"dimension", o.dimension},
                 {"a1", o.a1},
                 {"a2", o.a2},
                 {"p", o.p},
                 {"seed", o.seed},
                 {"positions", inst.positions},
                 {"arcs", arcs}});
    };
  });

  CLI::App* hyp = gen->add_subcommand("hyperbolic", "Hyperbolic random graph on a disc");
  common(hyp, true);
  hyp->add_option("-n", o.n, "Expected number of points")->capture_default_str();
  hyp->add_option("--alpha", o.alpha, "Radial density exponent")->capture_default_str();
  hyp->add_option("--nu", o.nu, "Disc radius parameter, R = 2 ln(n/nu)")->capture_default_str();
  hyp->add_option("-k", o.k, "Sectors for the sidecar partition")->capture_default_str();
  hyp->add_flag("--poissonised", o.poissonised, "Draw the point count from Poisson(n)");
  hyp->callback([&] {
    action = [&] {
      const modlab::HyperbolicInstance inst =
          modlab::Hyperbolic(o.n, o.alpha, o.nu, o.seed, o.poissonised);
      Json meta{{"model", "hyperbolic"},
                {"n", o.n},
                {"alpha", o.alpha},
                {"nu", o.nu},
                {"poissonised", o.poissonised},
                {"seed", o.seed},
                {"disc_radius", inst.disc_radius},
                {"radius", inst.radius},
                {"angle", inst.angle}};
      if (o.k >= 2 && inst.graph.num_vertices() > 0) {
        meta["sectors"] = o.k;
        meta["sector_partition"] = PartitionLabels(modlab::SectorPartition(inst, o.k));
      }
      EmitGraph(inst.graph, o.out, o.sidecar, meta);
    };
  });

  CLI::App* sbm = gen->add_subcommand("sbm", "Balanced stochastic block model");
  common(sbm, true);
  sbm->add_option("-n", o.n, "Vertices")->capture_default_str();
  sbm->add_option("-k", o.k, "Blocks")->capture_default_str();
  sbm->add_option("-p", o.p, "Within-block probability")->capture_default_str();
  sbm->add_option("-q", o.q, "Across-block probability")->capture_default_str();
  sbm->callback([&] {
    action = [&] {
      const modlab::SbmInstance inst = modlab::SbmBalanced(o.n, o.k, o.p, o.q, o.seed);
      EmitGraph(inst.graph, o.out, o.sidecar,
                {{"model", "sbm"},
                 {"n", o.n},
                 {"k", o.k},
                 {"p", o.p},
                 {"q", o.q},
                 {"seed", o.seed},
                 {"planted", PartitionLabels(inst.planted)},
                 {"block", inst.block}});
    };
  });

  CLI::App* general = gen->add_subcommand("sbm-general", "Block model with a full probability matrix");
  common(general, true);
  general->add_option("-n", o.n, "Vertices")->capture_default_str();
  general->add_option("--pi", o.pi, "Block proportions")->required();
  general->add_option("--matrix", o.matrix, "Symmetric k x k probability matrix, row-major")
      ->required();
  general->add_option("--rho", o.rho, "Density scale")->capture_default_str();
  general->callback([&] {
    action = [&] {
      const std::size_t k = o.pi.size();
      if (o.matrix.size() != k * k) {
        throw modlab::ValidationError("--matrix needs " + std::to_string(k * k) + " entries");
      }
      std::vector<std::vector<double>> p(k, std::vector<double>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) p[i][j] = o.matrix[i * k + j];
      }
      const modlab::SbmInstance inst = modlab::SbmGeneral(o.n, o.pi, p, o.rho, o.seed);
      EmitGraph(inst.graph, o.out, o.sidecar,
                {{"model", "sbm-general"},
                 {"n", o.n},
                 {"pi", o.pi},
                 {"matrix", p},
                 {"rho", o.rho},
                 {"seed", o.seed},
                 {"planted", PartitionLabels(inst.planted)},
                 {"block", inst.block}});
    };
  });

  CLI::App* wheels = gen->add_subcommand("wheels", "Two disjoint wheels with k rim vertices each");
  common(wheels, false);
  wheels->add_option("-k", o.k, "Rim length")->capture_default_str();
  wheels->callback([&] {
    action = [&] {
      EmitGraph(modlab::WheelsGraph(o.k), o.out, o.sidecar, {{"model", "wheels"}, {"k", o.k}});
    };
  });

  CLI::App* complete = gen->add_subcommand("complete", "Complete graph K_n");
  common(complete, false);
  complete->add_option("-n", o.n, "Vertices")->capture_default_str();
  complete->callback([&] {
    action = [&] {
      EmitGraph(modlab::CompleteGraph(o.n), o.out, o.sidecar, {{"model", "complete"}, {"n", o.n}});
    };
  });

  CLI::App* cycle = gen->add_subcommand("cycle", "Cycle C_n");
  common(cycle, false);
  cycle->add_option("-n", o.n, "Vertices")->capture_default_str();
  cycle->callback([&] {
    action = [&] {
      EmitGraph(modlab::CycleGraph(o.n), o.out, o.sidecar, {{"model", "cycle"}, {"n", o.n}});
    };
  });
}

struct RunOptions {
  std::string graph;
  std::string other;
  std::string partition;
  std::string out;
  std::string method = "local";
  std::string bound = "spectral";
  std::string subgraph;
  std::string spec;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t k = 2;
  std::size_t b = 2;
  std::size_t cap = 0;
  std::size_t repeats = 64;
  std::size_t sweeps = 100;
  std::size_t threads = 0;
  double p = 0.5;
  double eps = 0.2;
  std::optional<double> eta;
  bool connected = false;
};

Partition StartPartition(const RunOptions& o, const Graph& g) {
  if (o.partition.empty()) {
    throw modlab::ValidationError("--partition is required for this method");
  }
  return modlab::LoadPartition(o.partition, g.num_vertices());
}

void AddAnalysis(CLI::App& app, RunOptions& o, std::function<void()>& action) {
  CLI::App* score = app.add_subcommand("score", "Modularity of a partition");
  score->add_option("--graph", o.graph, "Edge-list file")->required();
  score->add_option("--partition", o.partition, "Partition file")->required();
  score->callback([&] {
    action = [&] {
      const Graph g = modlab::LoadEdgeList(o.graph);
      const Partition a = modlab::LoadPartition(o.partition, g.num_vertices());
      Json j = ScoreJson(modlab::ModularityScore(g, a));
      j["parts"] = a.num_parts();
      PrintJson(j);
    };
  });

  CLI::App* opt = app.add_subcommand("optimize", "Search for a high-modularity partition");
  opt->add_option("--graph", o.graph, "Edge-list file")->required();
  opt->add_option("--method", o.method, "exact, swap, local, merge-k or fatten")
      ->check(CLI::IsMember({"exact", "swap", "local", "merge-k", "fatten"}))
      ->capture_default_str();
  opt->add_option("--seed", o.seed, "Seed for local and merge-k")->capture_default_str();
  opt->add_option("--partition", o.partition,
                  "Start partition (required for merge-k and fatten; optional for local)");
  opt->add_option("-k", o.k, "Target number of parts for merge-k")->capture_default_str();
  opt->add_option("--repeats", o.repeats, "Random label draws for merge-k")->capture_default_str();
  opt->add_option("--sweeps", o.sweeps, "Sweep limit for local")->capture_default_str();
  opt->add_option("--cap", o.cap, "Vertex cap for exact (default 12)");
  opt->add_flag("--connected", o.connected, "Exact: only partitions with connected parts");
  opt->add_option("--eps", o.eps, "Fatten: eta defaults to eps/4")->capture_default_str();
  opt->add_option("--eta", o.eta, "Fatten: volume fraction every part must reach");
  opt->add_option("-o,--out", o.out, "Write the partition here ('-' for stdout)");
  opt->callback([&] {
    action = [&] {
      const Graph g = modlab::LoadEdgeList(o.graph);
      modlab::SearchResult result;
      if (o.method == "exact") {
        modlab::ExactOptions options;
        if (o.cap != 0) options.cap = o.cap;
        options.connected_parts_only = o.connected;
        result = modlab::ExactModularity(g, options);
      } else if (o.method == "swap") {
        result = modlab::SwapBipartition(g);
      } else if (o.method == "local") {
        result = o.partition.empty()
                     ? modlab::LocalMoving(g, o.seed, o.sweeps)
                     : modlab::LocalMoving(g, StartPartition(o, g), o.seed, o.sweeps);
      } else if (o.method == "merge-k") {
        result = modlab::MergeToK(g, StartPartition(o, g), o.k, o.seed, o.repeats);
      } else {
        result = modlab::GreedyAmalgamate(g, o.eta.value_or(o.eps / 4.0), StartPartition(o, g));
      }
      Json j = ScoreJson(result.score);
      j["method"] = result.method;
      j["parts"] = result.partition.num_parts();
      j["evaluations"] = result.evaluations;
      if (o.out.empty()) j["partition"] = PartitionLabels(result.partition);
      PrintJson(j);
      EmitPartition(result.partition, o.out);
    };
  });

  CLI::App* bound = app.add_subcommand("bound", "Certified upper bound on the maximum modularity");
  bound->add_option("--graph", o.graph, "Edge-list file")->required();
  bound->add_option("kind", o.bound, "spectral, relmod or subset4")
      ->check(CLI::IsMember({"spectral", "relmod", "subset4"}))
      ->capture_default_str();
  bound->add_option("--subgraph", o.subgraph, "Spectral: bound through this subgraph of the graph");
  bound->add_option("--cap", o.cap, "Vertex cap (spectral 2000, relmod and subset4 20)");
  bound->callback([&] {
    action = [&] {
      const Graph g = modlab::LoadEdgeList(o.graph);
      Json j{{"kind", o.bound}};
      if (o.bound == "spectral") {
        const std::size_t cap = o.cap != 0 ? o.cap : modlab::kDefaultEigenCap;
        const Graph h = o.subgraph.empty() ? g : modlab::LoadEdgeList(o.subgraph);
        j["value"] = modlab::SpectralUpperBound(g, h, cap);
      } else if (o.bound == "relmod") {
        const auto result =
            modlab::MaxRelativeModularity(g, o.cap != 0 ? o.cap : modlab::kDefaultSubsetCap);
        j["value"] = result.value;
        j["subset"] = result.subset;
      } else {
        j["value"] =
            modlab::SubsetBipartitionBound(g, o.cap != 0 ? o.cap : modlab::kDefaultSubsetCap);
      }
      PrintJson(j);
    };
  });

  CLI::App* perc = app.add_subcommand("percolate", "Keep each edge independently with probability p");
  perc->add_option("--graph", o.graph, "Edge-list file")->required();
  perc->add_option("-p", o.p, "Retention probability")->capture_default_str();
  perc->add_option("--seed", o.seed, "Random seed")->required();
  perc->add_option("-o,--out", o.out, "Output edge list (stdout if omitted)");
  perc->callback([&] {
    action = [&] {
      const Graph g = modlab::LoadEdgeList(o.graph);
      EmitGraph(modlab::Percolate(g, o.p, o.seed), o.out, "",
                {{"operation", "percolate"}, {"source", o.graph}, {"p", o.p}, {"seed", o.seed}});
    };
  });

  CLI::App* sample = app.add_subcommand("sample-vertices", "Subgraph induced on k random vertices");
  sample->add_option("--graph", o.graph, "Edge-list file")->required();
  sample->add_option("-k", o.k, "Sample size")->required();
  sample->add_option("--seed", o.seed, "Random seed")->required();
  sample->add_option("-o,--out", o.out, "Output edge list (stdout if omitted)");
  sample->callback([&] {
    action = [&] {
      const Graph g = modlab::LoadEdgeList(o.graph);
      const modlab::VertexSampleResult result = modlab::VertexSample(g, o.k, o.seed);
      EmitGraph(result.graph, o.out, "",
                {{"operation", "sample-vertices"},
                 {"source", o.graph},
                 {"k", o.k},
                 {"seed", o.seed},
                 {"mapping", result.mapping}});
    };
  });

  CLI::App* cut = app.add_subcommand("cutdist", "Cut distance between two graphs on the same vertices");
  cut->add_option("--graph", o.graph, "First edge-list file")->required();
  cut->add_option("--other", o.other, "Second edge-list file")->required();
  cut->add_option("--cap", o.cap, "Vertex cap (default 12)");
  cut->callback([&] {
    action = [&] {
      const Graph g = modlab::LoadEdgeList(o.graph);
      const Graph h = modlab::LoadEdgeList(o.other);
      PrintJson({{"cut_distance",
                  modlab::CutDistance(g, h, o.cap != 0 ? o.cap : modlab::kDefaultCutDistanceCap)}});
    };
  });

  CLI::App* blow = app.add_subcommand("blowup", "Replace every vertex by b copies");
  blow->add_option("--graph", o.graph, "Edge-list file of a simple graph")->required();
  blow->add_option("-b", o.b, "Copies per vertex")->capture_default_str();
  blow->add_option("-o,--out", o.out, "Output edge list (stdout if omitted)");
  blow->callback([&] {
    action = [&] {
      const Graph g = modlab::LoadEdgeList(o.graph);
      EmitGraph(modlab::BlowUp(g, o.b), o.out, "",
                {{"operation", "blowup"}, {"source", o.graph}, {"b", o.b}});
    };
  });

  std::string names;
  for (const std::string& name : modlab::RegisteredExperiments()) names += "\n  " + name;
  CLI::App* exp = app.add_subcommand(
      "experiment",
      "Run a named experiment from a JSON spec file. Required keys: name, seed. Optional: grid "
      "(key -> number or list; default one point with each experiment's defaults), replicates "
      "(1), output (stdout), format (csv or json), threads (0 = hardware), options. "
      "Registered experiments:" +
          names);
  exp->add_option("--spec", o.spec, "JSON spec file")->required();
  exp->add_option("-o,--out", o.out, "Override the spec file's output path ('-' for stdout)");
  exp->add_option("--format", o.format, "Override the spec file's format")
      ->check(CLI::IsMember({"csv", "json"}));
  exp->add_option("--threads", o.threads, "Override the spec file's thread count");
  exp->callback([&] {
    action = [&] {
      modlab::ExperimentSpec spec = modlab::LoadExperimentSpec(o.spec);
      if (!o.out.empty()) spec.output = o.out;
      if (!o.format.empty()) spec.format = o.format;
      if (o.threads != 0) spec.threads = o.threads;
      const auto records = modlab::RunExperiment(spec);
      if (spec.output.empty() || spec.output == "-") {
        if (spec.format == "json") {
          modlab::EmitJson(records, std::cout);
        } else {
          modlab::EmitCsv(records, std::cout);
        }
      } else {
        modlab::EmitToFile(records, spec.format, spec.output);
      }
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modularity toolkit: generators, exact and heuristic optimisers, bounds, experiments"};
  app.require_subcommand(1);
  std::function<void()> action;
  GenOptions gen_options;
  RunOptions run_options;
  AddGen(app, gen_options, action);
  AddAnalysis(app, run_options, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  try {
    if (action) action();
  } catch (const modlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const modlab::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  std::cout.flush();
  return 0;
}

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

#include "modlab/generators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "modlab/errors.h"
#include "modlab/rng.h"

namespace modlab {
namespace {

void RequireProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0, 1]");
  }
}

// Calls emit(u, v) for each pair u < v kept independently with probability
// p, in colexicographic order (by v, then u).
template <typename Emit>
void SkipPairs(std::size_t n, double p, Rng& rng, Emit emit) {
  if (p <= 0.0 || n < 2) return;
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < nn) {
    const std::uint64_t skip = rng.Geometric(p);
    if (skip >= static_cast<std::uint64_t>(nn) * static_cast<std::uint64_t>(nn)) return;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) emit(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
}

std::pair<Vertex, Vertex> PairFromIndex(std::uint64_t index) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (v * (v - 1) / 2 > index) --v;
  while ((v + 1) * v / 2 <= index) ++v;
  return {static_cast<Vertex>(index - v * (v - 1) / 2), static_cast<Vertex>(v)};
}

// Floyd's algorithm: a uniform `count`-subset of {0..total-1}, sorted.
std::vector<std::uint64_t> SampleIndices(std::uint64_t total, std::uint64_t count, Rng& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count * 2);
  for (std::uint64_t j = total - count; j < total; ++j) {
    const std::uint64_t t = rng.UniformInt(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> sorted(chosen.begin(), chosen.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Graph StubMatching(std::size_t n, std::size_t r, Rng& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * r);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), r, v);
  rng.Shuffle(stubs);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
  return Graph(n, std::move(edges));
}

void ValidateBlockMatrix(const std::vector<std::vector<double>>& p, std::size_t k) {
  if (p.size() != k) throw ValidationError("block matrix must be k x k");
  for (std::size_t i = 0; i < k; ++i) {
    if (p[i].size() != k) throw ValidationError("block matrix must be k x k");
    for (std::size_t j = 0; j < k; ++j) {
      RequireProbability(p[i][j], "block probability");
      if (p[i][j] != p[j][i]) throw ValidationError("block matrix must be symmetric");
    }
  }
}

void ValidateDistribution(std::span<const double> pi) {
  if (pi.empty()) throw ValidationError("block distribution is empty");
  double total = 0.0;
  for (double x : pi) {
    if (!(x >= 0.0)) throw ValidationError("block probabilities must be nonnegative");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ValidationError("block probabilities must sum to 1");
}

bool StrictlyGreater(double lhs, double rhs) {
  return lhs - rhs > 1e-12 * std::max(std::abs(lhs), std::abs(rhs));
}

}  // namespace

Graph Gnp(std::size_t n, double p, std::uint64_t seed) {
  RequireProbability(p, "p");
  Rng rng(seed);
  std::vector<Edge> edges;
  SkipPairs(n, p, rng, [&](Vertex u, Vertex v) { edges.emplace_back(u, v); });
  return Graph(n, std::move(edges));
}

Graph Gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  if (m > pairs) {
    throw ValidationError("m = " + std::to_string(m) + " exceeds the " + std::to_string(pairs) +
                          " available pairs");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (2 * m <= pairs) {
    for (std::uint64_t index : SampleIndices(pairs, m, rng)) {
      auto [u, v] = PairFromIndex(index);
      edges.emplace_back(u, v);
    }
  } else {
    std::vector<std::uint64_t> excluded = SampleIndices(pairs, pairs - m, rng);
    std::size_t next = 0;
    for (std::uint64_t index = 0; index < pairs; ++index) {
      if (next < excluded.size() && excluded[next] == index) {
        ++next;
        continue;
      }
      auto [u, v] = PairFromIndex(index);
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph ConfigurationModel(std::size_t n, std::size_t r, std::uint64_t seed, ConfigMode mode) {
  if ((n * r) % 2 != 0) throw ValidationError("n * r must be even");
  Rng rng(seed);
  switch (mode) {
    case ConfigMode::kMultigraph:
      return StubMatching(n, r, rng);
    case ConfigMode::kErased:
      return StubMatching(n, r, rng).Simplified();
    case ConfigMode::kRejection: {
      if (r < 1) throw ValidationError("rejection sampling needs r >= 1");
      for (int attempt = 0; attempt < kMaxRejectionTries; ++attempt) {
        Graph g = StubMatching(n, r, rng);
        if (g.is_simple()) return g;
      }
      throw CapExceededError("no simple graph after " + std::to_string(kMaxRejectionTries) +
                             " configuration-model draws");
    }
  }
  throw ValidationError("unknown configuration-model mode");
}

PaTrace PreferentialAttachment(std::size_t n, std::size_t h, std::uint64_t seed) {
  if (n < 1 || h < 1) throw ValidationError("preferential attachment needs n >= 1 and h >= 1");
  Rng rng(seed);
  const std::size_t total = n * h;
  // Every edge endpoint in insertion order, so a uniform entry picks
  // mini-vertex s with probability d_s / 2t.
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * total);
  std::vector<Edge> mini_edges;
  mini_edges.reserve(total);
  mini_edges.emplace_back(0, 0);
  endpoints.push_back(0);
  endpoints.push_back(0);
  for (std::size_t t = 1; t < total; ++t) {
    const auto fresh = static_cast<Vertex>(t);
    const std::uint64_t x = rng.UniformInt(2 * t + 1);
    const Vertex target = x < 2 * t ? endpoints[x] : fresh;
    mini_edges.emplace_back(fresh, target);
    endpoints.push_back(fresh);
    endpoints.push_back(target);
  }
  std::vector<Edge> merged_edges;
  merged_edges.reserve(total);
  const auto block = static_cast<Vertex>(h);
  for (const Edge& e : mini_edges) merged_edges.emplace_back(e.u / block, e.v / block);
  PaTrace trace;
  trace.h = h;
  trace.mini = Graph(total, std::move(mini_edges));
  trace.merged = Graph(n, std::move(merged_edges));
  return trace;
}

double MuMeasure(std::span<const std::uint64_t> indices) {
  std::vector<std::uint64_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.front() == 0) {
    throw ValidationError("mini-vertex indices start at 1");
  }
  double sum = 0.0;
  double ratio = 1.0;  // r_j
  std::uint64_t j = 1;
  for (std::uint64_t target : sorted) {
    for (; j < target; ++j) {
      ratio *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
    }
    sum += ratio;
  }
  return std::sqrt(std::numbers::pi) / 2.0 * sum;
}

SpaInstance Spa(std::size_t n, std::size_t dimension, double a1, double a2, double p,
                std::uint64_t seed) {
  if (dimension < 1 || dimension > 3) throw ValidationError("SPA dimension must be 1, 2 or 3");
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw ValidationError("SPA needs a1 > 0 and a2 > 0");
  if (!(p > 0.0 && p <= 1.0)) throw ValidationError("SPA needs 0 < p <= 1");
  constexpr double kBallConstant[] = {0.0, 2.0, std::numbers::pi, 4.0 * std::numbers::pi / 3.0};
  const Rng root(seed);
  Rng position_rng = root.Split(0);
  Rng coin_rng = root.Split(1);

  SpaInstance spa;
  spa.dimension = dimension;
  spa.a1 = a1;
  spa.a2 = a2;
  spa.p = p;
  spa.positions.reserve(n);
  std::vector<std::int64_t> indegree;
  indegree.reserve(n);
  std::vector<Edge> edges;
  for (std::size_t t = 1; t <= n; ++t) {
    std::vector<double> x(dimension);
    for (double& c : x) c = position_rng.Uniform();
    const auto w = static_cast<Vertex>(t - 1);
    // Existing vertices 0..t-2 form G_{t-1}.
    const double time = static_cast<double>(t - 1);
    for (Vertex v = 0; v + 1 < t; ++v) {
      const double volume = std::min((a1 * static_cast<double>(indegree[v]) + a2) / time, 1.0);
      bool inside = volume >= 1.0;
      if (!inside) {
        const double radius = std::min(
            std::pow(volume / kBallConstant[dimension], 1.0 / static_cast<double>(dimension)),
            0.5);
        double squared = 0.0;
        for (std::size_t axis = 0; axis < dimension; ++axis) {
          double d = std::abs(x[axis] - spa.positions[v][axis]);
          d = std::min(d, 1.0 - d);
          squared += d * d;
        }
        inside = std::sqrt(squared) <= radius;
      }
      if (inside && coin_rng.Bernoulli(p)) {
        Edge arc;
        arc.u = w;
        arc.v = v;
        spa.arcs.push_back(arc);
        edges.emplace_back(w, v);
        ++indegree[v];
      }
    }
    spa.positions.push_back(std::move(x));
    indegree.push_back(0);
  }
  spa.graph = Graph(n, std::move(edges));
  return spa;
}

double HyperbolicDiscRadius(std::size_t n, double nu) {
  return 2.0 * std::log(static_cast<double>(n) / nu);
}

double HyperbolicRadiusQuantile(double u, double alpha, double disc_radius) {
  return std::acosh(1.0 + u * (std::cosh(alpha * disc_radius) - 1.0)) / alpha;
}

HyperbolicInstance Hyperbolic(std::size_t n, double alpha, double nu, std::uint64_t seed,
                              bool poissonised) {
  if (!(alpha > 0.0) || !(nu > 0.0)) throw ValidationError("hyperbolic model needs alpha, nu > 0");
  if (!(static_cast<double>(n) > nu)) throw ValidationError("hyperbolic model needs n > nu");
  const Rng root(seed);
  Rng count_rng = root.Split(0);
  Rng radius_rng = root.Split(1);
  Rng angle_rng = root.Split(2);

  HyperbolicInstance inst;
  inst.alpha = alpha;
  inst.nu = nu;
  inst.poissonised = poissonised;
  inst.disc_radius = HyperbolicDiscRadius(n, nu);
  const std::size_t points =
      poissonised ? static_cast<std::size_t>(count_rng.Poisson(static_cast<double>(n))) : n;
  inst.radius.resize(points);
  inst.angle.resize(points);
  for (double& r : inst.radius) r = HyperbolicRadiusQuantile(radius_rng.Uniform(), alpha, inst.disc_radius);
  for (double& theta : inst.angle) theta = 2.0 * std::numbers::pi * angle_rng.UniformOpenLeft();

  std::vector<double> ch(points), sh(points), cs(points), sn(points);
  for (std::size_t i = 0; i < points; ++i) {
    ch[i] = std::cosh(inst.radius[i]);
    sh[i] = std::sinh(inst.radius[i]);
    cs[i] = std::cos(inst.angle[i]);
    sn[i] = std::sin(inst.angle[i]);
  }
  const double limit = std::cosh(inst.disc_radius);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = i + 1; j < points; ++j) {
      const double cos_delta = cs[i] * cs[j] + sn[i] * sn[j];
      if (ch[i] * ch[j] - sh[i] * sh[j] * cos_delta <= limit) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  inst.graph = Graph(points, std::move(edges));
  return inst;
}

Partition SectorPartition(std::span<const double> angles, std::size_t k) {
  if (k < 2) throw ValidationError("sector partition needs k >= 2");
  std::vector<std::int64_t> labels(angles.size());
  const double scale = static_cast<double>(k) / (2.0 * std::numbers::pi);
  for (std::size_t v = 0; v < angles.size(); ++v) {
    auto sector = static_cast<std::int64_t>(std::ceil(angles[v] * scale));
    labels[v] = std::clamp<std::int64_t>(sector, 1, static_cast<std::int64_t>(k));
  }
  return Partition::FromLabels(std::span<const std::int64_t>(labels));
}

Partition SectorPartition(const HyperbolicInstance& instance, std::size_t k) {
  return SectorPartition(instance.angle, k);
}

SbmInstance SbmBalanced(std::size_t n, std::size_t k, double p, double q, std::uint64_t seed) {
  if (k < 2) throw ValidationError("balanced block model needs k >= 2");
  RequireProbability(p, "p");
  RequireProbability(q, "q");
  if (q > p) throw ValidationError("balanced block model needs q <= p");
  const Rng root(seed);
  Rng label_rng = root.Split(0);
  Rng pair_rng = root.Split(1);
  Rng thin_rng = root.Split(2);

  SbmInstance sbm;
  sbm.block.resize(n);
  for (std::uint32_t& b : sbm.block) b = static_cast<std::uint32_t>(label_rng.UniformInt(k));
  const double keep_cross = p > 0.0 ? q / p : 0.0;
  std::vector<Edge> edges;
  SkipPairs(n, p, pair_rng, [&](Vertex u, Vertex v) {
    if (sbm.block[u] == sbm.block[v] || thin_rng.Bernoulli(keep_cross)) edges.emplace_back(u, v);
  });
  sbm.graph = Graph(n, std::move(edges));
  sbm.planted = Partition::FromLabels(std::span<const std::uint32_t>(sbm.block));
  return sbm;
}

SbmInstance SbmGeneral(std::size_t n, std::span<const double> pi,
                       const std::vector<std::vector<double>>& p, double rho, std::uint64_t seed) {
  ValidateDistribution(pi);
  const std::size_t k = pi.size();
  ValidateBlockMatrix(p, k);
  if (!(rho > 0.0 && rho <= 1.0)) throw ValidationError("rho must lie in (0, 1]");
  double p_max = 0.0;
  for (const auto& row : p) p_max = std::max(p_max, *std::max_element(row.begin(), row.end()));
  const double rate = rho * p_max;

  const Rng root(seed);
  Rng label_rng = root.Split(0);
  Rng pair_rng = root.Split(1);
  Rng thin_rng = root.Split(2);
  Rng loop_rng = root.Split(3);

  std::vector<double> cumulative(k);
  double running = 0.0;
  for (std::size_t i = 0; i < k; ++i) cumulative[i] = running += pi[i];
  SbmInstance sbm;
  sbm.block.resize(n);
  for (std::uint32_t& b : sbm.block) {
    const double u = label_rng.Uniform() * running;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    b = static_cast<std::uint32_t>(std::min<std::size_t>(it - cumulative.begin(), k - 1));
  }
  std::vector<Edge> edges;
  SkipPairs(n, rate, pair_rng, [&](Vertex u, Vertex v) {
    const double target = rho * p[sbm.block[u]][sbm.block[v]];
    if (thin_rng.Bernoulli(target / rate)) edges.emplace_back(u, v);
  });
  for (Vertex v = 0; v < n; ++v) {
    if (loop_rng.Bernoulli(rho * p[sbm.block[v]][sbm.block[v]])) edges.emplace_back(v, v);
  }
  sbm.graph = Graph(n, std::move(edges));
  sbm.planted = Partition::FromLabels(std::span<const std::uint32_t>(sbm.block));
  return sbm;
}

double PlantedScoreFormula(double p, double q, std::size_t k) {
  if (k < 1) throw ValidationError("k must be at least 1");
  const double kk = static_cast<double>(k);
  const double denominator = p + (kk - 1.0) * q;
  if (denominator == 0.0) throw ValidationError("p + (k-1) q must be positive");
  return (p - q) * (1.0 - 1.0 / kk) / denominator;
}

double FK(std::size_t k) {
  if (k < 2) throw ValidationError("f(k) needs k >= 2");
  if (k == 2) return 0.5;
  const double km1 = static_cast<double>(k - 1);
  return std::sqrt(2.0 * km1 * std::log(km1)) / static_cast<double>(k);
}

ZhaoReport ZhaoCondition(std::span<const double> pi, const std::vector<std::vector<double>>& p,
                         double rho, std::size_t n) {
  ValidateDistribution(pi);
  const std::size_t k = pi.size();
  ValidateBlockMatrix(p, k);
  if (!(rho > 0.0 && rho <= 1.0)) throw ValidationError("rho must lie in (0, 1]");
  if (n < 2) throw ValidationError("expected-value form needs n >= 2");
  std::vector<double> row(k, 0.0);
  ZhaoReport report;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t h = 0; h < k; ++h) row[i] += pi[h] * p[i][h];
    report.p_bar += pi[i] * row[i];
  }
  if (report.p_bar == 0.0) throw ValidationError("average edge probability is zero");

  // Expected counts for the loopless graph.
  const double nn = static_cast<double>(n);
  const double pairs = nn * (nn - 1.0) / 2.0;
  const double expected_edges = pairs * rho * report.p_bar;
  const double expected_total_volume = 2.0 * expected_edges;
  std::vector<double> expected_volume(k);
  for (std::size_t i = 0; i < k; ++i) expected_volume[i] = nn * pi[i] * (nn - 1.0) * rho * row[i];

  report.all_hold = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      ZhaoCheck c;
      c.i = i;
      c.j = j;
      const double share =
          expected_volume[i] * expected_volume[j] / (expected_total_volume * expected_total_volume);
      if (i == j) {
        c.lhs = p[i][i];
        c.rhs = row[i] * row[i] / report.p_bar;
        c.holds = StrictlyGreater(c.lhs, c.rhs);
        c.expected_lhs = pairs * pi[i] * pi[i] * rho * p[i][i] / expected_edges;
        c.expected_rhs = share;
        c.expected_holds = StrictlyGreater(c.expected_lhs, c.expected_rhs);
      } else {
        c.lhs = p[i][j];
        c.rhs = row[i] * row[j] / report.p_bar;
        c.holds = StrictlyGreater(c.rhs, c.lhs);
        c.expected_lhs = 2.0 * pairs * pi[i] * pi[j] * rho * p[i][j] / (2.0 * expected_edges);
        c.expected_rhs = share;
        c.expected_holds = StrictlyGreater(c.expected_rhs, c.expected_lhs);
      }
      report.all_hold = report.all_hold && c.holds;
      report.checks.push_back(c);
    }
  }
  return report;
}

Graph WheelsGraph(std::size_t k) {
  if (k < 3) throw ValidationError("a wheel needs a rim of at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t wheel = 0; wheel < 2; ++wheel) {
    const auto centre = static_cast<Vertex>(wheel * (k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      const auto rim = static_cast<Vertex>(centre + 1 + i);
      const auto next = static_cast<Vertex>(centre + 1 + (i + 1) % k);
      edges.emplace_back(rim, next);
      edges.emplace_back(centre, rim);
    }
  }
  return Graph(2 * k + 2, std::move(edges));
}

}  // namespace modlab

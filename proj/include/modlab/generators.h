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

#ifndef MODLAB_GENERATORS_H_
#define MODLAB_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modlab/graph.h"
#include "modlab/partition.h"

// Random graph generators. Every generator is a pure function of its
// parameters and seed. Where a generator draws from several child streams of
// the seed (see Rng::Split) the stream numbers are listed on the function.

namespace modlab {

// Each of the n(n-1)/2 pairs independently with probability p, by geometric
// skipping over pairs in colexicographic order.
Graph Gnp(std::size_t n, double p, std::uint64_t seed);

// A uniform m-subset of the pairs (Floyd's sampler, or its complement when
// m is more than half of all pairs).
Graph Gnm(std::size_t n, std::uint64_t m, std::uint64_t seed);

enum class ConfigMode {
  kMultigraph,  // uniform matching of the n*r stubs, loops and parallels kept
  kErased,      // loops removed, parallel edges merged
  kRejection,   // resampled until simple, at most kMaxRejectionTries times
};
inline constexpr int kMaxRejectionTries = 1000;

// Random r-regular (multi)graph. Throws ValidationError if n*r is odd and
// CapExceededError if rejection runs out of tries.
Graph ConfigurationModel(std::size_t n, std::size_t r, std::uint64_t seed, ConfigMode mode);

struct PaTrace {
  std::size_t h = 0;
  // Tree-with-loops on the h*n mini-vertices, mini-vertex i labelled i-1.
  Graph mini;
  // Mini-vertices (i-1)h+1 .. ih merged into vertex i-1; h*n edges.
  Graph merged;
};

// Preferential attachment with loops. Mini-vertex 1 starts with a loop; mini
// vertex t+1 joins an existing mini-vertex s with probability d_s/(2t+1) and
// takes a loop with probability 1/(2t+1). Requires n, h >= 1.
PaTrace PreferentialAttachment(std::size_t n, std::size_t h, std::uint64_t seed);

// (sqrt(pi)/2) * sum over j in `indices` of (2j-3)!!/(2j-2)!!, evaluated
// through r_1 = 1, r_{j+1} = r_j (2j-1)/(2j). Duplicate indices count once.
// Throws ValidationError on an index of 0.
double MuMeasure(std::span<const std::uint64_t> indices);

struct SpaInstance {
  std::size_t dimension = 0;
  double a1 = 0.0, a2 = 0.0, p = 0.0;
  // positions[v] has `dimension` coordinates in [0, 1).
  std::vector<std::vector<double>> positions;
  // Directed edges (w, v): the later vertex w landed in the sphere of v.
  std::vector<Edge> arcs;  // stored as {from, to}, not normalised
  Graph graph;             // undirected projection
};

// Spatial preferential attachment on the torus [0,1)^dimension with the L2
// torus metric. The sphere of v at time t has volume
// min((a1 * indegree(v) + a2) / t, 1); below volume 1 its radius solves
// c_m r^m = volume, capped at 1/2, and the ball is closed. Streams: 0
// positions, 1 edge coins.
SpaInstance Spa(std::size_t n, std::size_t dimension, double a1, double a2, double p,
                std::uint64_t seed);

struct HyperbolicInstance {
  double alpha = 0.0, nu = 0.0, disc_radius = 0.0;
  bool poissonised = false;
  std::vector<double> radius;  // in [0, R)
  std::vector<double> angle;   // in (0, 2 pi]
  Graph graph;
};

// R = 2 ln(n / nu).
double HyperbolicDiscRadius(std::size_t n, double nu);
// Inverse of F(r) = (cosh(alpha r) - 1) / (cosh(alpha R) - 1).
double HyperbolicRadiusQuantile(double u, double alpha, double disc_radius);

// Hyperbolic random graph: N = n points, or N ~ Poisson(n) when
// poissonised; vertices adjacent iff within hyperbolic distance R.
// Streams: 0 point count, 1 radii, 2 angles.
HyperbolicInstance Hyperbolic(std::size_t n, double alpha, double nu, std::uint64_t seed,
                              bool poissonised);

// Vertex v goes to sector ceil(angle_v * k / 2 pi); empty sectors are
// dropped. Requires k >= 2.
Partition SectorPartition(std::span<const double> angles, std::size_t k);
Partition SectorPartition(const HyperbolicInstance& instance, std::size_t k);

struct SbmInstance {
  Graph graph;
  Partition planted;
  // Raw block label of every vertex, in 0..k-1; blocks may be empty.
  std::vector<std::uint32_t> block;
};

// Balanced model: labels uniform on k blocks; pairs inside a block with
// probability p, across blocks with q. Loop-free. Streams: 0 labels,
// 1 candidate pairs at rate p, 2 thinning of cross pairs to q.
SbmInstance SbmBalanced(std::size_t n, std::size_t k, double p, double q, std::uint64_t seed);

// General model: labels drawn from `pi`; a pair in blocks (i, j) with
// probability rho * P[i][j]; each vertex gets one loop with probability
// rho * P[i][i]. Streams: 0 labels, 1 candidate pairs at the maximum rate,
// 2 thinning, 3 loops.
SbmInstance SbmGeneral(std::size_t n, std::span<const double> pi,
                       const std::vector<std::vector<double>>& p, double rho, std::uint64_t seed);

// (p - q)(1 - 1/k) / (p + (k-1) q).
double PlantedScoreFormula(double p, double q, std::size_t k);

// f(2) = 1/2, f(k) = sqrt(2(k-1) ln(k-1)) / k for k >= 3.
double FK(std::size_t k);

struct ZhaoCheck {
  std::size_t i = 0, j = 0;  // i == j for the within-block condition
  double lhs = 0.0, rhs = 0.0;
  bool holds = false;
  // Same inequality from expected edge counts and volumes of the loopless
  // graph on n vertices.
  double expected_lhs = 0.0, expected_rhs = 0.0;
  bool expected_holds = false;
};

struct ZhaoReport {
  double p_bar = 0.0;
  std::vector<ZhaoCheck> checks;
  bool all_hold = false;
};

// For each block i: P[i][i] > s_i^2 / p_bar, and for each i < j:
// P[i][j] < s_i s_j / p_bar, where s_i = sum_h pi_h P[i][h] and
// p_bar = sum_ij pi_i pi_j P[i][j]. Strictness uses a relative margin of
// 1e-12. Throws ValidationError if p_bar == 0.
ZhaoReport ZhaoCondition(std::span<const double> pi, const std::vector<std::vector<double>>& p,
                         double rho, std::size_t n);

// Two disjoint wheels, each a k-cycle rim plus a centre joined to every rim
// vertex. Centres are 0 and k+1; rims are 1..k and k+2..2k+1.
Graph WheelsGraph(std::size_t k);

}  // namespace modlab

#endif  // MODLAB_GENERATORS_H_

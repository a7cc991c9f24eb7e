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

#include "modlab/search.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>
#include <utility>

#include "modlab/errors.h"

namespace modlab {
namespace {

SearchResult MakeResult(const Graph& g, Partition p, std::string method,
                        std::uint64_t evaluations) {
  SearchResult result;
  result.score = ModularityScore(g, p);
  result.partition = std::move(p);
  result.method = std::move(method);
  result.evaluations = evaluations;
  return result;
}

void RequireEdges(const Graph& g, const char* what) {
  if (g.num_edges() == 0) throw ValidationError(std::string(what) + " needs at least one edge");
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.

// Restricted-growth enumeration: vertex i joins one of the parts opened by
// vertices 0..i-1 or opens the next one. e(A) and vol(A) are maintained
// incrementally and candidates are compared on the exact integer
// 4m * sum e(A) - sum vol(A)^2.
class RgsSearch {
 public:
  RgsSearch(const Graph& g, std::size_t max_parts)
      : g_(g),
        n_(g.num_vertices()),
        max_parts_(max_parts == 0 ? g.num_vertices() : max_parts),
        four_m_(4 * static_cast<std::int64_t>(g.num_edges())),
        earlier_(n_),
        label_(n_, 0),
        best_label_(n_, 0),
        volume_(n_ + 1, 0),
        counts_(n_ + 1, std::vector<std::int64_t>(n_ + 1, 0)) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) {
        if (u < v) earlier_[v].push_back(u);
      }
    }
  }

  void Run() { Visit(0, 0, 0, 0); }

  std::uint64_t evaluations() const { return evaluations_; }
  const std::vector<std::uint32_t>& best_label() const { return best_label_; }

 private:
  void Visit(std::size_t i, std::size_t parts, std::int64_t inside, std::int64_t squares) {
    if (i == n_) {
      ++evaluations_;
      const std::int64_t value = four_m_ * inside - squares;
      if (!have_best_ || value > best_value_) {
        have_best_ = true;
        best_value_ = value;
        best_label_ = label_;
      }
      return;
    }
    const auto v = static_cast<Vertex>(i);
    std::vector<std::int64_t>& count = counts_[i];
    std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(parts + 1), 0);
    for (Vertex u : earlier_[v]) ++count[label_[u]];
    const std::int64_t d = g_.degree(v);
    const std::int64_t loops = g_.loops(v);
    const std::size_t choices = parts < max_parts_ ? parts + 1 : parts;
    for (std::size_t j = 0; j < choices; ++j) {
      label_[v] = static_cast<std::uint32_t>(j);
      const std::int64_t old = volume_[j];
      volume_[j] = old + d;
      const std::int64_t next_squares = squares + 2 * old * d + d * d;
      Visit(i + 1, j == parts ? parts + 1 : parts, inside + loops + count[j], next_squares);
      volume_[j] = old;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t max_parts_;
  std::int64_t four_m_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<std::uint32_t> label_;
  std::vector<std::uint32_t> best_label_;
  std::vector<std::int64_t> volume_;
  std::vector<std::vector<std::int64_t>> counts_;
  bool have_best_ = false;
  std::int64_t best_value_ = 0;
  std::uint64_t evaluations_ = 0;
};

// Partitions into connected parts: the part of the smallest unassigned
// vertex is chosen among the connected sets containing it, then the rest is
// partitioned recursively.
class ConnectedSearch {
 public:
  ConnectedSearch(const Graph& g, std::size_t max_parts)
      : g_(g),
        n_(g.num_vertices()),
        max_parts_(max_parts == 0 ? g.num_vertices() : max_parts),
        four_m_(4 * static_cast<std::int64_t>(g.num_edges())),
        neighbors_(n_, 0),
        multiplicity_(n_, std::vector<std::int64_t>(n_, 0)),
        label_(n_, 0),
        best_label_(n_, 0) {
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      neighbors_[e.u] |= Bit(e.v);
      neighbors_[e.v] |= Bit(e.u);
      ++multiplicity_[e.u][e.v];
      ++multiplicity_[e.v][e.u];
    }
  }

  void Run() {
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : Bit(n_) - 1;
    Assign(all, 0, 0, 0);
  }

  std::uint64_t evaluations() const { return evaluations_; }
  const std::vector<std::uint32_t>& best_label() const { return best_label_; }

 private:
  static std::uint64_t Bit(std::size_t v) { return std::uint64_t{1} << v; }

  void Assign(std::uint64_t unassigned, std::size_t parts, std::int64_t inside,
                std::int64_t squares) {
    if (unassigned == 0) {
      ++evaluations_;
      const std::int64_t value = four_m_ * inside - squares;
      if (!have_best_ || value > best_value_) {
        have_best_ = true;
        best_value_ = value;
        best_label_ = label_;
      }
      return;
    }
    const auto v = static_cast<Vertex>(std::countr_zero(unassigned));
    const bool last = parts + 1 == max_parts_;
    Grow(unassigned, Bit(v), neighbors_[v] & unassigned, 0, g_.loops(v), g_.degree(v),
         [&](std::uint64_t set, std::int64_t e, std::int64_t vol) {
           if (last && set != unassigned) return;
           for (std::uint64_t s = set; s != 0; s &= s - 1) {
             label_[std::countr_zero(s)] = static_cast<std::uint32_t>(parts);
           }
           Assign(unassigned & ~set, parts + 1, inside + e, squares + vol * vol);
         });
  }

  // Each connected set T with set <= T <= universe, T avoiding `banned` and
  // reachable through `frontier`, is reported exactly once: the branch on w
  // bans every frontier vertex tried before it.
  template <typename Report>
  void Grow(std::uint64_t universe, std::uint64_t set, std::uint64_t frontier,
            std::uint64_t banned, std::int64_t e, std::int64_t vol, const Report& report) {
    report(set, e, vol);
    std::uint64_t tried = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      std::int64_t added = g_.loops(static_cast<Vertex>(w));
      for (std::uint64_t s = set; s != 0; s &= s - 1) {
        added += multiplicity_[w][std::countr_zero(s)];
      }
      const std::uint64_t next_set = set | Bit(w);
      const std::uint64_t next_banned = banned | tried;
      const std::uint64_t next_frontier =
          (frontier | neighbors_[w]) & universe & ~next_set & ~next_banned;
      Grow(universe, next_set, next_frontier, next_banned, e + added,
           vol + g_.degree(static_cast<Vertex>(w)), report);
      tried |= Bit(w);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t max_parts_;
  std::int64_t four_m_;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::vector<std::int64_t>> multiplicity_;
  std::vector<std::uint32_t> label_;
  std::vector<std::uint32_t> best_label_;
  bool have_best_ = false;
  std::int64_t best_value_ = 0;
  std::uint64_t evaluations_ = 0;
};

// ---------------------------------------------------------------------------
// Fattening helpers.

// Edge counts between distinct parts of a partition.
std::vector<std::unordered_map<std::uint32_t, std::int64_t>> CrossCounts(const Graph& g,
                                                                         const Partition& b) {
  std::vector<std::unordered_map<std::uint32_t, std::int64_t>> cross(b.num_parts());
  for (const Edge& e : g.edges()) {
    const std::uint32_t pu = b.part_of(e.u);
    const std::uint32_t pv = b.part_of(e.v);
    if (pu == pv) continue;
    ++cross[pu][pv];
    ++cross[pv][pu];
  }
  return cross;
}

// Splits `items` (indices into `volume`) into two groups each of volume at
// least `threshold`, or returns false. Tries descending first-fit into the
// lighter side, then an exact subset-sum search.
bool SplitInTwo(const std::vector<std::uint32_t>& items, const std::vector<std::int64_t>& volume,
                double threshold, std::vector<std::uint32_t>* first,
                std::vector<std::uint32_t>* second) {
  std::vector<std::uint32_t> order = items;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return volume[x] != volume[y] ? volume[x] > volume[y] : x < y;
  });
  std::vector<std::uint32_t> side[2];
  std::int64_t load[2] = {0, 0};
  for (std::uint32_t p : order) {
    const int lighter = load[1] < load[0] ? 1 : 0;
    side[lighter].push_back(p);
    load[lighter] += volume[p];
  }
  if (load[0] >= threshold && load[1] >= threshold) {
    *first = std::move(side[0]);
    *second = std::move(side[1]);
    return true;
  }

  std::int64_t total = 0;
  for (std::uint32_t p : items) total += volume[p];
  // reached_by[s] = index of the item that first made sum s reachable.
  constexpr std::int64_t kUnreached = -1;
  std::vector<std::int64_t> reached_by(static_cast<std::size_t>(total) + 1, kUnreached);
  reached_by[0] = static_cast<std::int64_t>(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::int64_t y = volume[items[i]];
    if (y == 0) continue;
    for (std::int64_t s = total; s >= y; --s) {
      if (reached_by[s] == kUnreached && reached_by[s - y] != kUnreached &&
          reached_by[s - y] != static_cast<std::int64_t>(i)) {
        reached_by[s] = static_cast<std::int64_t>(i);
      }
    }
  }
  std::int64_t best_sum = -1;
  for (std::int64_t s = 0; s <= total; ++s) {
    if (reached_by[s] == kUnreached) continue;
    if (s < threshold || total - s < threshold) continue;
    if (best_sum < 0 || std::llabs(2 * s - total) < std::llabs(2 * best_sum - total)) best_sum = s;
  }
  if (best_sum < 0) return false;
  std::vector<char> chosen(items.size(), 0);
  for (std::int64_t s = best_sum; s > 0;) {
    const auto i = static_cast<std::size_t>(reached_by[s]);
    chosen[i] = 1;
    s -= volume[items[i]];
  }
  first->clear();
  second->clear();
  for (std::size_t i = 0; i < items.size(); ++i) (chosen[i] ? first : second)->push_back(items[i]);
  return true;
}

// ---------------------------------------------------------------------------
// Dense bipartition scan helpers.

void ShiftOr(const std::uint64_t* src, std::size_t words, std::size_t shift, std::uint64_t* dst) {
  const std::size_t word_shift = shift / 64;
  const std::size_t bit_shift = shift % 64;
  for (std::size_t i = words; i-- > word_shift;) {
    std::uint64_t x = src[i - word_shift] << bit_shift;
    if (bit_shift != 0 && i - word_shift >= 1) x |= src[i - word_shift - 1] >> (64 - bit_shift);
    dst[i] |= x;
  }
}

}  // namespace

SearchResult ExactModularity(const Graph& g, const ExactOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw ValidationError("exact search needs at least one vertex");
  if (n > options.cap) {
    throw CapExceededError("exact search over " + std::to_string(n) +
                           " vertices exceeds the cap of " + std::to_string(options.cap));
  }
  RequireEdges(g, "exact search");
  if (options.connected_parts_only) {
    if (n > 64) throw CapExceededError("connected-part search needs n <= 64");
    ConnectedSearch search(g, options.max_parts);
    search.Run();
    return MakeResult(g, Partition::FromLabels(search.best_label()), "exact",
                      search.evaluations());
  }
  RgsSearch search(g, options.max_parts);
  search.Run();
  return MakeResult(g, Partition::FromLabels(search.best_label()), "exact", search.evaluations());
}

SearchResult SwapBipartition(const Graph& g) {
  RequireEdges(g, "Swap");
  const std::size_t n = g.num_vertices();
  const std::size_t k = n / 6;
  std::vector<std::uint32_t> side(n);
  for (std::size_t v = 0; v < n; ++v) side[v] = static_cast<std::uint32_t>(v % 2);
  // a_i = 2i and b_i = 2i + 1 for i < 3k; the fixed sets are i >= 2k.
  constexpr int kNone = 0, kA1 = 1, kB1 = 2;
  std::vector<std::uint8_t> fixed(n, kNone);
  for (std::size_t i = 2 * k; i < 3 * k; ++i) {
    fixed[2 * i] = kA1;
    fixed[2 * i + 1] = kB1;
  }
  std::uint64_t swaps_considered = 0;
  for (std::size_t i = 0; i < 2 * k; ++i) {
    const auto a = static_cast<Vertex>(2 * i);
    const auto b = static_cast<Vertex>(2 * i + 1);
    std::int64_t a_to[3] = {0, 0, 0};
    std::int64_t b_to[3] = {0, 0, 0};
    for (Vertex u : g.neighbors(a)) ++a_to[fixed[u]];
    for (Vertex u : g.neighbors(b)) ++b_to[fixed[u]];
    const std::int64_t kept = a_to[kA1] + b_to[kB1];
    const std::int64_t swapped = a_to[kB1] + b_to[kA1];
    ++swaps_considered;
    if (swapped > kept) std::swap(side[a], side[b]);
  }
  return MakeResult(g, Partition::FromLabels(std::span<const std::uint32_t>(side)), "swap",
                    swaps_considered);
}

Partition MergeByRandomLabels(const Partition& a, std::size_t k, Rng& rng) {
  if (k < 2) throw ValidationError("merge needs k >= 2");
  std::vector<std::uint32_t> part_label(a.num_parts());
  for (std::uint32_t& x : part_label) x = static_cast<std::uint32_t>(rng.UniformInt(k));
  std::vector<std::uint32_t> labels(a.num_vertices());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = part_label[a.part_of(static_cast<Vertex>(v))];
  }
  return Partition::FromLabels(std::span<const std::uint32_t>(labels));
}

SearchResult MergeToK(const Graph& g, const Partition& a, std::size_t k, std::uint64_t seed,
                      std::size_t repeats) {
  if (k < 2) throw ValidationError("merge needs k >= 2");
  if (a.num_parts() <= k) return MakeResult(g, a, "merge-k", 0);
  if (repeats == 0) throw ValidationError("merge needs at least one repeat");
  Rng rng(seed);
  SearchResult best;
  for (std::size_t r = 0; r < repeats; ++r) {
    Partition merged = MergeByRandomLabels(a, k, rng);
    ModularityBreakdown score = ModularityScore(g, merged);
    if (r == 0 || score.q > best.score.q) {
      best.partition = std::move(merged);
      best.score = score;
    }
  }
  best.method = "merge-k";
  best.evaluations = repeats;
  return best;
}

SearchResult GreedyAmalgamate(const Graph& g, double eta, const Partition& b) {
  RequireEdges(g, "fattening");
  if (!(eta > 0.0 && eta <= 1.0)) throw ValidationError("eta must lie in (0, 1]");
  if (b.num_vertices() != g.num_vertices()) {
    throw ValidationError("partition and graph disagree on the vertex count");
  }
  const std::int64_t two_m = g.total_volume();
  const double threshold = eta * static_cast<double>(two_m);
  const std::size_t num_parts = b.num_parts();
  const std::vector<std::int64_t> volume = b.part_volumes(g);

  std::vector<std::uint32_t> light;
  for (std::uint32_t p = 0; p < num_parts; ++p) {
    if (static_cast<double>(volume[p]) < threshold) light.push_back(p);
  }
  if (light.empty()) return MakeResult(g, b, "fatten", 0);

  const auto cross = CrossCounts(g, b);
  std::uint64_t evaluations = 0;

  // Groups of parts; heavy parts are singleton groups.
  std::vector<std::vector<std::uint32_t>> groups;
  std::vector<std::int64_t> group_volume;
  std::vector<char> group_is_bin;
  for (std::uint32_t p = 0; p < num_parts; ++p) {
    if (static_cast<double>(volume[p]) >= threshold) {
      groups.push_back({p});
      group_volume.push_back(volume[p]);
      group_is_bin.push_back(0);
    }
  }

  std::sort(light.begin(), light.end(), [&](std::uint32_t x, std::uint32_t y) {
    return volume[x] != volume[y] ? volume[x] < volume[y] : x < y;
  });
  std::vector<char> pending(num_parts, 0);
  for (std::uint32_t p : light) pending[p] = 1;
  std::size_t remaining = light.size();
  std::size_t next_seed = 0;
  std::vector<std::int64_t> bin_cross(num_parts, 0);
  std::vector<std::uint32_t> leftover;
  std::int64_t leftover_volume = 0;

  while (remaining > 0) {
    std::vector<std::uint32_t> bin;
    std::int64_t bin_volume = 0;
    std::fill(bin_cross.begin(), bin_cross.end(), 0);
    auto add = [&](std::uint32_t p) {
      bin.push_back(p);
      bin_volume += volume[p];
      pending[p] = 0;
      --remaining;
      for (const auto& [q, count] : cross[p]) bin_cross[q] += count;
    };
    while (!pending[light[next_seed]]) ++next_seed;
    add(light[next_seed]);
    while (static_cast<double>(bin_volume) < threshold && remaining > 0) {
      // Loss of merging p, times 2m^2: vol(bin) vol(p) - 2m e(bin, p).
      std::uint32_t best = 0;
      std::int64_t best_loss = std::numeric_limits<std::int64_t>::max();
      for (std::uint32_t p : light) {
        if (!pending[p]) continue;
        ++evaluations;
        const std::int64_t loss = bin_volume * volume[p] - two_m * bin_cross[p];
        if (loss < best_loss || (loss == best_loss && p < best)) {
          best_loss = loss;
          best = p;
        }
      }
      add(best);
    }
    if (static_cast<double>(bin_volume) >= threshold) {
      groups.push_back(std::move(bin));
      group_volume.push_back(bin_volume);
      group_is_bin.push_back(1);
    } else {
      leftover = std::move(bin);
      leftover_volume = bin_volume;
    }
  }

  if (!leftover.empty()) {
    std::vector<std::int64_t> group_of(num_parts, -1);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::uint32_t p : groups[i]) group_of[p] = static_cast<std::int64_t>(i);
    }
    std::vector<std::int64_t> to_group(groups.size(), 0);
    for (std::uint32_t p : leftover) {
      for (const auto& [q, count] : cross[p]) {
        if (group_of[q] >= 0) to_group[group_of[q]] += count;
      }
    }
    auto min_id = [&](std::size_t i) {
      return *std::min_element(groups[i].begin(), groups[i].end());
    };
    std::int64_t best = -1;
    std::int64_t best_loss = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const bool eligible =
          !group_is_bin[i] ||
          static_cast<double>(group_volume[i] + leftover_volume) < 2.0 * threshold;
      if (!eligible) continue;
      ++evaluations;
      const std::int64_t loss = leftover_volume * group_volume[i] - two_m * to_group[i];
      if (best < 0 || loss < best_loss ||
          (loss == best_loss && min_id(i) < min_id(static_cast<std::size_t>(best)))) {
        best = static_cast<std::int64_t>(i);
        best_loss = loss;
      }
    }
    if (best >= 0) {
      auto& target = groups[static_cast<std::size_t>(best)];
      target.insert(target.end(), leftover.begin(), leftover.end());
      group_volume[static_cast<std::size_t>(best)] += leftover_volume;
    } else {
      // Only bins exist and each would exceed 2 eta with the leftover: pool
      // the lightest bin with it and split the pool in two if possible.
      std::size_t lightest = 0;
      for (std::size_t i = 1; i < groups.size(); ++i) {
        if (group_volume[i] < group_volume[lightest] ||
            (group_volume[i] == group_volume[lightest] && min_id(i) < min_id(lightest))) {
          lightest = i;
        }
      }
      std::vector<std::uint32_t> pool = groups[lightest];
      pool.insert(pool.end(), leftover.begin(), leftover.end());
      std::vector<std::uint32_t> first, second;
      if (SplitInTwo(pool, volume, threshold, &first, &second)) {
        groups[lightest] = std::move(first);
        groups.push_back(std::move(second));
      } else {
        groups[lightest] = std::move(pool);
      }
    }
  }

  std::vector<std::uint32_t> group_of_part(num_parts, 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::uint32_t p : groups[i]) group_of_part[p] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::uint32_t> labels(g.num_vertices());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = group_of_part[b.part_of(static_cast<Vertex>(v))];
  }
  return MakeResult(g, Partition::FromLabels(std::span<const std::uint32_t>(labels)), "fatten",
                    evaluations);
}

Partition PercolationTransfer(const Graph& observed, const Partition& a, double eta) {
  return GreedyAmalgamate(observed, eta, a).partition;
}

std::vector<std::vector<Vertex>> CycleDecomposition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) {
      throw ValidationError("graph is not 2-regular: vertex " + std::to_string(v) +
                            " has degree " + std::to_string(g.degree(v)));
    }
  }
  std::vector<std::vector<Vertex>> cycles;
  std::vector<char> seen(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    Vertex current = start;
    while (true) {
      seen[current] = 1;
      cycle.push_back(current);
      bool moved = false;
      for (Vertex u : g.neighbors(current)) {
        if (!seen[u]) {
          current = u;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

SearchResult ArcPartition(const Graph& g, std::size_t k,
                          std::optional<std::span<const Vertex>> cycle_order) {
  if (k < 1) throw ValidationError("arc partition needs k >= 1");
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> labels(n, 0);
  std::uint32_t next_label = 0;
  auto cut = [&](std::span<const Vertex> cycle, std::size_t arcs) {
    const std::size_t length = cycle.size();
    const std::size_t base = length / arcs;
    const std::size_t extra = length % arcs;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < arcs; ++j) {
      const std::size_t size = base + (j < extra ? 1 : 0);
      for (std::size_t t = 0; t < size; ++t) labels[cycle[pos++]] = next_label;
      ++next_label;
    }
  };
  if (cycle_order) {
    const auto order = *cycle_order;
    if (order.size() != n) throw ValidationError("cycle order must list every vertex once");
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
      if (v >= n || seen[v]) throw ValidationError("cycle order must list every vertex once");
      seen[v] = 1;
    }
    if (k > n) throw ValidationError("more arcs than vertices");
    cut(order, k);
  } else {
    for (const auto& cycle : CycleDecomposition(g)) {
      const double share = static_cast<double>(k) * static_cast<double>(cycle.size()) /
                           static_cast<double>(n);
      const auto rounded = static_cast<std::size_t>(std::llround(share));
      cut(cycle, std::clamp<std::size_t>(rounded, 1, cycle.size()));
    }
  }
  return MakeResult(g, Partition::FromLabels(std::span<const std::uint32_t>(labels)), "arc", 1);
}

SearchResult LocalMoving(const Graph& g, std::uint64_t seed, std::size_t max_sweeps) {
  return LocalMoving(g, Partition::Singletons(g.num_vertices()), seed, max_sweeps);
}

SearchResult LocalMoving(const Graph& g, const Partition& start, std::uint64_t seed,
                         std::size_t max_sweeps) {
  RequireEdges(g, "local moving");
  const std::size_t n = g.num_vertices();
  if (start.num_vertices() != n) {
    throw ValidationError("partition and graph disagree on the vertex count");
  }
  const std::int64_t two_m = g.total_volume();
  std::vector<std::uint32_t> label = start.assignment();
  std::vector<std::int64_t> volume(n, 0);
  std::vector<std::int64_t> members(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    volume[label[v]] += g.degree(v);
    ++members[label[v]];
  }
  std::set<std::uint32_t> empty;
  for (std::uint32_t p = 0; p < n; ++p) {
    if (members[p] == 0) empty.insert(p);
  }

  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::vector<std::int64_t> links(n, 0);
  std::vector<std::uint32_t> touched;
  std::uint64_t evaluations = 0;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    rng.Shuffle(order);
    bool moved = false;
    for (Vertex v : order) {
      const std::uint32_t from = label[v];
      const std::int64_t d = g.degree(v);
      touched.clear();
      for (Vertex u : g.neighbors(v)) {
        if (u == v) continue;
        const std::uint32_t p = label[u];
        if (links[p] == 0) touched.push_back(p);
        ++links[p];
      }
      // Gain of moving v to part p, times 2m^2.
      auto gain = [&](std::uint32_t p) {
        return two_m * (links[p] - links[from]) - d * (volume[p] - volume[from] + d);
      };
      std::int64_t best_gain = 0;
      std::uint32_t best = from;
      auto consider = [&](std::uint32_t p) {
        if (p == from) return;
        ++evaluations;
        const std::int64_t value = gain(p);
        if (value > best_gain || (value == best_gain && best != from && p < best)) {
          best_gain = value;
          best = p;
        }
      };
      for (std::uint32_t p : touched) consider(p);
      if (members[from] > 1 && !empty.empty()) consider(*empty.begin());
      for (std::uint32_t p : touched) links[p] = 0;
      links[from] = 0;
      if (best == from) continue;
      moved = true;
      volume[from] -= d;
      --members[from];
      if (members[from] == 0) empty.insert(from);
      if (members[best] == 0) empty.erase(best);
      volume[best] += d;
      ++members[best];
      label[v] = best;
    }
    if (!moved) break;
  }
  return MakeResult(g, Partition::FromLabels(std::span<const std::uint32_t>(label)), "local",
                    evaluations);
}

DenseBipartitionScan ExactBestBipartitionDense(const Graph& g, std::size_t max_component,
                                               std::uint64_t max_states) {
  RequireEdges(g, "dense bipartition scan");
  if (!g.is_simple()) throw ValidationError("dense bipartition scan needs a simple graph");
  const std::size_t n = g.num_vertices();
  const auto nn = static_cast<std::int64_t>(n);
  const auto m = static_cast<std::int64_t>(g.num_edges());
  const std::int64_t mu = nn * (nn - 1) / 2 - m;

  // Complement adjacency.
  std::vector<std::vector<Vertex>> missing(n);
  std::vector<char> adjacent(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) adjacent[u] = 1;
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && !adjacent[u]) missing[v].push_back(u);
    }
    for (Vertex u : g.neighbors(v)) adjacent[u] = 0;
  }

  // Per complement component, the distinct (size, missing degree, missing
  // cut) triples over all of its subsets.
  struct Option {
    std::int64_t size, degree, cut;
    auto operator<=>(const Option&) const = default;
  };
  std::vector<std::vector<Option>> components;
  std::int64_t full = 0;
  std::vector<char> seen(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    if (missing[start].empty()) {
      ++full;
      seen[start] = 1;
      continue;
    }
    std::vector<Vertex> members{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex u : missing[members[i]]) {
        if (!seen[u]) {
          seen[u] = 1;
          members.push_back(u);
        }
      }
    }
    if (members.size() > max_component) {
      throw CapExceededError("complement component of " + std::to_string(members.size()) +
                             " vertices exceeds the cap of " + std::to_string(max_component));
    }
    std::vector<std::int64_t> local_index(n, -1);
    for (std::size_t i = 0; i < members.size(); ++i) local_index[members[i]] = static_cast<std::int64_t>(i);
    std::vector<std::uint32_t> local_neighbors(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex u : missing[members[i]]) local_neighbors[i] |= 1u << local_index[u];
    }
    std::set<Option> options;
    const std::uint32_t subsets = 1u << members.size();
    for (std::uint32_t t = 0; t < subsets; ++t) {
      Option o{std::popcount(t), 0, 0};
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (!(t >> i & 1)) continue;
        o.degree += std::popcount(local_neighbors[i]);
        o.cut += std::popcount(local_neighbors[i] & ~t);
      }
      options.insert(o);
    }
    components.emplace_back(options.begin(), options.end());
  }

  const std::size_t words = (n + 1 + 63) / 64;
  const std::int64_t max_degree = 2 * mu;
  const std::int64_t max_cut = mu;
  const auto table_states = static_cast<std::uint64_t>((max_degree + 1) * (max_cut + 1));
  if (table_states > max_states) {
    throw CapExceededError("dense bipartition scan would need " + std::to_string(table_states) +
                           " states, above the cap of " + std::to_string(max_states));
  }
  auto index = [&](std::int64_t a, std::int64_t c) {
    return static_cast<std::size_t>(a * (max_cut + 1) + c) * words;
  };
  std::vector<std::uint64_t> current(table_states * words, 0);
  std::vector<std::uint64_t> next(table_states * words, 0);
  std::vector<std::pair<std::int64_t, std::int64_t>> active{{0, 0}};
  current[index(0, 0)] = 1;
  std::vector<char> is_active(table_states, 0);
  for (const auto& options : components) {
    std::vector<std::pair<std::int64_t, std::int64_t>> next_active;
    for (const auto& [a, c] : active) {
      const std::uint64_t* src = &current[index(a, c)];
      for (const Option& o : options) {
        const std::int64_t na = a + o.degree;
        const std::int64_t nc = c + o.cut;
        const std::size_t state = static_cast<std::size_t>(na * (max_cut + 1) + nc);
        if (!is_active[state]) {
          is_active[state] = 1;
          next_active.emplace_back(na, nc);
        }
        ShiftOr(src, words, static_cast<std::size_t>(o.size), &next[index(na, nc)]);
      }
    }
    for (const auto& [a, c] : active) std::fill_n(&current[index(a, c)], words, 0);
    for (const auto& [a, c] : next_active) {
      is_active[static_cast<std::size_t>(a * (max_cut + 1) + c)] = 0;
    }
    std::swap(current, next);
    active = std::move(next_active);
  }

  DenseBipartitionScan scan;
  scan.states = active.size();
  bool have_best = false;
  const double two_m_sq = 2.0 * static_cast<double>(m) * static_cast<double>(m);
  std::vector<std::int64_t> prefix(n + 2, 0);
  for (const auto& [a, c] : active) {
    const std::uint64_t* bits = &current[index(a, c)];
    for (std::size_t s = 0; s <= n; ++s) {
      prefix[s + 1] = prefix[s] + static_cast<std::int64_t>(bits[s / 64] >> (s % 64) & 1);
    }
    for (std::int64_t s = 1; s < nn; ++s) {
      // Some s' in [s - full, s] must be reachable from the complement part.
      const std::int64_t lo = std::max<std::int64_t>(0, s - full);
      if (prefix[s + 1] - prefix[lo] == 0) continue;
      const std::int64_t cut = s * (nn - s) - c;
      const std::int64_t vol_s = s * (nn - 1) - a;
      const std::int64_t vol_rest = 2 * m - vol_s;
      const std::int64_t lhs = vol_s * vol_rest;
      const std::int64_t rhs = 2 * m * cut;
      const double q = static_cast<double>(lhs) / two_m_sq - static_cast<double>(cut) / m;
      if (lhs > rhs) scan.positive_found = true;
      if (!have_best || q > scan.best_score) {
        have_best = true;
        scan.best_score = q;
        scan.size = s;
        scan.missing_degree = a;
        scan.missing_cut = c;
      }
    }
  }
  return scan;
}

}  // namespace modlab

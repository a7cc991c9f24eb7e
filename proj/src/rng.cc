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

#include "modlab/rng.h"

#include <cmath>
#include <limits>

namespace modlab {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t SplitSeed(std::uint64_t seed, std::uint64_t stream) {
  return Mix64(Mix64(seed) ^ Mix64(stream + 0x632be59bd9b4e019ULL));
}

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::UniformInt(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t Rng::Geometric(double p) {
  if (p >= 1.0) return 0;
  const double u = UniformOpenLeft();
  const double k = std::floor(std::log(u) / std::log1p(-p));
  if (k >= 9.0e18) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(k);
}

std::uint64_t Rng::Poisson(double mean) {
  if (mean <= 0.0) return 0;
  // Knuth's product method, in chunks so exp(-chunk) stays well above zero.
  constexpr double kChunk = 500.0;
  std::uint64_t count = 0;
  double remaining = mean;
  while (remaining > 0.0) {
    const double step = remaining < kChunk ? remaining : kChunk;
    remaining -= step;
    const double threshold = std::exp(-step);
    double product = UniformOpenLeft();
    while (product > threshold) {
      ++count;
      product *= UniformOpenLeft();
    }
  }
  return count;
}

}  // namespace modlab

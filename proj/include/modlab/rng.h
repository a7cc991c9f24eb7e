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

#ifndef MODLAB_RNG_H_
#define MODLAB_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace modlab {

// SplitMix64 finaliser; used to derive independent child seeds.
std::uint64_t Mix64(std::uint64_t x);

// Seed of child stream `stream` under `seed`. Deterministic and independent of
// the order in which children are requested.
std::uint64_t SplitSeed(std::uint64_t seed, std::uint64_t stream);

// Deterministic random stream. Distributions are implemented here rather than
// taken from <random> so that outputs are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(Mix64(seed)) {}

  std::uint64_t seed() const { return seed_; }
  // Child stream; does not advance this stream.
  Rng Split(std::uint64_t stream) const { return Rng(SplitSeed(seed_, stream)); }

  std::uint64_t Next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on (0, 1].
  double UniformOpenLeft() { return 1.0 - Uniform(); }
  // Uniform on {0, ..., bound-1}; bound >= 1. Unbiased (rejection).
  std::uint64_t UniformInt(std::uint64_t bound);
  bool Bernoulli(double p) { return Uniform() < p; }
  // Number of failures before the first success, p in (0, 1].
  std::uint64_t Geometric(double p);
  std::uint64_t Poisson(double mean);

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[UniformInt(i)]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace modlab

#endif  // MODLAB_RNG_H_

// Copyright 2026 The Morphaug Authors.
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

#ifndef MORPHAUG_RANDOM_H_
#define MORPHAUG_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace morphaug {

// Seed derivation. Stages and shards get their own stream from a single
// top-level seed, so any one of them can be rerun in isolation.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view stage);
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

// 64-bit FNV-1a. Used for config hashes and seed derivation.
std::uint64_t Fnv1a64(std::string_view bytes);

// The one generator family used by the toolkit. The standard distributions
// are implementation-defined, so sampling is done here directly from the
// engine's bits to keep artifacts identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, n). n must be positive.
  std::size_t UniformIndex(std::size_t n);

  // Uniform on [0, 1) with 53 bits of resolution.
  double UniformDouble();

  // True with probability p. p <= 0 never succeeds, p >= 1 always does.
  bool Bernoulli(double p) { return UniformDouble() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace morphaug

#endif  // MORPHAUG_RANDOM_H_

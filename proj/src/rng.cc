// Copyright 2026 The Polybandit Authors.
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

#include "polybandit/rng.h"

#include <cmath>
#include <cstdint>

namespace polybandit {

std::uint64_t MixSeed(std::uint64_t value) {
  std::uint64_t z = value + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::Substream(std::uint64_t base_seed, std::uint64_t run_index,
                   StreamId stream) {
  std::uint64_t seed = MixSeed(base_seed);
  seed = MixSeed(seed ^ run_index);
  seed = MixSeed(seed ^ static_cast<std::uint64_t>(stream));
  return Rng(seed);
}

double Rng::Exponential() { return -std::log1p(-Uniform()); }

std::uint64_t Rng::UniformInt(std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t word;
  do {
    word = engine_();
  } while (word >= limit);
  return word % bound;
}

}  // namespace polybandit

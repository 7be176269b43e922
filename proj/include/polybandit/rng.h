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

#ifndef POLYBANDIT_RNG_H_
#define POLYBANDIT_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace polybandit {

// Name of the only supported generator. Written into configs and reports so
// that documented streams can be regenerated elsewhere.
inline constexpr std::string_view kRngName = "mt19937_64";

// Stream identifiers within one run.
enum class StreamId : std::uint64_t { kEnvironment = 0, kPolicy = 1, kDiagnostics = 2 };

// Seeded 64-bit generator whose derived variates do not depend on the
// standard library's distribution implementations. std::mt19937_64 output is
// fixed by the standard; uniforms, Bernoulli and exponential draws are built
// from its raw words below, so streams are portable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent substream for (base seed, run index, stream id).
  static Rng Substream(std::uint64_t base_seed, std::uint64_t run_index,
                       StreamId stream = StreamId::kEnvironment);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Exp(1) by inverse CDF.
  double Exponential();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformInt(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive substream seeds.
std::uint64_t MixSeed(std::uint64_t value);

}  // namespace polybandit

#endif  // POLYBANDIT_RNG_H_

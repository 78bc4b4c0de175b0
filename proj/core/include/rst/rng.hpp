// Copyright 2026 The Authors.
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

#ifndef RST_RNG_HPP_
#define RST_RNG_HPP_

#include <bit>
#include <cstdint>
#include <random>

namespace rst {

// Identifies the raw generator and the bounded-draw scheme. Recorded in every
// output file so results stay attributable to an exact byte stream. The
// mt19937_64 sequence is pinned by the C++ standard, so the stream is
// identical on every conforming platform; bounded draws use masked rejection
// because std::uniform_int_distribution is implementation-defined.
inline constexpr char kGeneratorId[] = "mt19937_64/rej-v1";

// Version string stamped into output metadata.
inline constexpr char kToolVersion[] = "rst/0.1.0";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from [0, bound). Unbiased: draws are masked to the smallest
  // covering power of two and rejected until one lands below the bound.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = (std::bit_ceil(bound)) - 1;
    for (;;) {
      const std::uint64_t x = engine_() & mask;
      if (x < bound) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; full-avalanche mix used to derive decorrelated seeds.
constexpr std::uint64_t split_mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial seed as a pure function of (master seed, cell index, trial
// index); no shared stream, so trials can run on any worker in any order.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master,
                                          std::uint64_t cell,
                                          std::uint64_t trial) {
  std::uint64_t h = split_mix64(master);
  h = split_mix64(h ^ split_mix64(cell + 0x632be59bd9b4e019ULL));
  return split_mix64(h ^ split_mix64(trial + 0x9e3779b97f4a7c15ULL));
}

}  // namespace rst

#endif  // RST_RNG_HPP_

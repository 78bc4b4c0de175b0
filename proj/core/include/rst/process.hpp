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
//
// Random colored graph process: the N = n(n-1)/2 edges of the complete graph
// arrive in a uniformly random order, and each edge independently receives a
// uniform k-subset of the w_size colors. A trace is the arrival prefix.

#ifndef RST_PROCESS_HPP_
#define RST_PROCESS_HPP_

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rst/rng.hpp"

namespace rst {

using Color = int;

// Sorted set of exactly k distinct colors in [0, w_size).
using ColorSet = std::vector<Color>;

struct TimedEdge {
  int index = 0;  // 1-based arrival position
  int u = 0;
  int v = 0;  // endpoints, 0-based, u < v
  ColorSet colors;

  bool operator==(const TimedEdge&) const = default;
};

struct ProcessConfig {
  int n = 0;
  int k = 0;
  int w_size = 0;            // color universe size; defaults to n - 1
  std::uint64_t seed = 0;
  std::int64_t m_max = 0;    // edges to generate, in [0, n(n-1)/2]

  // Fills w_size = n - 1 and m_max = n(n-1)/2 when passed as -1.
  static ProcessConfig make(int n, int k, std::uint64_t seed,
                            std::int64_t m_max = -1, int w_size = -1);

  std::int64_t pair_count() const {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
  }

  // Throws invalid_config on any violated bound.
  void validate() const;

  bool operator==(const ProcessConfig&) const = default;
};

struct ProcessTrace {
  ProcessConfig config;
  std::string generator = kGeneratorId;  // id of the stream that produced it
  std::vector<TimedEdge> edges;

  bool operator==(const ProcessTrace&) const = default;
};

// Uniform k-subset of {0, ..., w_size - 1} by Floyd's algorithm; exactly k
// bounded draws from rng. Returned sorted ascending.
ColorSet sample_color_set(Rng& rng, int k, int w_size);

// Streams one realization of the process. The edge-order strategy is fixed at
// construction (partial Fisher-Yates over all pairs when m_max > N/4,
// rejection against a seen-set otherwise) and extend() keeps the same stream,
// so edges already emitted never change.
class TraceGenerator {
 public:
  explicit TraceGenerator(const ProcessConfig& config);

  const ProcessConfig& config() const { return config_; }
  std::int64_t emitted() const { return emitted_; }
  bool done() const { return emitted_ == config_.m_max; }

  TimedEdge next();  // pre: !done()

  // Raises m_max (up to the pair count). Emitted edges are unaffected.
  void extend(std::int64_t new_m_max);

 private:
  std::int64_t draw_fresh_pair_();

  ProcessConfig config_;
  Rng rng_;
  bool shuffle_mode_;
  std::int64_t emitted_ = 0;
  std::vector<std::int64_t> pairs_;            // shuffle mode: all pair ids
  std::unordered_set<std::int64_t> seen_;      // rejection mode
};

// Materializes the full trace for a config.
ProcessTrace generate_trace(const ProcessConfig& config);

// Pair id <-> (u, v) with u < v, id = v(v-1)/2 + u.
std::int64_t pair_id(int u, int v);
void pair_from_id(std::int64_t id, int* u, int* v);

}  // namespace rst

#endif  // RST_PROCESS_HPP_

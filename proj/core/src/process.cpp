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

#include "rst/process.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rst/errors.hpp"

namespace rst {

ProcessConfig ProcessConfig::make(int n, int k, std::uint64_t seed,
                                  std::int64_t m_max, int w_size) {
  ProcessConfig c;
  c.n = n;
  c.k = k;
  if (w_size < -1) throw invalid_config("w_size must be -1 (default) or positive");
  if (m_max < -1) throw invalid_config("m_max must be -1 (default) or nonnegative");
  c.w_size = (w_size == -1) ? n - 1 : w_size;
  c.seed = seed;
  c.m_max = (m_max == -1) ? c.pair_count() : m_max;
  c.validate();
  return c;
}

void ProcessConfig::validate() const {
  if (n < 2) throw invalid_config("n must be at least 2");
  if (w_size < 1) throw invalid_config("w_size must be at least 1");
  if (k < 1 || k > w_size) throw invalid_config("k must be in [1, w_size]");
  if (k > n - 1) throw invalid_config("k must be at most n - 1");
  if (m_max < 0 || m_max > pair_count())
    throw invalid_config("m_max must be in [0, n(n-1)/2]");
}

ColorSet sample_color_set(Rng& rng, int k, int w_size) {
  ColorSet s;
  s.reserve(k);
  for (int j = w_size - k; j < w_size; ++j) {
    const Color t = static_cast<Color>(rng.below(static_cast<std::uint64_t>(j) + 1));
    auto it = std::lower_bound(s.begin(), s.end(), t);
    if (it != s.end() && *it == t) {
      s.insert(std::lower_bound(s.begin(), s.end(), j), j);
    } else {
      s.insert(it, t);
    }
  }
  return s;
}

std::int64_t pair_id(int u, int v) {
  return static_cast<std::int64_t>(v) * (v - 1) / 2 + u;
}

void pair_from_id(std::int64_t id, int* u, int* v) {
  // Inverse of id = v(v-1)/2 + u with u < v; sqrt estimate plus an exact fix.
  int vv = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(id))) / 2.0);
  while (static_cast<std::int64_t>(vv) * (vv - 1) / 2 > id) --vv;
  while (static_cast<std::int64_t>(vv + 1) * vv / 2 <= id) ++vv;
  *v = vv;
  *u = static_cast<int>(id - static_cast<std::int64_t>(vv) * (vv - 1) / 2);
}

TraceGenerator::TraceGenerator(const ProcessConfig& config)
    : config_(config), rng_(config.seed) {
  config_.validate();
  const std::int64_t total = config_.pair_count();
  shuffle_mode_ = config_.m_max * 4 > total;
  if (shuffle_mode_) {
    pairs_.resize(total);
    for (std::int64_t i = 0; i < total; ++i) pairs_[i] = i;
  } else {
    seen_.reserve(static_cast<std::size_t>(config_.m_max) * 2 + 1);
  }
}

std::int64_t TraceGenerator::draw_fresh_pair_() {
  const std::int64_t total = config_.pair_count();
  if (shuffle_mode_) {
    // Partial Fisher-Yates step: position emitted_ swaps with a uniform later
    // position, which realizes a uniform permutation prefix.
    const std::int64_t i = emitted_;
    const std::int64_t j =
        i + static_cast<std::int64_t>(rng_.below(static_cast<std::uint64_t>(total - i)));
    std::swap(pairs_[i], pairs_[j]);
    return pairs_[i];
  }
  for (;;) {
    const std::int64_t id =
        static_cast<std::int64_t>(rng_.below(static_cast<std::uint64_t>(total)));
    if (seen_.insert(id).second) return id;
  }
}

TimedEdge TraceGenerator::next() {
  if (done()) throw invalid_config("trace generator exhausted");
  TimedEdge e;
  const std::int64_t id = draw_fresh_pair_();
  pair_from_id(id, &e.u, &e.v);
  e.colors = sample_color_set(rng_, config_.k, config_.w_size);
  e.index = static_cast<int>(++emitted_);
  return e;
}

void TraceGenerator::extend(std::int64_t new_m_max) {
  if (new_m_max < config_.m_max) throw invalid_config("extend cannot shrink m_max");
  if (new_m_max > config_.pair_count())
    throw invalid_config("extend beyond the pair count");
  config_.m_max = new_m_max;
}

ProcessTrace generate_trace(const ProcessConfig& config) {
  TraceGenerator gen(config);
  ProcessTrace trace;
  trace.config = gen.config();
  trace.edges.reserve(static_cast<std::size_t>(config.m_max));
  while (!gen.done()) trace.edges.push_back(gen.next());
  return trace;
}

}  // namespace rst

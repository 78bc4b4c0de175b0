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
// Hitting times along a trace: first connectivity, first full color
// coverage, and component counts of color-restricted prefixes.

#ifndef RST_HITTING_HPP_
#define RST_HITTING_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "rst/disjoint_sets.hpp"
#include "rst/process.hpp"

namespace rst {

// Tracks which colors have appeared.
class CoverageTracker {
 public:
  explicit CoverageTracker(int w_size) : seen_(w_size, false), unseen_(w_size) {}

  void observe(Color c) {
    if (!seen_[c]) {
      seen_[c] = true;
      --unseen_;
    }
  }
  void observe(const ColorSet& colors) {
    for (Color c : colors) observe(c);
  }

  bool seen(Color c) const { return seen_[c]; }
  int unseen() const { return unseen_; }
  bool complete() const { return unseen_ == 0; }

 private:
  std::vector<bool> seen_;
  int unseen_;
};

struct HittingTimes {
  std::optional<std::int64_t> m_connect;     // first m with one component
  std::optional<std::int64_t> m_all_colors;  // first m with every color seen
  std::optional<std::int64_t> m_rainbow;     // first m with a rainbow spanning tree
  std::int64_t trace_len = 0;                // how far the trace was scanned
};

// Smallest m whose prefix is connected. Throws not_reached_error (carrying
// the final component count) if the trace ends disconnected.
std::int64_t first_connect_time(const ProcessTrace& trace);

// Smallest m whose prefix shows every color; nullopt if the trace never does.
std::optional<std::int64_t> first_all_colors_time(const ProcessTrace& trace);

// Component count (isolated vertices included) of the graph formed by the
// first m edges that carry at least one color in `colors`. Fresh union-find
// pass per call; throws invalid_config on out-of-range m or color ids.
int kappa_restricted(const ProcessTrace& trace, std::int64_t m,
                     std::span<const Color> colors);

}  // namespace rst

#endif  // RST_HITTING_HPP_

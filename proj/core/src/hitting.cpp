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

#include "rst/hitting.hpp"

#include "rst/errors.hpp"

namespace rst {

std::int64_t first_connect_time(const ProcessTrace& trace) {
  DisjointSets dsu(trace.config.n);
  if (dsu.components() == 1) return 0;
  for (const TimedEdge& e : trace.edges) {
    dsu.unite(e.u, e.v);
    if (dsu.components() == 1) return e.index;
  }
  throw not_reached_error("trace exhausted while still disconnected",
                          dsu.components());
}

std::optional<std::int64_t> first_all_colors_time(const ProcessTrace& trace) {
  CoverageTracker cover(trace.config.w_size);
  for (const TimedEdge& e : trace.edges) {
    cover.observe(e.colors);
    if (cover.complete()) return e.index;
  }
  return std::nullopt;
}

int kappa_restricted(const ProcessTrace& trace, std::int64_t m,
                     std::span<const Color> colors) {
  if (m < 0 || m > static_cast<std::int64_t>(trace.edges.size()))
    throw invalid_config("m out of range");
  std::vector<bool> in_set(trace.config.w_size, false);
  for (Color c : colors) {
    if (c < 0 || c >= trace.config.w_size)
      throw invalid_config("color id out of range");
    in_set[c] = true;
  }
  DisjointSets dsu(trace.config.n);
  for (std::int64_t i = 0; i < m; ++i) {
    const TimedEdge& e = trace.edges[static_cast<std::size_t>(i)];
    for (Color c : e.colors) {
      if (in_set[c]) {
        dsu.unite(e.u, e.v);
        break;
      }
    }
  }
  return dsu.components();
}

}  // namespace rst

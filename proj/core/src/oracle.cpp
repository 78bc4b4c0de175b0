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

#include "rst/oracle.hpp"

#include <algorithm>
#include <bit>

#include "rst/disjoint_sets.hpp"
#include "rst/errors.hpp"

namespace rst {
namespace {

std::vector<Color> mask_to_colors(std::uint32_t mask) {
  std::vector<Color> out;
  for (Color c = 0; mask; ++c, mask >>= 1)
    if (mask & 1) out.push_back(c);
  return out;
}

}  // namespace

OracleReport edmonds_bruteforce(const ProcessTrace& trace, std::int64_t m) {
  const int n = trace.config.n;
  const int w = trace.config.w_size;
  if (w > 20) throw guard_error("edmonds_bruteforce guard: w_size <= 20");
  if (m < 0 || m > static_cast<std::int64_t>(trace.edges.size()))
    throw invalid_config("m out of range");

  std::vector<std::uint32_t> edge_mask(static_cast<std::size_t>(m));
  std::uint32_t present = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    std::uint32_t mask = 0;
    for (Color c : trace.edges[static_cast<std::size_t>(i)].colors)
      mask |= std::uint32_t{1} << c;
    edge_mask[static_cast<std::size_t>(i)] = mask;
    present |= mask;
  }

  OracleReport report;
  report.minmax_value = 0;
  bool have_worst = false;
  int worst_margin = 0;
  std::uint32_t worst_mask = 0;
  bool first = true;
  for (std::uint32_t I = 0; I < (std::uint32_t{1} << w); ++I) {
    DisjointSets dsu(n);
    for (std::int64_t i = 0; i < m; ++i) {
      if (edge_mask[static_cast<std::size_t>(i)] & I) {
        const TimedEdge& e = trace.edges[static_cast<std::size_t>(i)];
        dsu.unite(e.u, e.v);
      }
    }
    const int kappa = dsu.components();
    const int size_I = std::popcount(I);
    const int outside_present = std::popcount(present & ~I);
    const int value = (n - kappa) + outside_present;
    if (first || value < report.minmax_value) report.minmax_value = value;
    first = false;

    // Worst set by margin n - kappa - |I|; ties to fewer colors, then to the
    // lexicographically smaller color sequence.
    const int margin = n - kappa - size_I;
    bool better = !have_worst || margin < worst_margin;
    if (have_worst && margin == worst_margin) {
      const int worst_size = std::popcount(worst_mask);
      if (size_I != worst_size) {
        better = size_I < worst_size;
      } else {
        better = mask_to_colors(I) < mask_to_colors(worst_mask);
      }
    }
    if (better) {
      have_worst = true;
      worst_margin = margin;
      worst_mask = I;
    }
  }
  report.exists = report.minmax_value >= n - 1;
  report.worst_I = mask_to_colors(worst_mask);
  return report;
}

namespace {

struct BacktrackState {
  int n;
  std::vector<std::pair<int, int>> ends;  // per element
  std::vector<Color> colors;              // per element
  std::vector<std::uint64_t> suffix_colors;  // colors available from idx on
  std::uint64_t used = 0;
  DisjointSets dsu{1};
  int chosen = 0;

  bool search(std::size_t idx) {
    if (chosen == n - 1) return true;
    const int need = n - 1 - chosen;
    if (static_cast<std::size_t>(need) > ends.size() - idx) return false;
    // Colors still reachable must cover the remaining demand.
    if (std::popcount(used | suffix_colors[idx]) < chosen + need) return false;
    // The remaining elements must be able to reconnect what is left.
    {
      DisjointSets probe = dsu;
      for (std::size_t j = idx; j < ends.size(); ++j)
        probe.unite(ends[j].first, ends[j].second);
      if (probe.components() != 1) return false;
    }
    for (std::size_t j = idx; j < ends.size(); ++j) {
      const std::uint64_t bit = std::uint64_t{1} << colors[j];
      if (used & bit) continue;
      if (dsu.same(ends[j].first, ends[j].second)) continue;
      DisjointSets saved = dsu;
      dsu.unite(ends[j].first, ends[j].second);
      used |= bit;
      ++chosen;
      if (search(j + 1)) return true;
      dsu = saved;
      used &= ~bit;
      --chosen;
    }
    return false;
  }
};

}  // namespace

bool backtrack_rainbow_tree(const ProcessTrace& trace, std::int64_t m) {
  if (m < 0 || m > static_cast<std::int64_t>(trace.edges.size()))
    throw invalid_config("m out of range");
  if (trace.config.k * m > 96)
    throw guard_error("backtrack_rainbow_tree guard: k * m <= 96");
  if (trace.config.w_size > 63)
    throw guard_error("backtrack_rainbow_tree guard: w_size <= 63");

  BacktrackState st;
  st.n = trace.config.n;
  st.dsu = DisjointSets(st.n);
  for (std::int64_t i = 0; i < m; ++i) {
    const TimedEdge& e = trace.edges[static_cast<std::size_t>(i)];
    for (Color c : e.colors) {
      st.ends.emplace_back(e.u, e.v);
      st.colors.push_back(c);
    }
  }
  st.suffix_colors.assign(st.ends.size() + 1, 0);
  for (std::size_t j = st.ends.size(); j-- > 0;)
    st.suffix_colors[j] =
        st.suffix_colors[j + 1] | (std::uint64_t{1} << st.colors[j]);
  return st.search(0);
}

namespace {

ProcessTrace hand_trace(int n, int k, std::vector<TimedEdge> edges) {
  ProcessTrace trace;
  trace.config.n = n;
  trace.config.k = k;
  trace.config.w_size = n - 1;
  trace.config.seed = 0;
  trace.config.m_max = static_cast<std::int64_t>(edges.size());
  trace.generator = "manual";
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i].index = static_cast<int>(i) + 1;
  trace.edges = std::move(edges);
  trace.config.validate();
  return trace;
}

// All pairs on [0, n) except the listed ones, each colored `fill`.
std::vector<TimedEdge> fill_remaining(int n, std::vector<TimedEdge> edges,
                                      ColorSet fill) {
  std::vector<std::vector<bool>> taken(n, std::vector<bool>(n, false));
  for (const TimedEdge& e : edges) taken[e.u][e.v] = true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!taken[u][v]) edges.push_back(TimedEdge{0, u, v, fill});
  return edges;
}

}  // namespace

std::vector<Fixture> structured_fixtures() {
  std::vector<Fixture> out;

  // One doubly colored edge whose two colors appear nowhere else: restricted
  // to I = {0, 1} the prefix is a single edge, kappa = 4 > 5 - |I|.
  out.push_back(Fixture{
      "single-double-edge",
      hand_trace(5, 2,
                 fill_remaining(5, {TimedEdge{0, 0, 1, {0, 1}}}, {2, 3})),
      false,
      {0, 1}});

  // Triangle carrying colors {0,1,2} only inside itself: restricted to
  // I = {0,1,2} it spans 3 vertices with 2 of 3 needed edges to spare.
  out.push_back(Fixture{"triangle",
                        hand_trace(6, 2,
                                   fill_remaining(6,
                                                  {TimedEdge{0, 0, 1, {0, 3}},
                                                   TimedEdge{0, 0, 2, {2, 3}},
                                                   TimedEdge{0, 1, 2, {1, 3}}},
                                                  {3, 4})),
                        false,
                        {0, 1, 2}});

  // Path of two doubly colored edges covering colors {0,1,2}.
  out.push_back(Fixture{"double-edge-path",
                        hand_trace(6, 2,
                                   fill_remaining(6,
                                                  {TimedEdge{0, 0, 1, {0, 1}},
                                                   TimedEdge{0, 1, 2, {1, 2}}},
                                                  {3, 4})),
                        false,
                        {0, 1, 2}});

  // Two vertex-disjoint doubly colored edges sharing one color.
  out.push_back(Fixture{"isolated-double-edges",
                        hand_trace(6, 2,
                                   fill_remaining(6,
                                                  {TimedEdge{0, 0, 1, {0, 1}},
                                                   TimedEdge{0, 2, 3, {1, 2}}},
                                                  {3, 4})),
                        false,
                        {0, 1, 2}});

  // Solvable control: a star whose edges admit pairwise distinct colors.
  out.push_back(Fixture{"rainbow-star",
                        hand_trace(5, 2,
                                   {TimedEdge{0, 0, 1, {0, 1}},
                                    TimedEdge{0, 0, 2, {1, 2}},
                                    TimedEdge{0, 0, 3, {2, 3}},
                                    TimedEdge{0, 0, 4, {0, 3}}}),
                        true,
                        {}});

  // Solvable single-color-per-edge path.
  out.push_back(Fixture{"single-color-path",
                        hand_trace(3, 1,
                                   {TimedEdge{0, 0, 1, {0}},
                                    TimedEdge{0, 1, 2, {1}}}),
                        true,
                        {}});

  return out;
}

}  // namespace rst

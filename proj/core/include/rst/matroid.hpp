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
// Rainbow spanning forests by matroid intersection. Ground elements are
// (edge, color) pairs: one parallel element per color of each arrived edge.
// A set is feasible when the underlying edges form a forest (cycle matroid;
// two elements of one edge are a 2-cycle) and colors are pairwise distinct
// (partition matroid). A rainbow spanning tree is a feasible set of size
// n - 1. Augmentation searches the exchange graph for a shortest source-sink
// path; when none exists the reachable set yields a dual certificate: the
// color set I outside the reached colors has kappa(G_I) >= w_size - |I| + 2
// (= n - |I| + 1 in the w_size = n - 1 case), where G_I is the subgraph of
// edges carrying at least one color of I.

#ifndef RST_MATROID_HPP_
#define RST_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rst/process.hpp"

namespace rst {

struct GroundElement {
  int edge_index = 0;  // 1-based arrival index
  Color color = 0;

  bool operator==(const GroundElement&) const = default;
  auto operator<=>(const GroundElement&) const = default;
};

// A rainbow spanning tree: n - 1 elements, edges a spanning tree, colors
// pairwise distinct. Elements sorted by (edge_index, color).
struct TreeCertificate {
  std::vector<GroundElement> elements;
};

// A witness that no rainbow spanning tree exists in the prefix: restricted
// to the colors in `colors`, the prefix spans too few vertices. kappa is
// recomputed from the edges, not taken from search internals.
struct ViolationCertificate {
  std::vector<Color> colors;  // sorted ascending
  int kappa = 0;              // components of G_colors, isolated included
};

using Certificate = std::variant<TreeCertificate, ViolationCertificate>;

// Incremental maximum common independent set over a growing prefix.
//
// Contract: after construction (or load_trace) call try_augment() after every
// insert_edge(); one attempt per arrived edge keeps the selection maximum,
// because one edge can raise the optimum by at most one. Between calls the
// engine holds a reachability fixpoint of the exchange graph, so a failed
// attempt is certified maximal and its dual data feeds certify().
class RainbowForestEngine {
 public:
  RainbowForestEngine(int n, int w_size);

  // Appends one ground element per color of e. Edges must arrive in index
  // order, contiguous from 1.
  void insert_edge(const TimedEdge& e);

  // Bulk path: loads the first m edges without per-edge search state, seeds
  // the selection greedily, then builds the fixpoint. Pre: nothing inserted.
  void load_trace(const ProcessTrace& trace, std::int64_t m);

  // One augmentation step. True iff the selection grew by one element.
  bool try_augment();

  int n() const { return n_; }
  int w_size() const { return w_; }
  std::int64_t inserted_edges() const { return edges_in_; }
  int selected_size() const { return selected_; }
  bool spanning() const { return selected_ == n_ - 1; }

  // True when the last attempt proved the selection maximum (fixpoint with
  // no reachable sink). Trivially true right after a successful augment.
  bool maximal() const { return !sink_reachable_; }

  // Current selection, sorted by (edge_index, color).
  std::vector<GroundElement> selected_elements() const;

  // Colors on the reached side of the terminal exchange graph. Only
  // meaningful when maximal(); certify() takes their complement.
  std::vector<Color> reached_colors() const;

  // Components of the subgraph of inserted edges carrying a color in
  // `colors` (isolated vertices included). Fresh scan, no search state.
  int restricted_components(std::span<const Color> colors) const;

 private:
  struct Element {
    int edge;  // 1-based
    Color color;
    int u, v;
  };

  void grow_pool_(const TimedEdge& e);
  void greedy_seed_();
  void reset_reach_();
  void mark_if_separated_(int id);
  void drain_();
  int exact_bfs_();
  void apply_path_(int sink);

  // Removes forest edge y from the partition `comp`, relabels the smaller
  // side with `next_label` and reports its vertices. `popped` answers
  // whether a forest element is already deleted in this partition.
  template <class PoppedFn, class SideFn>
  void split_walk_(int y, std::vector<int>& comp, int& next_label,
                   PoppedFn popped, SideFn on_side);

  int n_, w_;
  std::int64_t edges_in_ = 0;
  std::vector<Element> pool_;
  std::vector<std::vector<int>> incident_;  // vertex -> pool ids

  // Selection: forest adjacency plus one owner element per used color.
  std::vector<char> in_forest_;                            // per pool id
  std::vector<int> color_owner_;                           // per color
  std::vector<std::vector<std::pair<int, int>>> forest_adj_;  // (nbr, id)
  int selected_ = 0;

  // Persistent reachability between augmentations. comp_ refines the forest
  // components as reached forest edges get deleted; an unselected element is
  // reached exactly when its endpoints sit in different cells.
  std::vector<int> base_comp_;  // forest components at the last reset
  int base_labels_ = 0;
  std::vector<int> comp_;
  int next_label_ = 0;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> reached_mark_;  // per pool id, == epoch_
  std::vector<std::uint32_t> popped_mark_;   // per pool id, == epoch_
  std::vector<int> work_;
  std::size_t work_head_ = 0;
  bool sink_reachable_ = false;

  // Scratch for the exact shortest-path search and side walks.
  std::uint32_t xepoch_ = 0;
  std::vector<std::uint32_t> xseen_mark_, xpopped_mark_;
  std::vector<int> xparent_;
  std::vector<int> xcomp_;
  std::vector<int> xqueue_;
  std::uint32_t vepoch_ = 0;
  std::vector<std::uint32_t> vmark_;
  std::vector<int> side_a_, side_b_;
};

// Ground elements of the first m edges, sorted by (edge_index, color).
std::vector<GroundElement> ground_elements(const ProcessTrace& trace,
                                           std::int64_t m);

// Maximum rainbow forest of the first m edges, built from scratch.
RainbowForestEngine max_rainbow_forest(const ProcessTrace& trace,
                                       std::int64_t m);

// Exact decision with evidence: a TreeCertificate when a rainbow spanning
// tree exists in the first m edges, otherwise a minimized
// ViolationCertificate. Deterministic: identical traces give identical
// certificates.
Certificate certify(const ProcessTrace& trace, std::int64_t m);

// Extracts the certificate from an engine that is at a maximal fixpoint.
Certificate certify(const RainbowForestEngine& engine);

// Smallest m whose prefix admits a rainbow spanning tree; nullopt if the
// whole trace does not. Incremental: one augmentation attempt per edge.
std::optional<std::int64_t> first_rainbow_time(const ProcessTrace& trace);

// Independent validation of a tree certificate against the first m edges of
// the trace. On failure, stores a reason into *why when provided.
bool validate_tree(const TreeCertificate& cert, const ProcessTrace& trace,
                   std::int64_t m, std::string* why = nullptr);

}  // namespace rst

#endif  // RST_MATROID_HPP_

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
// Exchange-graph mechanics. With selection X, the arcs are
//   y -> z (y in X, z not): X - y + z keeps the forest acyclic, i.e. y lies
//                           on the forest path between z's endpoints;
//   z -> y (z not in X):    y owns z's color.
// Sources are elements joining two forest components, sinks are elements of
// unused colors; a shortest source->sink path augments X by one.
//
// Reachability from all sources is maintained incrementally between
// augmentations: deleting each reached forest edge from a copy of the forest
// partition makes "z reached" equivalent to "z's endpoints lie in different
// cells". Deletions split one cell in two; the smaller side is relabeled and
// only its incident elements are rescanned, so a failed attempt costs little
// and the fixpoint doubles as the dual certificate. A successful attempt
// reruns an exact BFS (canonical order, shortest path) and resets.

#include "rst/matroid.hpp"

#include <algorithm>
#include <cassert>

#include "rst/disjoint_sets.hpp"
#include "rst/errors.hpp"

namespace rst {

RainbowForestEngine::RainbowForestEngine(int n, int w_size) : n_(n), w_(w_size) {
  if (n < 2) throw invalid_config("n must be at least 2");
  if (w_size < 1) throw invalid_config("w_size must be at least 1");
  incident_.resize(n_);
  forest_adj_.resize(n_);
  color_owner_.assign(w_, -1);
  base_comp_.resize(n_);
  comp_.resize(n_);
  xcomp_.resize(n_);
  vmark_.assign(n_, 0);
  reset_reach_();
}

void RainbowForestEngine::grow_pool_(const TimedEdge& e) {
  if (e.index != edges_in_ + 1)
    throw invalid_config("edges must be inserted in contiguous index order");
  if (!(0 <= e.u && e.u < e.v && e.v < n_))
    throw invalid_config("edge endpoints out of range");
  if (e.colors.empty()) throw invalid_config("edge must carry a color");
  Color prev = -1;
  for (Color c : e.colors) {
    if (c <= prev || c >= w_) throw invalid_config("bad edge color set");
    prev = c;
  }
  ++edges_in_;
  for (Color c : e.colors) {
    const int id = static_cast<int>(pool_.size());
    pool_.push_back(Element{e.index, c, e.u, e.v});
    in_forest_.push_back(0);
    reached_mark_.push_back(0);
    popped_mark_.push_back(0);
    xseen_mark_.push_back(0);
    xpopped_mark_.push_back(0);
    xparent_.push_back(-1);
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
}

void RainbowForestEngine::insert_edge(const TimedEdge& e) {
  const int first_id = static_cast<int>(pool_.size());
  grow_pool_(e);
  if (sink_reachable_) return;  // augment pending; nothing to refresh
  for (int id = first_id; id < static_cast<int>(pool_.size()); ++id)
    mark_if_separated_(id);
  drain_();
}

void RainbowForestEngine::load_trace(const ProcessTrace& trace, std::int64_t m) {
  if (edges_in_ != 0) throw invalid_config("load_trace requires a fresh engine");
  if (m < 0 || m > static_cast<std::int64_t>(trace.edges.size()))
    throw invalid_config("m out of range");
  for (std::int64_t i = 0; i < m; ++i)
    grow_pool_(trace.edges[static_cast<std::size_t>(i)]);
  greedy_seed_();
  reset_reach_();
}

void RainbowForestEngine::greedy_seed_() {
  DisjointSets dsu(n_);
  for (int id = 0; id < static_cast<int>(pool_.size()); ++id) {
    const Element& el = pool_[id];
    if (color_owner_[el.color] >= 0) continue;
    if (!dsu.unite(el.u, el.v)) continue;
    in_forest_[id] = 1;
    color_owner_[el.color] = id;
    forest_adj_[el.u].emplace_back(el.v, id);
    forest_adj_[el.v].emplace_back(el.u, id);
    ++selected_;
  }
}

void RainbowForestEngine::mark_if_separated_(int id) {
  if (reached_mark_[id] == epoch_) return;
  const Element& el = pool_[id];
  if (comp_[el.u] == comp_[el.v]) return;
  reached_mark_[id] = epoch_;
  work_.push_back(id);
}

void RainbowForestEngine::drain_() {
  while (work_head_ < work_.size()) {
    const int z = work_[work_head_++];
    const int owner = color_owner_[pool_[z].color];
    if (owner < 0) {
      sink_reachable_ = true;  // augmenting path exists; stop refining
      return;
    }
    if (popped_mark_[owner] == epoch_) continue;
    popped_mark_[owner] = epoch_;
    split_walk_(
        owner, comp_, next_label_,
        [&](int id) { return popped_mark_[id] == epoch_; },
        [&](const std::vector<int>& side) {
          for (int v : side)
            for (int id : incident_[v])
              if (!in_forest_[id]) mark_if_separated_(id);
        });
  }
}

template <class PoppedFn, class SideFn>
void RainbowForestEngine::split_walk_(int y, std::vector<int>& comp,
                                      int& next_label, PoppedFn popped,
                                      SideFn on_side) {
  // y is already marked deleted. Walk both sides of its former cell in
  // lockstep; the side that exhausts first is the smaller (ties: side of u),
  // which bounds total relabeling work by O(n log n) per fixpoint.
  const Element& el = pool_[y];
  side_a_.clear();
  side_b_.clear();
  side_a_.push_back(el.u);
  side_b_.push_back(el.v);
  const std::uint32_t mark_a = ++vepoch_;
  const std::uint32_t mark_b = ++vepoch_;
  vmark_[el.u] = mark_a;
  vmark_[el.v] = mark_b;
  std::size_t ia = 0, ib = 0;
  auto expand = [&](std::vector<int>& side, std::size_t i, std::uint32_t mark) {
    const int v = side[i];
    for (const auto& [nbr, id] : forest_adj_[v]) {
      if (popped(id) || vmark_[nbr] == mark) continue;
      vmark_[nbr] = mark;
      side.push_back(nbr);
    }
  };
  std::vector<int>* smaller = nullptr;
  for (;;) {
    if (ia == side_a_.size()) {
      smaller = &side_a_;
      break;
    }
    expand(side_a_, ia++, mark_a);
    if (ib == side_b_.size()) {
      smaller = &side_b_;
      break;
    }
    expand(side_b_, ib++, mark_b);
  }
  const int fresh = next_label++;
  for (int v : *smaller) comp[v] = fresh;
  on_side(*smaller);
}

void RainbowForestEngine::reset_reach_() {
  ++epoch_;
  work_.clear();
  work_head_ = 0;
  sink_reachable_ = false;
  // Forest components, deterministically labeled by lowest contained vertex.
  std::fill(base_comp_.begin(), base_comp_.end(), -1);
  int labels = 0;
  std::vector<int>& stack = side_a_;  // borrowed scratch
  for (int v0 = 0; v0 < n_; ++v0) {
    if (base_comp_[v0] >= 0) continue;
    const int label = labels++;
    stack.clear();
    stack.push_back(v0);
    base_comp_[v0] = label;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [nbr, id] : forest_adj_[v]) {
        if (base_comp_[nbr] < 0) {
          base_comp_[nbr] = label;
          stack.push_back(nbr);
        }
      }
    }
  }
  base_labels_ = labels;
  comp_ = base_comp_;
  next_label_ = labels;
  for (int id = 0; id < static_cast<int>(pool_.size()); ++id)
    if (!in_forest_[id]) mark_if_separated_(id);
  drain_();
}

int RainbowForestEngine::exact_bfs_() {
  // Fresh canonical BFS over the exchange graph; pool order breaks ties, so
  // the found path is the same on every platform. Distances are implicit in
  // the FIFO order; the first sink assigned closes a shortest path.
  ++xepoch_;
  xcomp_ = base_comp_;
  int xlabels = base_labels_;
  xqueue_.clear();
  std::size_t head = 0;
  std::vector<int> batch;
  for (int id = 0; id < static_cast<int>(pool_.size()); ++id) {
    if (in_forest_[id]) continue;
    const Element& el = pool_[id];
    if (xcomp_[el.u] == xcomp_[el.v]) continue;
    xseen_mark_[id] = xepoch_;
    xparent_[id] = -1;
    if (color_owner_[el.color] < 0) return id;  // source that is also a sink
    xqueue_.push_back(id);
  }
  while (head < xqueue_.size()) {
    const int cur = xqueue_[head++];
    if (!in_forest_[cur]) {
      const int owner = color_owner_[pool_[cur].color];
      // cur was screened at assignment, so its color is owned.
      if (xseen_mark_[owner] != xepoch_) {
        xseen_mark_[owner] = xepoch_;
        xparent_[owner] = cur;
        xqueue_.push_back(owner);
      }
      continue;
    }
    xpopped_mark_[cur] = xepoch_;
    batch.clear();
    split_walk_(
        cur, xcomp_, xlabels,
        [&](int id) { return xpopped_mark_[id] == xepoch_; },
        [&](const std::vector<int>& side) {
          for (int v : side) {
            for (int id : incident_[v]) {
              if (in_forest_[id] || xseen_mark_[id] == xepoch_) continue;
              const Element& el = pool_[id];
              if (xcomp_[el.u] != xcomp_[el.v]) batch.push_back(id);
            }
          }
        });
    std::sort(batch.begin(), batch.end());
    for (int id : batch) {
      if (xseen_mark_[id] == xepoch_) continue;
      xseen_mark_[id] = xepoch_;
      xparent_[id] = cur;
      if (color_owner_[pool_[id].color] < 0) return id;
      xqueue_.push_back(id);
    }
  }
  throw internal_error("augment signalled but no exchange path found");
}

void RainbowForestEngine::apply_path_(int sink) {
  // Symmetric difference along the parent chain. The chain alternates
  // unselected/selected (even positions unselected, sink first): selected
  // entries leave, the rest enter, and colors cancel pairwise.
  std::vector<int> chain;
  for (int id = sink; id >= 0; id = xparent_[id]) chain.push_back(id);
  assert(chain.size() % 2 == 1);
  for (std::size_t i = 1; i < chain.size(); i += 2) {
    const int id = chain[i];
    const Element& el = pool_[id];
    assert(in_forest_[id]);
    in_forest_[id] = 0;
    color_owner_[el.color] = -1;
    std::erase_if(forest_adj_[el.u], [&](auto& p) { return p.second == id; });
    std::erase_if(forest_adj_[el.v], [&](auto& p) { return p.second == id; });
    --selected_;
  }
  for (std::size_t i = 0; i < chain.size(); i += 2) {
    const int id = chain[i];
    const Element& el = pool_[id];
    assert(!in_forest_[id] && color_owner_[el.color] == -1);
    in_forest_[id] = 1;
    color_owner_[el.color] = id;
    forest_adj_[el.u].emplace_back(el.v, id);
    forest_adj_[el.v].emplace_back(el.u, id);
    ++selected_;
  }
}

bool RainbowForestEngine::try_augment() {
  if (!sink_reachable_) return false;
  apply_path_(exact_bfs_());
  reset_reach_();
  return true;
}

std::vector<GroundElement> RainbowForestEngine::selected_elements() const {
  std::vector<GroundElement> out;
  out.reserve(static_cast<std::size_t>(selected_));
  for (int id = 0; id < static_cast<int>(pool_.size()); ++id)
    if (in_forest_[id]) out.push_back({pool_[id].edge, pool_[id].color});
  return out;  // pool order is (edge_index, color) order already
}

std::vector<Color> RainbowForestEngine::reached_colors() const {
  if (sink_reachable_)
    throw invalid_config("reached colors are defined only at a maximal fixpoint");
  std::vector<Color> out;
  for (int id = 0; id < static_cast<int>(pool_.size()); ++id)
    if (in_forest_[id] && popped_mark_[id] == epoch_)
      out.push_back(pool_[id].color);
  std::sort(out.begin(), out.end());
  return out;
}

int RainbowForestEngine::restricted_components(
    std::span<const Color> colors) const {
  std::vector<bool> in_set(w_, false);
  for (Color c : colors) {
    if (c < 0 || c >= w_) throw invalid_config("color id out of range");
    in_set[c] = true;
  }
  DisjointSets dsu(n_);
  for (const Element& el : pool_)
    if (in_set[el.color]) dsu.unite(el.u, el.v);
  return dsu.components();
}

std::vector<GroundElement> ground_elements(const ProcessTrace& trace,
                                           std::int64_t m) {
  if (m < 0 || m > static_cast<std::int64_t>(trace.edges.size()))
    throw invalid_config("m out of range");
  std::vector<GroundElement> out;
  out.reserve(static_cast<std::size_t>(m) * trace.config.k);
  for (std::int64_t i = 0; i < m; ++i)
    for (Color c : trace.edges[static_cast<std::size_t>(i)].colors)
      out.push_back({trace.edges[static_cast<std::size_t>(i)].index, c});
  return out;
}

RainbowForestEngine max_rainbow_forest(const ProcessTrace& trace,
                                       std::int64_t m) {
  RainbowForestEngine engine(trace.config.n, trace.config.w_size);
  engine.load_trace(trace, m);
  while (engine.try_augment()) {
  }
  return engine;
}

Certificate certify(const RainbowForestEngine& engine) {
  if (engine.spanning()) return TreeCertificate{engine.selected_elements()};
  if (!engine.maximal())
    throw invalid_config("certify requires a maximal selection");

  const int w = engine.w_size();
  const int needed = w + 2;  // violation: kappa(G_I) + |I| >= w_size + 2
  std::vector<char> in_set(w, 1);
  for (Color c : engine.reached_colors()) in_set[c] = 0;

  auto current = [&]() {
    std::vector<Color> out;
    for (Color c = 0; c < w; ++c)
      if (in_set[c]) out.push_back(c);
    return out;
  };
  std::vector<Color> colors = current();
  int kappa = engine.restricted_components(colors);
  if (kappa + static_cast<int>(colors.size()) < needed)
    throw internal_error("dual cut fails the violation bound");

  // Greedy minimization, ascending colors: drop while the bound persists.
  for (Color c = 0; c < w; ++c) {
    if (!in_set[c]) continue;
    in_set[c] = 0;
    const std::vector<Color> candidate = current();
    const int cand_kappa = engine.restricted_components(candidate);
    if (cand_kappa + static_cast<int>(candidate.size()) >= needed) {
      colors = candidate;
      kappa = cand_kappa;
    } else {
      in_set[c] = 1;
    }
  }
  return ViolationCertificate{std::move(colors), kappa};
}

Certificate certify(const ProcessTrace& trace, std::int64_t m) {
  return certify(max_rainbow_forest(trace, m));
}

std::optional<std::int64_t> first_rainbow_time(const ProcessTrace& trace) {
  RainbowForestEngine engine(trace.config.n, trace.config.w_size);
  for (const TimedEdge& e : trace.edges) {
    engine.insert_edge(e);
    engine.try_augment();
    if (engine.spanning()) return e.index;
  }
  return std::nullopt;
}

bool validate_tree(const TreeCertificate& cert, const ProcessTrace& trace,
                   std::int64_t m, std::string* why) {
  auto reject = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (m < 0 || m > static_cast<std::int64_t>(trace.edges.size()))
    return reject("prefix length outside the trace");
  const int n = trace.config.n;
  if (static_cast<int>(cert.elements.size()) != n - 1)
    return reject("expected n - 1 elements");
  std::vector<bool> color_used(trace.config.w_size, false);
  DisjointSets dsu(n);
  for (const GroundElement& el : cert.elements) {
    if (el.edge_index < 1 || el.edge_index > m)
      return reject("edge index outside the prefix");
    const TimedEdge& e = trace.edges[static_cast<std::size_t>(el.edge_index - 1)];
    if (!std::binary_search(e.colors.begin(), e.colors.end(), el.color))
      return reject("element color not on its edge");
    if (color_used[el.color]) return reject("duplicate color");
    color_used[el.color] = true;
    if (!dsu.unite(e.u, e.v)) return reject("edges contain a cycle");
  }
  if (dsu.components() != 1) return reject("edges do not span");
  return true;
}

}  // namespace rst

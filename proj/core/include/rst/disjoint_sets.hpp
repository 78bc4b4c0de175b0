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

#ifndef RST_DISJOINT_SETS_HPP_
#define RST_DISJOINT_SETS_HPP_

#include <vector>

namespace rst {

// Union-find with union by rank and path compression. Deterministic: on
// equal rank the root of the second argument is attached under the first.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0), components_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int v) {
    int root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      const int next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  // Merges the sets of a and b; false if already joined.
  bool unite(int a, int b) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) {
      parent_[ra] = rb;
    } else if (rank_[rb] < rank_[ra]) {
      parent_[rb] = ra;
    } else {
      parent_[rb] = ra;
      ++rank_[ra];
    }
    --components_;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  // Component count over all n elements, isolated ones included.
  int components() const { return components_; }

  int size() const { return static_cast<int>(parent_.size()); }

  void reset() {
    for (int i = 0; i < size(); ++i) parent_[i] = i;
    rank_.assign(rank_.size(), 0);
    components_ = size();
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

}  // namespace rst

#endif  // RST_DISJOINT_SETS_HPP_

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
// Exhaustive ground truth for desk-scale instances, implemented with no
// shared machinery with the incremental engine so the two can check each
// other.

#ifndef RST_ORACLE_HPP_
#define RST_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rst/process.hpp"

namespace rst {

struct OracleReport {
  bool exists = false;   // rainbow spanning tree in the first m edges
  int minmax_value = 0;  // min over color sets I of (n - kappa(G_I)) +
                         // #(colors outside I present in the prefix)
  std::vector<Color> worst_I;  // minimizer of n - kappa(G_I) - |I|; ties to
                               // smaller size, then lexicographic
};

// Enumerates all 2^w_size color subsets. Guard: w_size <= 20.
OracleReport edmonds_bruteforce(const ProcessTrace& trace, std::int64_t m);

// Depth-first search for an explicit rainbow spanning tree over the
// (edge, color) elements of the prefix. Guard: k * m <= 96.
bool backtrack_rainbow_tree(const ProcessTrace& trace, std::int64_t m);

// Hand-built instances around the minimal blocking structures (a doubly
// colored edge, a triangle, a path of two doubly colored edges, two disjoint
// doubly colored edges) plus solvable controls. Expectations are verified
// against edmonds_bruteforce in the tests.
struct Fixture {
  std::string name;
  ProcessTrace trace;
  bool exists = false;
  std::vector<Color> worst_I;
};

std::vector<Fixture> structured_fixtures();

}  // namespace rst

#endif  // RST_ORACLE_HPP_

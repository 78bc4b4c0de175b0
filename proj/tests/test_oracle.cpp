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

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rst/errors.hpp"
#include "rst/hitting.hpp"
#include "rst/matroid.hpp"
#include "rst/oracle.hpp"
#include "rst/process.hpp"

namespace rst {
namespace {

// Straight-line reimplementation of the min-max scan used as a cross-check:
// iterate subsets in an unrelated order (descending mask), recompute
// everything via kappa_restricted, and apply the documented tie rules.
struct Reference {
  std::int64_t minmax = 0;
  bool exists = false;
  std::vector<Color> worst;
};

Reference reference_scan(const ProcessTrace& trace, std::int64_t m) {
  const int n = trace.config.n;
  const int w = trace.config.w_size;
  std::set<Color> occurring;
  for (std::int64_t i = 0; i < m; ++i) {
    const auto& cs = trace.edges[static_cast<std::size_t>(i)].colors;
    occurring.insert(cs.begin(), cs.end());
  }
  Reference ref;
  bool first = true;
  int best_margin = 0;
  for (std::uint32_t mask = (1u << w); mask-- > 0;) {
    std::vector<Color> colors;
    for (int c = 0; c < w; ++c)
      if (mask & (1u << c)) colors.push_back(c);
    const int kappa = kappa_restricted(trace, m, colors);
    int outside = 0;
    for (const Color c : occurring)
      if (!(mask & (1u << c))) ++outside;
    const std::int64_t value = (n - kappa) + outside;
    if (first || value < ref.minmax) ref.minmax = value;
    const int margin = n - kappa - static_cast<int>(colors.size());
    const bool better =
        first || margin < best_margin ||
        (margin == best_margin &&
         (colors.size() < ref.worst.size() ||
          (colors.size() == ref.worst.size() &&
           std::lexicographical_compare(colors.begin(), colors.end(),
                                        ref.worst.begin(), ref.worst.end()))));
    if (better) {
      best_margin = margin;
      ref.worst = colors;
    }
    first = false;
  }
  ref.exists = ref.minmax >= n - 1;
  return ref;
}

TEST_CASE("the exhaustive report matches an independent subset scan") {
  for (int seed = 0; seed < 25; ++seed) {
    const int n = 3 + seed % 4;
    const int k = 1 + seed % 2;
    const ProcessTrace trace =
        generate_trace(ProcessConfig::make(n, k, 4400 + seed));
    for (std::int64_t m = 0; m <= trace.config.m_max; ++m) {
      const OracleReport report = edmonds_bruteforce(trace, m);
      const Reference ref = reference_scan(trace, m);
      CHECK(report.minmax_value == ref.minmax);
      CHECK(report.exists == ref.exists);
      CHECK(report.worst_I == ref.worst);
      CHECK(report.exists ==
            (report.minmax_value >= trace.config.n - 1));
    }
  }
}

TEST_CASE("structured fixtures behave as documented") {
  const std::vector<Fixture> fixtures = structured_fixtures();
  REQUIRE(fixtures.size() == 6);
  std::set<std::string> names;
  for (const Fixture& fx : fixtures) {
    CAPTURE(fx.name);
    names.insert(fx.name);
    fx.trace.config.validate();
    const std::int64_t m = static_cast<std::int64_t>(fx.trace.edges.size());
    const OracleReport report = edmonds_bruteforce(fx.trace, m);
    CHECK(report.exists == fx.exists);
    CHECK(report.worst_I == fx.worst_I);
    CHECK(backtrack_rainbow_tree(fx.trace, m) == fx.exists);
    CHECK(max_rainbow_forest(fx.trace, m).spanning() == fx.exists);
    if (!fx.exists) {
      // The documented worst set is a genuine refutation.
      const int kappa = kappa_restricted(fx.trace, m, fx.worst_I);
      CHECK(kappa >
            fx.trace.config.n - static_cast<int>(fx.worst_I.size()));
    }
  }
  CHECK(names.size() == 6);  // names are unique handles
}

TEST_CASE("a blocked pair of colors is found on the doubly colored edge") {
  // The smallest blocking shape: one edge carrying both colors of a
  // two-element palette subset that no other edge carries.
  const std::vector<Fixture> fixtures = structured_fixtures();
  const Fixture& fx = fixtures[0];
  REQUIRE(fx.name == "single-double-edge");
  CHECK(fx.worst_I == std::vector<Color>{0, 1});
  const OracleReport report = edmonds_bruteforce(
      fx.trace, static_cast<std::int64_t>(fx.trace.edges.size()));
  // Colors {0,1} appear only on edge (0,1): G_I has n - 2 + 1 components.
  CHECK(kappa_restricted(fx.trace,
                         static_cast<std::int64_t>(fx.trace.edges.size()),
                         report.worst_I) == fx.trace.config.n - 1);
}

TEST_CASE("oracle guards refuse oversized instances") {
  const ProcessTrace big = generate_trace(ProcessConfig::make(30, 2, 0, 20));
  CHECK_THROWS_AS(edmonds_bruteforce(big, 10), guard_error);  // w = 29 > 20
  CHECK(!backtrack_rainbow_tree(big, 10));  // within guards, trivially short

  const ProcessTrace huge = generate_trace(ProcessConfig::make(70, 2, 0, 10));
  CHECK_THROWS_AS(backtrack_rainbow_tree(huge, 10), guard_error);  // w > 63

  const ProcessTrace wide =
      generate_trace(ProcessConfig::make(12, 3, 0, 50, 11));
  CHECK_THROWS_AS(backtrack_rainbow_tree(wide, 50),
                  guard_error);  // k * m = 150 > 96
  CHECK(edmonds_bruteforce(wide, 4).minmax_value >= 0);  // w = 11 is fine
}

TEST_CASE("oracle inputs are validated") {
  const ProcessTrace trace = generate_trace(ProcessConfig::make(5, 2, 3));
  CHECK_THROWS_AS(edmonds_bruteforce(trace, -1), invalid_config);
  CHECK_THROWS_AS(edmonds_bruteforce(trace, trace.config.m_max + 1),
                  invalid_config);
  CHECK_THROWS_AS(backtrack_rainbow_tree(trace, -1), invalid_config);
  CHECK_THROWS_AS(backtrack_rainbow_tree(trace, trace.config.m_max + 1),
                  invalid_config);
}

TEST_CASE("reports are deterministic") {
  const ProcessTrace trace = generate_trace(ProcessConfig::make(6, 2, 77));
  for (std::int64_t m = 0; m <= trace.config.m_max; m += 5) {
    const OracleReport a = edmonds_bruteforce(trace, m);
    const OracleReport b = edmonds_bruteforce(trace, m);
    CHECK(a.exists == b.exists);
    CHECK(a.minmax_value == b.minmax_value);
    CHECK(a.worst_I == b.worst_I);
  }
}

}  // namespace
}  // namespace rst

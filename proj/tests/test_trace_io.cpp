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

#include <cstdio>
#include <string>

#include "doctest.h"
#include "rst/errors.hpp"
#include "rst/process.hpp"
#include "rst/trace_io.hpp"

namespace rst {
namespace {

const char kGolden[] =
    "# colored-trace v1 n=4 k=2 w_size=3 seed=9 generator=mt19937_64/rej-v1\n"
    "1 0 2 0,2\n"
    "2 1 3 1,2\n";

ProcessTrace golden_trace() {
  ProcessTrace t;
  t.config = ProcessConfig::make(4, 2, 9, 2, 3);
  t.edges = {TimedEdge{1, 0, 2, {0, 2}}, TimedEdge{2, 1, 3, {1, 2}}};
  return t;
}

TEST_CASE("formatting matches the canonical layout byte for byte") {
  CHECK(format_trace(golden_trace()) == kGolden);
}

TEST_CASE("parse inverts format exactly") {
  const ProcessTrace t = parse_trace(kGolden);
  CHECK(t == golden_trace());
  for (const std::uint64_t seed : {0ULL, 1ULL, 123456789ULL}) {
    const ProcessTrace org = generate_trace(ProcessConfig::make(9, 3, seed));
    CHECK(parse_trace(format_trace(org)) == org);
  }
}

TEST_CASE("file round trip preserves every byte") {
  const std::string path = "trace_io_roundtrip.tmp";
  const ProcessTrace org = generate_trace(ProcessConfig::make(8, 2, 4));
  write_trace_file(org, path);
  CHECK(read_trace_file(path) == org);
  std::remove(path.c_str());
}

TEST_CASE("malformed inputs are rejected with the offending line") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_trace(text), io_error);
  };
  bad("");                                             // no header
  bad("# colored-trace v2 n=4 k=2 w_size=3 seed=9 "
      "generator=g\n");                                // unknown version
  bad("# colored-trace v1 n=4 k=2 w_size=3 seed=9\n");  // missing field
  bad("# colored-trace v1 n=x k=2 w_size=3 seed=9 generator=g\n");
  bad("# colored-trace v1 n=1 k=2 w_size=3 seed=9 generator=g\n");

  const std::string header =
      "# colored-trace v1 n=4 k=2 w_size=3 seed=9 generator=g\n";
  bad(header + "2 0 2 0,2\n");      // index must equal position
  bad(header + "1 2 0 0,2\n");      // u < v required
  bad(header + "1 0 0 0,2\n");
  bad(header + "1 0 4 0,2\n");      // v out of range
  bad(header + "1 0 2 0\n");        // wrong color count
  bad(header + "1 0 2 2,0\n");      // colors must ascend
  bad(header + "1 0 2 0,0\n");
  bad(header + "1 0 2 0,3\n");      // color out of palette
  bad(header + "1 0 2 0,-1\n");
  bad(header + "1 0 2 0,2 junk\n");
  bad(header + "1 0 2 0,2\n1 0 3 0,1\n");  // duplicate index
  bad(header + "1 0 2 0,2\n2 0 2 0,1\n");  // duplicate pair

  auto reason = [](const std::string& text) {
    try {
      parse_trace(text);
    } catch (const io_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(reason(header + "1 0 2 0,2\n3 0 3 0,1\n").find("line 3") !=
        std::string::npos);
}

TEST_CASE("reading a missing file reports an io error") {
  CHECK_THROWS_AS(read_trace_file("does_not_exist.trace"), io_error);
}

}  // namespace
}  // namespace rst

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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rst/experiments.hpp"
#include "rst/process.hpp"
#include "rst/trace_io.hpp"

namespace rst {
namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// Stderr is silenced unless the caller folds it in via "2>&1".
CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(RST_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

TEST_CASE("simulate emits the trace the library generates") {
  const CliResult r = run_cli("simulate --n 6 --k 2 --seed 3 --m 5");
  CHECK(r.exit_code == 0);
  const ProcessTrace expected =
      generate_trace(ProcessConfig::make(6, 2, 3, 5));
  CHECK(r.out == format_trace(expected));
  CHECK(run_cli("simulate --n 6 --k 2 --seed 3 --m 5").out == r.out);
}

TEST_CASE("simulate writes the same bytes to a file") {
  const std::string path = "cli_sim.trace";
  const CliResult r =
      run_cli("simulate --n 6 --k 2 --seed 3 --m 5 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(slurp_file(path) ==
        run_cli("simulate --n 6 --k 2 --seed 3 --m 5").out);
  std::remove(path.c_str());
}

TEST_CASE("simulate rejects an oversized prefix with a usage error") {
  CHECK(run_cli("simulate --n 6 --k 2 --seed 3 --m 99").exit_code == 2);
  CHECK(run_cli("simulate --n 1 --k 1 --seed 3").exit_code == 2);
}

TEST_CASE("check reports a tree with exit code zero") {
  const std::string path = "cli_check_tree.trace";
  REQUIRE(run_cli("simulate --n 6 --k 3 --seed 11 --out " + path).exit_code ==
          0);
  const CliResult r = run_cli("check " + path);
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("type") == "tree");
  CHECK(doc.at("elements").size() == 5);
  for (const auto& el : doc.at("elements")) {
    CHECK(el.at("edge_index").get<int>() >= 1);
    CHECK(el.at("color").get<int>() >= 0);
  }
  const CliResult pretty = run_cli("check --pretty " + path);
  CHECK(pretty.exit_code == 0);
  CHECK(pretty.out.find("tree") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("check reports a violation with exit code one") {
  const std::string path = "cli_check_violation.trace";
  REQUIRE(run_cli("simulate --n 6 --k 3 --seed 11 --out " + path).exit_code ==
          0);
  const CliResult r = run_cli("check --m 2 " + path);
  CHECK(r.exit_code == 1);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("type") == "violation");
  CHECK(doc.at("kappa").get<int>() >
        doc.at("vertex_bound").get<int>());
  CHECK(doc.at("vertex_bound").get<int>() ==
        6 - static_cast<int>(doc.at("colors").size()));
  std::remove(path.c_str());
}

TEST_CASE("check rejects malformed input with a usage error") {
  const std::string path = "cli_check_bad.trace";
  {
    std::ofstream out(path, std::ios::binary);
    out << "this is not a trace\n";
  }
  CHECK(run_cli("check " + path).exit_code == 2);
  std::remove(path.c_str());
  CHECK(run_cli("check no_such_file.trace").exit_code == 2);
}

TEST_CASE("hitting-times matches the library on the same seed") {
  const CliResult r = run_cli("hitting-times --n 12 --k 2 --seed 7");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  const TrialResult expected = run_trial(12, 2, 7);
  CHECK(doc.at("m_connect").get<std::int64_t>() == *expected.m_connect);
  CHECK(doc.at("m_all_colors").get<std::int64_t>() == *expected.m_all_colors);
  CHECK(doc.at("m_rainbow").get<std::int64_t>() == *expected.m_rainbow);
  CHECK(doc.at("identity_holds").get<bool>() == expected.identity_holds);
  CHECK(doc.at("n") == 12);
  CHECK(doc.at("seed") == 7);
}

TEST_CASE("a two-vertex process hits everything at the first edge") {
  const nlohmann::json doc = nlohmann::json::parse(
      run_cli("hitting-times --n 2 --k 1 --seed 5").out);
  CHECK(doc.at("m_connect") == 1);
  CHECK(doc.at("m_all_colors") == 1);
  CHECK(doc.at("m_rainbow") == 1);
  CHECK(doc.at("identity_holds") == true);
}

TEST_CASE("sweep output files match the library batch byte for byte") {
  SweepSpec spec;
  spec.n_values = {10, 14};
  spec.k = 2;
  spec.c_grid = {-0.5, 0.5};
  spec.events = {Event::kConnectivity, Event::kIdentity};
  spec.trials = 10;
  spec.master_seed = 9;
  const BatchResult batch = run_batch(spec);
  const RunMetadata meta{kToolVersion, kGeneratorId, 9};
  const std::string base = "sweep --n 10,14 --k 2 --c-grid -0.5,0.5 "
                           "--events connectivity,identity --trials 10 "
                           "--seed 9";
  for (const std::string fmt : {"csv", "jsonl"}) {
    const std::string cells_path = "cli_cells." + fmt;
    const std::string trials_path = "cli_cells_trials." + fmt;
    const FileFormat ff =
        fmt == "csv" ? FileFormat::kCsv : FileFormat::kJsonl;
    CHECK(run_cli(base + " --format " + fmt + " --out " + cells_path)
              .exit_code == 0);
    CHECK(slurp_file(cells_path) == format_cells(meta, batch.cells, ff));
    CHECK(slurp_file(trials_path) == format_trials(meta, batch.trials, ff));
    std::remove(cells_path.c_str());
    std::remove(trials_path.c_str());
  }
}

TEST_CASE("sweep worker count never changes the output bytes") {
  const std::string base = "sweep --n 12 --k 2 --c-grid 0 "
                           "--events coverage,rainbow,identity --trials 12 "
                           "--seed 31 --format csv --out ";
  CHECK(run_cli(base + "cli_w1.csv --workers 1").exit_code == 0);
  CHECK(run_cli(base + "cli_w4.csv --workers 4").exit_code == 0);
  CHECK(slurp_file("cli_w1.csv") == slurp_file("cli_w4.csv"));
  CHECK(slurp_file("cli_w1_trials.csv") == slurp_file("cli_w4_trials.csv"));
  for (const char* p :
       {"cli_w1.csv", "cli_w4.csv", "cli_w1_trials.csv", "cli_w4_trials.csv"})
    std::remove(p);
}

TEST_CASE("sweep rejects unknown events and formats") {
  CHECK(run_cli("sweep --n 10 --k 2 --c-grid 0 --events nonsense "
                "--trials 5 --seed 1")
            .exit_code == 2);
  CHECK(run_cli("sweep --n 10 --k 2 --c-grid 0 --events rainbow "
                "--trials 5 --seed 1 --format yaml")
            .exit_code == 2);
  CHECK(run_cli("sweep --n 10 --k 1 --c-grid 0 --events rainbow "
                "--trials 5 --seed 1")
            .exit_code == 2);
}

TEST_CASE("oracle-compare agrees with itself on random instances") {
  const CliResult r =
      run_cli("oracle-compare --n 6 --k 2 --trials 20 --seed 11");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("instance,n,k,m,engine,edmonds,backtrack,selected,minmax,"
                    "agree") != std::string::npos);
  CHECK(r.out.find("false") == std::string::npos);
  CHECK(run_cli("oracle-compare --n 6 --k 2 --trials 20 --seed 11").out ==
        r.out);
}

TEST_CASE("usage errors exit with code two and help with zero") {
  CHECK(run_cli("").exit_code == 2);                  // missing subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);        // unknown subcommand
  CHECK(run_cli("simulate --bogus 3").exit_code == 2);
  CHECK(run_cli("simulate").exit_code == 2);          // required flags absent
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("simulate --help").exit_code == 0);
}

}  // namespace
}  // namespace rst

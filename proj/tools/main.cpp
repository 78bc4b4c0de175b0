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
// Command line front end. Subcommands: simulate (write a process trace),
// check (decide rainbow spanning tree existence in a trace prefix, print a
// certificate), hitting-times (all three hitting times of one seeded run),
// sweep (Monte Carlo estimates against the limit laws), oracle-compare
// (cross-check the incremental engine against exhaustive oracles).
// Exit codes: 0 success or tree, 1 violation or disagreement, 2 usage or
// input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rst/errors.hpp"
#include "rst/experiments.hpp"
#include "rst/matroid.hpp"
#include "rst/oracle.hpp"
#include "rst/process.hpp"
#include "rst/rng.hpp"
#include "rst/trace_io.hpp"

namespace {

using nlohmann::json;

struct SimulateArgs {
  int n = 0;
  int k = 0;
  int w_size = -1;
  std::uint64_t seed = 0;
  std::int64_t m = -1;  // -1: all n(n-1)/2 edges
  std::string out;
};

struct CheckArgs {
  std::string trace_path;
  std::int64_t m = -1;  // -1: whole trace
  bool pretty = false;
};

struct HittingArgs {
  int n = 0;
  int k = 0;
  int w_size = -1;
  std::uint64_t seed = 0;
  bool pretty = false;
};

struct SweepArgs {
  std::vector<int> n_values;
  int k = 2;
  int w_size = -1;
  std::uint64_t seed = 0;
  std::vector<double> c_grid;
  std::vector<std::string> events = {"connectivity", "coverage", "rainbow",
                                     "identity"};
  int trials = 100;
  int workers = 1;
  std::string out;
  std::string format = "csv";
  bool pretty = false;
};

struct OracleArgs {
  int n = 5;
  int k = 2;
  std::uint64_t seed = 0;
  int trials = 100;
  bool pretty = false;
};

int run_simulate(const SimulateArgs& args) {
  rst::ProcessConfig cfg =
      rst::ProcessConfig::make(args.n, args.k, args.seed, args.m, args.w_size);
  const rst::ProcessTrace trace = rst::generate_trace(cfg);
  if (args.out.empty()) {
    std::cout << rst::format_trace(trace);
  } else {
    rst::write_trace_file(trace, args.out);
  }
  return 0;
}

int run_check(const CheckArgs& args) {
  const rst::ProcessTrace trace = rst::read_trace_file(args.trace_path);
  const std::int64_t m =
      args.m < 0 ? static_cast<std::int64_t>(trace.edges.size()) : args.m;
  const rst::Certificate cert = rst::certify(trace, m);
  if (const auto* tree = std::get_if<rst::TreeCertificate>(&cert)) {
    std::string why;
    if (!rst::validate_tree(*tree, trace, m, &why))
      throw rst::internal_error("certificate failed validation: " + why);
    if (args.pretty) {
      std::cout << "rainbow spanning tree within the first " << m
                << " edges:\n";
      for (const rst::GroundElement& el : tree->elements) {
        const rst::TimedEdge& e =
            trace.edges[static_cast<std::size_t>(el.edge_index - 1)];
        std::cout << "  edge " << el.edge_index << " (" << e.u << "," << e.v
                  << ") color " << el.color << "\n";
      }
    } else {
      json j;
      j["type"] = "tree";
      j["m"] = m;
      json elements = json::array();
      for (const rst::GroundElement& el : tree->elements)
        elements.push_back({{"edge_index", el.edge_index},
                            {"color", el.color}});
      j["elements"] = elements;
      std::cout << j.dump() << "\n";
    }
    return 0;
  }
  const auto& violation = std::get<rst::ViolationCertificate>(cert);
  const int bound =
      trace.config.n - static_cast<int>(violation.colors.size());
  if (args.pretty) {
    std::cout << "no rainbow spanning tree within the first " << m
              << " edges\ncolors I = {";
    for (std::size_t i = 0; i < violation.colors.size(); ++i)
      std::cout << (i ? "," : "") << violation.colors[i];
    std::cout << "}; components kappa(G_I) = " << violation.kappa << " > n - |I| = "
              << bound << "\n";
  } else {
    json j;
    j["type"] = "violation";
    j["m"] = m;
    j["colors"] = violation.colors;
    j["kappa"] = violation.kappa;
    j["vertex_bound"] = bound;
    std::cout << j.dump() << "\n";
  }
  return 1;
}

int run_hitting(const HittingArgs& args) {
  const rst::TrialResult r =
      rst::run_trial(args.n, args.k, args.seed, args.w_size);
  if (args.pretty) {
    auto show = [](const std::optional<std::int64_t>& v) {
      return v ? std::to_string(*v) : std::string("none");
    };
    std::cout << "n=" << r.n << " k=" << r.k << " w_size=" << r.w_size
              << " seed=" << r.seed << "\n"
              << "m_connect    = " << show(r.m_connect) << "\n"
              << "m_all_colors = " << show(r.m_all_colors) << "\n"
              << "m_rainbow    = " << show(r.m_rainbow) << "\n"
              << "identity m_rainbow == max(m_connect, m_all_colors): "
              << (r.identity_holds ? "holds" : "fails") << "\n";
  } else {
    json j;
    j["tool"] = rst::kToolVersion;
    j["generator"] = rst::kGeneratorId;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["k"] = r.k;
    j["w_size"] = r.w_size;
    j["m_connect"] = r.m_connect ? json(*r.m_connect) : json(nullptr);
    j["m_all_colors"] =
        r.m_all_colors ? json(*r.m_all_colors) : json(nullptr);
    j["m_rainbow"] = r.m_rainbow ? json(*r.m_rainbow) : json(nullptr);
    j["identity_holds"] = r.identity_holds;
    j["trace_len"] = r.trace_len;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

// Sibling path for the per-trial rows of a sweep: stem + "_trials" + ext.
std::string trials_path(const std::string& out) {
  const std::size_t slash = out.find_last_of('/');
  const std::size_t dot = out.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return out + "_trials";
  return out.substr(0, dot) + "_trials" + out.substr(dot);
}

int run_sweep(const SweepArgs& args) {
  rst::SweepSpec spec;
  spec.n_values = args.n_values;
  spec.k = args.k;
  spec.w_size = args.w_size;
  spec.c_grid = args.c_grid;
  spec.trials = args.trials;
  spec.master_seed = args.seed;
  spec.workers = args.workers;
  for (const std::string& name : args.events) {
    const std::optional<rst::Event> event = rst::event_from_name(name);
    if (!event) throw rst::invalid_config("unknown event '" + name + "'");
    spec.events.push_back(*event);
  }
  rst::FileFormat fmt;
  if (args.format == "csv") {
    fmt = rst::FileFormat::kCsv;
  } else if (args.format == "jsonl") {
    fmt = rst::FileFormat::kJsonl;
  } else {
    throw rst::invalid_config("format must be csv or jsonl");
  }

  const rst::BatchResult result = rst::run_batch(spec);
  const rst::RunMetadata meta{rst::kToolVersion, rst::kGeneratorId,
                              spec.master_seed};
  if (args.out.empty()) {
    std::cout << rst::format_cells(meta, result.cells, fmt);
  } else {
    rst::write_cells_file(args.out, meta, result.cells, fmt);
    if (!result.trials.empty())
      rst::write_trials_file(trials_path(args.out), meta, result.trials, fmt);
  }
  if (args.pretty) {
    std::cout << "cells:\n";
    for (const rst::CellEstimate& cell : result.cells)
      std::cout << "  n=" << cell.n << " " << rst::event_name(cell.event)
                << " c=" << cell.c << " m=" << cell.m
                << " p_hat=" << cell.p_hat << " limit=" << cell.limit
                << " (se " << cell.std_err << ")\n";
  }
  return 0;
}

int run_oracle_compare(const OracleArgs& args) {
  if (args.trials < 1) throw rst::invalid_config("need trials >= 1");
  const std::int64_t total =
      std::int64_t{args.n} * (args.n - 1) / 2;
  std::cout << "instance,n,k,m,engine,edmonds,backtrack,selected,minmax,agree"
            << "\n";
  bool all_agree = true;
  for (int t = 0; t < args.trials; ++t) {
    const std::uint64_t trace_seed = rst::derive_trial_seed(args.seed, 0, t);
    rst::Rng pick(rst::derive_trial_seed(args.seed, 1, t));
    const std::int64_t m =
        static_cast<std::int64_t>(pick.below(static_cast<std::uint64_t>(total) + 1));
    const rst::ProcessConfig cfg =
        rst::ProcessConfig::make(args.n, args.k, trace_seed);
    const rst::ProcessTrace trace = rst::generate_trace(cfg);
    const rst::RainbowForestEngine engine = rst::max_rainbow_forest(trace, m);
    const rst::OracleReport report = rst::edmonds_bruteforce(trace, m);
    const bool backtrack = rst::backtrack_rainbow_tree(trace, m);
    const bool agree = engine.spanning() == report.exists &&
                       backtrack == report.exists &&
                       engine.selected_size() == report.minmax_value;
    all_agree = all_agree && agree;
    std::cout << t << "," << args.n << "," << args.k << "," << m << ","
              << (engine.spanning() ? 1 : 0) << "," << (report.exists ? 1 : 0)
              << "," << (backtrack ? 1 : 0) << "," << engine.selected_size()
              << "," << report.minmax_value << ","
              << (agree ? "yes" : "NO") << "\n";
  }
  std::cout << (all_agree ? "# all instances agree"
                          : "# DISAGREEMENT detected")
            << "\n";
  return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow spanning tree process toolkit"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Generate a colored edge process trace");
  sim->add_option("--n", sim_args.n, "vertex count")->required();
  sim->add_option("--k", sim_args.k, "colors per edge")->required();
  sim->add_option("--w-size", sim_args.w_size,
                  "palette size (default n - 1)");
  sim->add_option("--seed", sim_args.seed, "random seed");
  sim->add_option("--m", sim_args.m,
                  "edges to emit (default all n(n-1)/2)");
  sim->add_option("--out", sim_args.out, "output path (default stdout)");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Decide rainbow spanning tree existence in a trace prefix");
  check->add_option("trace", check_args.trace_path, "trace file")->required();
  check->add_option("--m", check_args.m,
                    "prefix length (default whole trace)");
  check->add_flag("--pretty", check_args.pretty, "human-readable output");

  HittingArgs hit_args;
  CLI::App* hit = app.add_subcommand(
      "hitting-times",
      "Connectivity, color coverage, and rainbow tree hitting times");
  hit->add_option("--n", hit_args.n, "vertex count")->required();
  hit->add_option("--k", hit_args.k, "colors per edge")->required();
  hit->add_option("--w-size", hit_args.w_size, "palette size (default n - 1)");
  hit->add_option("--seed", hit_args.seed, "random seed");
  hit->add_flag("--pretty", hit_args.pretty, "human-readable output");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Monte Carlo estimates against the limit laws");
  sweep->add_option("--n", sweep_args.n_values, "vertex counts")
      ->required()
      ->delimiter(',');
  sweep->add_option("--k", sweep_args.k, "colors per edge");
  sweep->add_option("--w-size", sweep_args.w_size,
                    "palette size (default n - 1)");
  sweep->add_option("--seed", sweep_args.seed, "master seed");
  sweep->add_option("--c-grid", sweep_args.c_grid,
                    "scale parameters c (law events)")
      ->delimiter(',');
  sweep->add_option("--events", sweep_args.events,
                    "events: connectivity, coverage, rainbow, identity")
      ->delimiter(',');
  sweep->add_option("--trials", sweep_args.trials, "trials per cell");
  sweep->add_option("--workers", sweep_args.workers, "worker threads");
  sweep->add_option("--out", sweep_args.out,
                    "cells output path; identity trials go to the _trials "
                    "sibling (default stdout)");
  sweep->add_option("--format", sweep_args.format, "csv or jsonl");
  sweep->add_flag("--pretty", sweep_args.pretty, "also print a summary");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle-compare",
      "Cross-check the engine against exhaustive oracles (small n)");
  oracle->add_option("--n", oracle_args.n, "vertex count");
  oracle->add_option("--k", oracle_args.k, "colors per edge");
  oracle->add_option("--seed", oracle_args.seed, "master seed");
  oracle->add_option("--trials", oracle_args.trials, "instance count");
  oracle->add_flag("--pretty", oracle_args.pretty, "human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed()) return run_simulate(sim_args);
    if (check->parsed()) return run_check(check_args);
    if (hit->parsed()) return run_hitting(hit_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (oracle->parsed()) return run_oracle_compare(oracle_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}

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
// Monte Carlo estimation of the limiting hitting-time laws. At
// m(c) = round((n/k)(ln n + c)) the probability that every color has
// appeared tends to exp(-exp(-c)); at m(c) = round((n/2)(ln n + c)) the
// probability of connectivity tends to the same double exponential; and the
// rainbow-spanning-tree probability at the coverage scale tends to
// exp(-2 exp(-c)) for k = 2 and exp(-exp(-c)) for k >= 3. The k = 1 rainbow
// law is undefined here. Trials are seeded independently per
// (master, cell, trial), so results do not depend on worker count.

#ifndef RST_EXPERIMENTS_HPP_
#define RST_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rst/hitting.hpp"
#include "rst/process.hpp"

namespace rst {

enum class Event { kConnectivity, kCoverage, kRainbow, kIdentity };

std::string event_name(Event e);
std::optional<Event> event_from_name(const std::string& name);

struct TrialResult {
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;
  int w_size = 0;
  std::optional<std::int64_t> m_connect;
  std::optional<std::int64_t> m_all_colors;
  std::optional<std::int64_t> m_rainbow;
  bool identity_holds = false;  // all defined and m_R == max(m_C, m_N)
  std::int64_t trace_len = 0;   // edges examined; a null means "not within this many"

  bool operator==(const TrialResult&) const = default;
};

struct SweepSpec {
  std::vector<int> n_values;
  int k = 2;
  int w_size = -1;  // -1: n - 1 per cell
  std::vector<double> c_grid;
  std::vector<Event> events;
  int trials = 100;
  std::uint64_t master_seed = 0;
  int workers = 1;
};

struct CellEstimate {
  int n = 0;
  int k = 0;
  int w_size = 0;
  Event event = Event::kConnectivity;
  double c = 0.0;         // 0 for identity cells
  std::int64_t m = 0;     // evaluation prefix length; 0 for identity cells
  int trials = 0;
  double p_hat = 0.0;
  double std_err = 0.0;   // sqrt(p_hat (1 - p_hat) / trials)
  double limit = 0.0;     // limiting probability (1 for identity)

  bool operator==(const CellEstimate&) const = default;
};

struct BatchResult {
  std::vector<CellEstimate> cells;
  std::vector<TrialResult> trials;  // populated by identity cells
};

// Limiting probability of the event at scale parameter c. Throws
// unsupported_case for the k = 1 rainbow law.
double limit_cdf(double c, int k, Event event);

// Threshold scale of the event: connectivity concentrates at (n/2) ln n,
// coverage at (n/k) ln n, and a rainbow tree needs both, so its scale is
// the larger of the two.
double event_scale(int n, int k, Event event);

// Scale parameter of a prefix length: c = m / scale - ln n. The default
// event keeps the two-argument coupon form c = k m / n - ln n.
double c_transform(std::int64_t m, int n, int k,
                   Event event = Event::kCoverage);

// Prefix length for a scale parameter: round(scale (ln n + c)), clamped to
// [0, n(n-1)/2].
std::int64_t m_for_c(double c, int n, int k,
                     Event event = Event::kCoverage);

// All three hitting times of one process realization, plus the identity
// flag. Scans as far as needed (up to the full pair count).
TrialResult run_trial(int n, int k, std::uint64_t seed, int w_size = -1);

// Runs every cell of the sweep. Deterministic for fixed spec regardless of
// worker count.
BatchResult run_batch(const SweepSpec& spec);

// Largest absolute gap between estimate and limit over cells of the event.
double ks_distance(std::span<const CellEstimate> cells, Event event);

// ---- persistence ----

enum class FileFormat { kCsv, kJsonl };

struct RunMetadata {
  std::string tool;       // kToolVersion
  std::string generator;  // kGeneratorId
  std::uint64_t master_seed = 0;

  bool operator==(const RunMetadata&) const = default;
};

std::string format_trials(const RunMetadata& meta,
                          std::span<const TrialResult> rows, FileFormat fmt);
std::string format_cells(const RunMetadata& meta,
                         std::span<const CellEstimate> rows, FileFormat fmt);

void write_trials_file(const std::string& path, const RunMetadata& meta,
                       std::span<const TrialResult> rows, FileFormat fmt);
void write_cells_file(const std::string& path, const RunMetadata& meta,
                      std::span<const CellEstimate> rows, FileFormat fmt);

// Readers accept either format (detected from the first byte) and restore
// every field exactly.
std::pair<RunMetadata, std::vector<TrialResult>> read_trials_file(
    const std::string& path);
std::pair<RunMetadata, std::vector<CellEstimate>> read_cells_file(
    const std::string& path);

}  // namespace rst

#endif  // RST_EXPERIMENTS_HPP_

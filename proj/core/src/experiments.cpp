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

#include "rst/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rst/disjoint_sets.hpp"
#include "rst/errors.hpp"
#include "rst/matroid.hpp"
#include "rst/rng.hpp"

namespace rst {
namespace {

using nlohmann::json;

constexpr char kTrialsHeader[] =
    "seed,n,k,w_size,m_connect,m_all_colors,m_rainbow,identity_holds,"
    "trace_len";
constexpr char kCellsHeader[] =
    "n,k,w_size,event,c,m,trials,p_hat,std_err,limit";

// Runs fn(0..count-1) on up to `workers` threads. Work items land in
// caller-owned slots indexed by item, so schedules never affect results.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  const int use = std::max(1, std::min(workers, count));
  if (use <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::mutex err_mu;
  std::exception_ptr err;
  auto body = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(use);
  for (int t = 0; t < use; ++t) threads.emplace_back(body);
  for (auto& th : threads) th.join();
  if (err) std::rethrow_exception(err);
}

// Whether the event holds after the first m edges of the seeded process.
bool law_event_hit(int n, int k, int w_size, Event event, std::int64_t m,
                   std::uint64_t seed) {
  const ProcessConfig cfg = ProcessConfig::make(n, k, seed, m, w_size);
  TraceGenerator gen(cfg);
  switch (event) {
    case Event::kConnectivity: {
      DisjointSets dsu(n);
      int components = n;
      while (!gen.done()) {
        const TimedEdge e = gen.next();
        if (dsu.unite(e.u, e.v) && --components == 1) return true;
      }
      return false;
    }
    case Event::kCoverage: {
      CoverageTracker cover(cfg.w_size);
      while (!gen.done()) {
        cover.observe(gen.next().colors);
        if (cover.complete()) return true;
      }
      return false;
    }
    case Event::kRainbow: {
      RainbowForestEngine engine(n, cfg.w_size);
      while (!gen.done()) {
        engine.insert_edge(gen.next());
        engine.try_augment();
        if (engine.spanning()) return true;
      }
      return false;
    }
    case Event::kIdentity:
      break;
  }
  throw internal_error("identity cells take the full-trial path");
}

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void append_opt(std::string* out, const std::optional<std::int64_t>& v) {
  if (v) *out += std::to_string(*v);
}

std::string meta_line(const RunMetadata& meta) {
  return "# tool=" + meta.tool + " generator=" + meta.generator +
         " master_seed=" + std::to_string(meta.master_seed) + "\n";
}

json meta_to_json(const RunMetadata& meta) {
  json j;
  j["tool"] = meta.tool;
  j["generator"] = meta.generator;
  j["master_seed"] = meta.master_seed;
  return j;
}

json trial_to_json(const TrialResult& r) {
  json j;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["k"] = r.k;
  j["w_size"] = r.w_size;
  j["m_connect"] = r.m_connect ? json(*r.m_connect) : json(nullptr);
  j["m_all_colors"] = r.m_all_colors ? json(*r.m_all_colors) : json(nullptr);
  j["m_rainbow"] = r.m_rainbow ? json(*r.m_rainbow) : json(nullptr);
  j["identity_holds"] = r.identity_holds;
  j["trace_len"] = r.trace_len;
  return j;
}

json cell_to_json(const CellEstimate& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["w_size"] = r.w_size;
  j["event"] = event_name(r.event);
  j["c"] = r.c;
  j["m"] = r.m;
  j["trials"] = r.trials;
  j["p_hat"] = r.p_hat;
  j["std_err"] = r.std_err;
  j["limit"] = r.limit;
  return j;
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw io_error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view s, int line) {
  T v{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    fail_at(line, "malformed number '" + std::string(s) + "'");
  return v;
}

std::optional<std::int64_t> parse_opt(std::string_view s, int line) {
  if (s.empty()) return std::nullopt;
  return parse_number<std::int64_t>(s, line);
}

bool parse_bool(std::string_view s, int line) {
  if (s == "true") return true;
  if (s == "false") return false;
  fail_at(line, "malformed boolean '" + std::string(s) + "'");
}

RunMetadata parse_meta_line(std::string_view s, int line) {
  const std::vector<std::string_view> parts = split(s, ' ');
  if (parts.size() != 4 || parts[0] != "#" ||
      !parts[1].starts_with("tool=") || !parts[2].starts_with("generator=") ||
      !parts[3].starts_with("master_seed="))
    fail_at(line, "malformed metadata line");
  RunMetadata meta;
  meta.tool = std::string(parts[1].substr(5));
  meta.generator = std::string(parts[2].substr(10));
  meta.master_seed =
      parse_number<std::uint64_t>(parts[3].substr(12), line);
  return meta;
}

RunMetadata meta_from_json(const json& j, int line) {
  try {
    RunMetadata meta;
    meta.tool = j.at("tool").get<std::string>();
    meta.generator = j.at("generator").get<std::string>();
    meta.master_seed = j.at("master_seed").get<std::uint64_t>();
    return meta;
  } catch (const json::exception& e) {
    fail_at(line, e.what());
  }
}

TrialResult trial_from_json(const json& j, int line) {
  try {
    TrialResult r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.w_size = j.at("w_size").get<int>();
    if (!j.at("m_connect").is_null())
      r.m_connect = j.at("m_connect").get<std::int64_t>();
    if (!j.at("m_all_colors").is_null())
      r.m_all_colors = j.at("m_all_colors").get<std::int64_t>();
    if (!j.at("m_rainbow").is_null())
      r.m_rainbow = j.at("m_rainbow").get<std::int64_t>();
    r.identity_holds = j.at("identity_holds").get<bool>();
    r.trace_len = j.at("trace_len").get<std::int64_t>();
    return r;
  } catch (const json::exception& e) {
    fail_at(line, e.what());
  }
}

CellEstimate cell_from_json(const json& j, int line) {
  try {
    CellEstimate r;
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.w_size = j.at("w_size").get<int>();
    const auto event = event_from_name(j.at("event").get<std::string>());
    if (!event) fail_at(line, "unknown event name");
    r.event = *event;
    r.c = j.at("c").get<double>();
    r.m = j.at("m").get<std::int64_t>();
    r.trials = j.at("trials").get<int>();
    r.p_hat = j.at("p_hat").get<double>();
    r.std_err = j.at("std_err").get<double>();
    r.limit = j.at("limit").get<double>();
    return r;
  } catch (const json::exception& e) {
    fail_at(line, e.what());
  }
}

// Splits file content into lines, tolerating a trailing newline and CR.
std::vector<std::string_view> content_lines(std::string_view content) {
  std::vector<std::string_view> lines = split(content, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& line : lines)
    if (line.ends_with('\r')) line.remove_suffix(1);
  return lines;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw io_error("failed reading " + path);
  return std::move(buf).str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("failed writing " + path);
}

json parse_json_line(std::string_view line, int lineno) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    fail_at(lineno, e.what());
  }
}

}  // namespace

std::string event_name(Event e) {
  switch (e) {
    case Event::kConnectivity:
      return "connectivity";
    case Event::kCoverage:
      return "coverage";
    case Event::kRainbow:
      return "rainbow";
    case Event::kIdentity:
      return "identity";
  }
  throw invalid_config("unknown event");
}

std::optional<Event> event_from_name(const std::string& name) {
  if (name == "connectivity") return Event::kConnectivity;
  if (name == "coverage") return Event::kCoverage;
  if (name == "rainbow") return Event::kRainbow;
  if (name == "identity") return Event::kIdentity;
  return std::nullopt;
}

double limit_cdf(double c, int k, Event event) {
  if (!std::isfinite(c)) throw invalid_config("c must be finite");
  switch (event) {
    case Event::kConnectivity:
    case Event::kCoverage:
      return std::exp(-std::exp(-c));
    case Event::kRainbow:
      if (k < 1) throw invalid_config("k must be positive");
      if (k == 1)
        throw unsupported_case(
            "single-colored processes have no rainbow limit law at this "
            "scale");
      if (k == 2) return std::exp(-2.0 * std::exp(-c));
      return std::exp(-std::exp(-c));
    case Event::kIdentity:
      return 1.0;
  }
  throw invalid_config("unknown event");
}

double event_scale(int n, int k, Event event) {
  if (n < 2 || k < 1) throw invalid_config("need n >= 2 and k >= 1");
  const double half = n / 2.0;
  const double coupon = n / static_cast<double>(k);
  switch (event) {
    case Event::kConnectivity:
      return half;
    case Event::kCoverage:
      return coupon;
    case Event::kRainbow:
    case Event::kIdentity:
      return std::max(half, coupon);
  }
  throw internal_error("unknown event");
}

double c_transform(std::int64_t m, int n, int k, Event event) {
  return static_cast<double>(m) / event_scale(n, k, event) -
         std::log(static_cast<double>(n));
}

std::int64_t m_for_c(double c, int n, int k, Event event) {
  if (!std::isfinite(c)) throw invalid_config("c must be finite");
  const double scale = event_scale(n, k, event);
  const std::int64_t total = std::int64_t{n} * (n - 1) / 2;
  const double raw = scale * (std::log(static_cast<double>(n)) + c);
  return std::clamp<std::int64_t>(std::llround(raw), 0, total);
}

TrialResult run_trial(int n, int k, std::uint64_t seed, int w_size) {
  const std::int64_t total = std::int64_t{n} * (n - 1) / 2;
  // Initial window past every threshold's typical range; the tail doubles.
  const double scale = std::max(n / 2.0, n / static_cast<double>(k));
  const std::int64_t window = std::clamp<std::int64_t>(
      std::llround(std::ceil(scale * (std::log(static_cast<double>(n)) + 10.0))),
      1, total);
  const ProcessConfig cfg = ProcessConfig::make(n, k, seed, window, w_size);
  TraceGenerator gen(cfg);

  DisjointSets dsu(n);
  int components = n;
  CoverageTracker cover(cfg.w_size);
  RainbowForestEngine engine(n, cfg.w_size);

  std::optional<std::int64_t> m_connect, m_all_colors, m_rainbow;
  while (!(m_connect && m_all_colors && m_rainbow)) {
    if (gen.done()) {
      if (gen.config().m_max >= total) break;
      gen.extend(std::min(total, gen.config().m_max * 2));
    }
    const TimedEdge e = gen.next();
    if (!m_connect) {
      if (dsu.unite(e.u, e.v) && --components == 1) m_connect = e.index;
    }
    if (!m_all_colors) {
      cover.observe(e.colors);
      if (cover.complete()) m_all_colors = e.index;
    }
    if (!m_rainbow) {
      engine.insert_edge(e);
      engine.try_augment();
      if (engine.spanning()) m_rainbow = e.index;
    }
  }

  TrialResult r;
  r.seed = seed;
  r.n = n;
  r.k = k;
  r.w_size = cfg.w_size;
  r.m_connect = m_connect;
  r.m_all_colors = m_all_colors;
  r.m_rainbow = m_rainbow;
  r.identity_holds =
      m_connect && m_all_colors && m_rainbow &&
      *m_rainbow == std::max(*m_connect, *m_all_colors);
  r.trace_len = gen.emitted();
  return r;
}

BatchResult run_batch(const SweepSpec& spec) {
  if (spec.n_values.empty())
    throw invalid_config("sweep needs at least one n");
  if (spec.trials < 1) throw invalid_config("sweep needs trials >= 1");
  if (spec.events.empty())
    throw invalid_config("sweep needs at least one event");
  if (spec.workers < 1) throw invalid_config("sweep needs workers >= 1");
  bool needs_grid = false;
  for (const Event event : spec.events)
    needs_grid = needs_grid || event != Event::kIdentity;
  if (needs_grid && spec.c_grid.empty())
    throw invalid_config("law events need a nonempty c grid");

  BatchResult out;
  std::uint64_t cell_index = 0;
  for (const int n : spec.n_values) {
    const int w = spec.w_size < 0 ? n - 1 : spec.w_size;
    for (const Event event : spec.events) {
      if (event == Event::kIdentity) {
        const std::uint64_t cell = cell_index++;
        std::vector<TrialResult> rows(spec.trials);
        parallel_for(spec.trials, spec.workers, [&](int t) {
          rows[t] = run_trial(
              n, spec.k,
              derive_trial_seed(spec.master_seed, cell,
                                static_cast<std::uint64_t>(t)),
              w);
        });
        int hits = 0;
        for (const TrialResult& r : rows) hits += r.identity_holds ? 1 : 0;
        CellEstimate est;
        est.n = n;
        est.k = spec.k;
        est.w_size = w;
        est.event = event;
        est.c = 0.0;
        est.m = 0;
        est.trials = spec.trials;
        est.p_hat = hits / static_cast<double>(spec.trials);
        est.std_err =
            std::sqrt(est.p_hat * (1.0 - est.p_hat) / spec.trials);
        est.limit = 1.0;
        out.cells.push_back(est);
        out.trials.insert(out.trials.end(), rows.begin(), rows.end());
        continue;
      }
      for (const double c : spec.c_grid) {
        const double limit = limit_cdf(c, spec.k, event);
        const std::int64_t m = m_for_c(c, n, spec.k, event);
        const std::uint64_t cell = cell_index++;
        std::vector<unsigned char> hit(spec.trials, 0);
        parallel_for(spec.trials, spec.workers, [&](int t) {
          hit[t] = law_event_hit(n, spec.k, w, event, m,
                                 derive_trial_seed(
                                     spec.master_seed, cell,
                                     static_cast<std::uint64_t>(t)))
                       ? 1
                       : 0;
        });
        int hits = 0;
        for (const unsigned char h : hit) hits += h;
        CellEstimate est;
        est.n = n;
        est.k = spec.k;
        est.w_size = w;
        est.event = event;
        est.c = c;
        est.m = m;
        est.trials = spec.trials;
        est.p_hat = hits / static_cast<double>(spec.trials);
        est.std_err =
            std::sqrt(est.p_hat * (1.0 - est.p_hat) / spec.trials);
        est.limit = limit;
        out.cells.push_back(est);
      }
    }
  }
  return out;
}

double ks_distance(std::span<const CellEstimate> cells, Event event) {
  double worst = 0.0;
  for (const CellEstimate& cell : cells)
    if (cell.event == event)
      worst = std::max(worst, std::abs(cell.p_hat - cell.limit));
  return worst;
}

std::string format_trials(const RunMetadata& meta,
                          std::span<const TrialResult> rows, FileFormat fmt) {
  std::string out;
  if (fmt == FileFormat::kJsonl) {
    out += meta_to_json(meta).dump();
    out += '\n';
    for (const TrialResult& r : rows) {
      out += trial_to_json(r).dump();
      out += '\n';
    }
    return out;
  }
  out += meta_line(meta);
  out += kTrialsHeader;
  out += '\n';
  for (const TrialResult& r : rows) {
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.w_size);
    out += ',';
    append_opt(&out, r.m_connect);
    out += ',';
    append_opt(&out, r.m_all_colors);
    out += ',';
    append_opt(&out, r.m_rainbow);
    out += ',';
    out += r.identity_holds ? "true" : "false";
    out += ',';
    out += std::to_string(r.trace_len);
    out += '\n';
  }
  return out;
}

std::string format_cells(const RunMetadata& meta,
                         std::span<const CellEstimate> rows, FileFormat fmt) {
  std::string out;
  if (fmt == FileFormat::kJsonl) {
    out += meta_to_json(meta).dump();
    out += '\n';
    for (const CellEstimate& r : rows) {
      out += cell_to_json(r).dump();
      out += '\n';
    }
    return out;
  }
  out += meta_line(meta);
  out += kCellsHeader;
  out += '\n';
  for (const CellEstimate& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.w_size);
    out += ',';
    out += event_name(r.event);
    out += ',';
    out += fmt_double(r.c);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += fmt_double(r.p_hat);
    out += ',';
    out += fmt_double(r.std_err);
    out += ',';
    out += fmt_double(r.limit);
    out += '\n';
  }
  return out;
}

void write_trials_file(const std::string& path, const RunMetadata& meta,
                       std::span<const TrialResult> rows, FileFormat fmt) {
  spit(path, format_trials(meta, rows, fmt));
}

void write_cells_file(const std::string& path, const RunMetadata& meta,
                      std::span<const CellEstimate> rows, FileFormat fmt) {
  spit(path, format_cells(meta, rows, fmt));
}

std::pair<RunMetadata, std::vector<TrialResult>> read_trials_file(
    const std::string& path) {
  const std::string content = slurp(path);
  const std::vector<std::string_view> lines = content_lines(content);
  if (lines.empty()) throw io_error(path + ": empty file");
  std::vector<TrialResult> rows;
  if (lines[0].starts_with('{')) {
    const RunMetadata meta = meta_from_json(parse_json_line(lines[0], 1), 1);
    for (std::size_t i = 1; i < lines.size(); ++i)
      rows.push_back(trial_from_json(
          parse_json_line(lines[i], static_cast<int>(i) + 1),
          static_cast<int>(i) + 1));
    return {meta, std::move(rows)};
  }
  const RunMetadata meta = parse_meta_line(lines[0], 1);
  if (lines.size() < 2 || lines[1] != kTrialsHeader)
    fail_at(2, "missing column header");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::vector<std::string_view> fields = split(lines[i], ',');
    if (fields.size() != 9) fail_at(lineno, "expected 9 fields");
    TrialResult r;
    r.seed = parse_number<std::uint64_t>(fields[0], lineno);
    r.n = parse_number<int>(fields[1], lineno);
    r.k = parse_number<int>(fields[2], lineno);
    r.w_size = parse_number<int>(fields[3], lineno);
    r.m_connect = parse_opt(fields[4], lineno);
    r.m_all_colors = parse_opt(fields[5], lineno);
    r.m_rainbow = parse_opt(fields[6], lineno);
    r.identity_holds = parse_bool(fields[7], lineno);
    r.trace_len = parse_number<std::int64_t>(fields[8], lineno);
    rows.push_back(r);
  }
  return {meta, std::move(rows)};
}

std::pair<RunMetadata, std::vector<CellEstimate>> read_cells_file(
    const std::string& path) {
  const std::string content = slurp(path);
  const std::vector<std::string_view> lines = content_lines(content);
  if (lines.empty()) throw io_error(path + ": empty file");
  std::vector<CellEstimate> rows;
  if (lines[0].starts_with('{')) {
    const RunMetadata meta = meta_from_json(parse_json_line(lines[0], 1), 1);
    for (std::size_t i = 1; i < lines.size(); ++i)
      rows.push_back(cell_from_json(
          parse_json_line(lines[i], static_cast<int>(i) + 1),
          static_cast<int>(i) + 1));
    return {meta, std::move(rows)};
  }
  const RunMetadata meta = parse_meta_line(lines[0], 1);
  if (lines.size() < 2 || lines[1] != kCellsHeader)
    fail_at(2, "missing column header");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::vector<std::string_view> fields = split(lines[i], ',');
    if (fields.size() != 10) fail_at(lineno, "expected 10 fields");
    CellEstimate r;
    r.n = parse_number<int>(fields[0], lineno);
    r.k = parse_number<int>(fields[1], lineno);
    r.w_size = parse_number<int>(fields[2], lineno);
    const auto event = event_from_name(std::string(fields[3]));
    if (!event) fail_at(lineno, "unknown event name");
    r.event = *event;
    r.c = parse_number<double>(fields[4], lineno);
    r.m = parse_number<std::int64_t>(fields[5], lineno);
    r.trials = parse_number<int>(fields[6], lineno);
    r.p_hat = parse_number<double>(fields[7], lineno);
    r.std_err = parse_number<double>(fields[8], lineno);
    r.limit = parse_number<double>(fields[9], lineno);
    rows.push_back(r);
  }
  return {meta, std::move(rows)};
}

}  // namespace rst

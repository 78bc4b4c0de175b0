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

#include "rst/trace_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_set>

#include "rst/errors.hpp"

namespace rst {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw io_error("trace line " + std::to_string(line) + ": " + what);
}

// Strict non-negative integer parse; rejects signs, blanks and overflow.
template <class Int>
bool parse_int(const std::string& s, Int* out) {
  if (s.empty()) return false;
  unsigned long long v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
    const unsigned long long next = v * 10 + static_cast<unsigned>(ch - '0');
    if (next < v) return false;
    v = next;
  }
  if (v > static_cast<unsigned long long>(std::numeric_limits<Int>::max()))
    return false;
  *out = static_cast<Int>(v);
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::string format_trace(const ProcessTrace& trace) {
  std::ostringstream out;
  const ProcessConfig& c = trace.config;
  out << "# colored-trace v1 n=" << c.n << " k=" << c.k << " w_size=" << c.w_size
      << " seed=" << c.seed << " generator=" << trace.generator << "\n";
  for (const TimedEdge& e : trace.edges) {
    out << e.index << ' ' << e.u << ' ' << e.v << ' ';
    for (std::size_t i = 0; i < e.colors.size(); ++i) {
      if (i) out << ',';
      out << e.colors[i];
    }
    out << "\n";
  }
  return out.str();
}

void write_trace_file(const ProcessTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << format_trace(trace);
}

ProcessTrace parse_trace(std::istream& in) {
  ProcessTrace trace;
  std::string line;
  if (!std::getline(in, line)) fail(1, "missing header");

  // Header: "# colored-trace v1 n=.. k=.. w_size=.. seed=.. generator=..".
  const std::vector<std::string> head = split(line, ' ');
  if (head.size() != 8 || head[0] != "#" || head[1] != "colored-trace" ||
      head[2] != "v1")
    fail(1, "unrecognized header");
  ProcessConfig& c = trace.config;
  auto header_field = [&](const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) fail(1, "expected " + key + "=");
    return tok.substr(key.size() + 1);
  };
  if (!parse_int(header_field(head[3], "n"), &c.n)) fail(1, "bad n");
  if (!parse_int(header_field(head[4], "k"), &c.k)) fail(1, "bad k");
  if (!parse_int(header_field(head[5], "w_size"), &c.w_size)) fail(1, "bad w_size");
  if (!parse_int(header_field(head[6], "seed"), &c.seed)) fail(1, "bad seed");
  trace.generator = header_field(head[7], "generator");
  if (trace.generator.empty()) fail(1, "bad generator");

  std::size_t lineno = 1;
  std::unordered_set<std::int64_t> seen_pairs;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) fail(lineno, "blank line");
    const std::vector<std::string> parts = split(line, ' ');
    if (parts.size() != 4) fail(lineno, "expected 4 fields");
    TimedEdge e;
    if (!parse_int(parts[0], &e.index) ||
        e.index != static_cast<std::int64_t>(trace.edges.size() + 1))
      fail(lineno, "bad index");
    if (!parse_int(parts[1], &e.u)) fail(lineno, "bad u");
    if (!parse_int(parts[2], &e.v)) fail(lineno, "bad v");
    if (!(e.u < e.v && e.v < c.n)) fail(lineno, "endpoints out of range");
    if (!seen_pairs.insert(pair_id(e.u, e.v)).second)
      fail(lineno, "duplicate pair");
    Color prev = -1;
    for (const std::string& tok : split(parts[3], ',')) {
      Color col = 0;
      if (!parse_int(tok, &col)) fail(lineno, "bad color");
      if (col <= prev) fail(lineno, "colors must be strictly increasing");
      if (col >= c.w_size) fail(lineno, "color out of range");
      e.colors.push_back(col);
      prev = col;
    }
    if (static_cast<int>(e.colors.size()) != c.k)
      fail(lineno, "expected exactly k colors");
    trace.edges.push_back(std::move(e));
  }
  c.m_max = static_cast<std::int64_t>(trace.edges.size());
  try {
    c.validate();
  } catch (const invalid_config& e) {
    fail(1, e.what());
  }
  return trace;
}

ProcessTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

ProcessTrace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open: " + path);
  return parse_trace(in);
}

}  // namespace rst

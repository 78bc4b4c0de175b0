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
// Text form of a trace. One header line with the parameters and the
// generator id, then one line per edge: "<index> <u> <v> <c1,...,ck>".
// The format is canonical: parse(format(t)) == t and format(parse(s)) == s.

#ifndef RST_TRACE_IO_HPP_
#define RST_TRACE_IO_HPP_

#include <iosfwd>
#include <string>

#include "rst/process.hpp"

namespace rst {

std::string format_trace(const ProcessTrace& trace);
void write_trace_file(const ProcessTrace& trace, const std::string& path);

// Throws io_error with the offending line number on malformed input.
ProcessTrace parse_trace(std::istream& in);
ProcessTrace parse_trace(const std::string& text);
ProcessTrace read_trace_file(const std::string& path);

}  // namespace rst

#endif  // RST_TRACE_IO_HPP_

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

#ifndef RST_ERRORS_HPP_
#define RST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rst {

// Rejected configuration or argument (bad n/k/w_size/m ranges, misuse of an
// operation outside its precondition).
class invalid_config : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scan over a trace ended before the tracked event occurred.
class not_reached_error : public std::runtime_error {
 public:
  not_reached_error(const std::string& what, int components)
      : std::runtime_error(what), components(components) {}

  // Component count when the trace ran out.
  int components;
};

// An exhaustive oracle refused an instance above its resource guard.
class guard_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Asked for a quantity that has no defined value (e.g. the k = 1 rainbow
// limit law).
class unsupported_case : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check that can only fail on a bug tripped.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rst

#endif  // RST_ERRORS_HPP_

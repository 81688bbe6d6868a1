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

#pragma once

#include <stdexcept>
#include <string>

namespace patsum {

// Malformed textual input (FIMI lines, TSV collections, projection files).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A caller violated an operation's precondition (bad sigma, guard exceeded,
// anti-monotonicity broken, missing rating, ...).
class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs are individually well-formed but mutually inconsistent
// (incompatible projections, contradictory support claims).
class IncompatibleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace patsum

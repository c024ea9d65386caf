// Copyright 2026 The corrnoise Authors
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

/**
 * @file
 * Line-oriented circuit DSL:
 *
 *     qubits <n>
 *     label <free text>                               (optional)
 *     <GATE> <q1> [q2] [theta=<angle>] [@ <duration>]
 *
 * `#` starts a comment and blank lines are ignored. Angles are decimal
 * numbers or multiples of pi such as `pi/2`, `-pi/4`, `3*pi/4`. A missing
 * `@ <duration>` means duration 1.
 */
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "corrnoise/circuit.hpp"

namespace corrnoise {

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    kMissingHeader,
    kUnknownGate,
    kDuplicateOperand,
    kOperandOutOfRange,
    kArity,
    kNegativeDuration,
  };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

std::string_view to_string(ParseError::Kind kind);

/// Raised when a circuit or config file cannot be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Circuit parse_circuit(std::string_view text, std::string default_label = {});
std::string format_circuit(const Circuit& circuit);

/// Parses a DSL file; the label defaults to the file stem.
Circuit load_circuit_file(const std::filesystem::path& path);

nlohmann::json to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace corrnoise

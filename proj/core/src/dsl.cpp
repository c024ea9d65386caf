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

#include "corrnoise/dsl.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace corrnoise {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '@') {
      tokens.push_back({line.substr(i, 1), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '@') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long> parse_int(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// [-][k*]pi[/m] or a plain decimal.
std::optional<double> parse_angle(std::string_view s) {
  if (auto v = parse_number(s)) return v;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return std::nullopt;
  double k = 1.0;
  if (pi_pos > 0) {
    if (s[pi_pos - 1] != '*') return std::nullopt;
    auto kv = parse_number(s.substr(0, pi_pos - 1));
    if (!kv) return std::nullopt;
    k = *kv;
  }
  auto rest = s.substr(pi_pos + 2);
  double m = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    auto mv = parse_number(rest.substr(1));
    if (!mv || *mv == 0.0) return std::nullopt;
    m = *mv;
  }
  const double value = k * std::numbers::pi / m;
  return negative ? -value : value;
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

// Emits k*pi/m when that spelling parses back to exactly `theta`.
std::string format_angle(double theta) {
  for (int m : {1, 2, 3, 4, 6, 8}) {
    const double k = std::round(theta * m / std::numbers::pi);
    if (k == 0.0 || std::abs(k) > 64.0) continue;
    const double ak = std::abs(k);
    const double value = ak * std::numbers::pi / m;
    if ((theta < 0 ? -value : value) != theta) continue;
    std::string out = theta < 0 ? "-" : "";
    if (ak != 1.0) out += shortest(ak) + "*";
    out += "pi";
    if (m != 1) out += "/" + std::to_string(m);
    return out;
  }
  return shortest(theta);
}

}  // namespace

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string_view to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kSyntax: return "Syntax";
    case ParseError::Kind::kMissingHeader: return "MissingHeader";
    case ParseError::Kind::kUnknownGate: return "UnknownGate";
    case ParseError::Kind::kDuplicateOperand: return "DuplicateOperand";
    case ParseError::Kind::kOperandOutOfRange: return "OperandOutOfRange";
    case ParseError::Kind::kArity: return "Arity";
    case ParseError::Kind::kNegativeDuration: return "NegativeDuration";
  }
  return "Unknown";
}

Circuit parse_circuit(std::string_view text, std::string default_label) {
  using Kind = ParseError::Kind;
  std::optional<Circuit> circuit;
  std::string label = std::move(default_label);
  int line_no = 0;
  int last_line = 1;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    last_line = line_no;

    if (!circuit) {
      if (tokens[0].text != "qubits") {
        throw ParseError(Kind::kMissingHeader, line_no, tokens[0].column,
                         "expected 'qubits <n>' before any gate");
      }
      if (tokens.size() != 2) {
        throw ParseError(Kind::kSyntax, line_no, tokens[0].column, "expected 'qubits <n>'");
      }
      const auto n = parse_int(tokens[1].text);
      if (!n || *n < 1 || *n > kMaxQubits) {
        throw ParseError(Kind::kSyntax, line_no, tokens[1].column,
                         "qubit count must be an integer in [1, " + std::to_string(kMaxQubits) + "]");
      }
      circuit.emplace(static_cast<int>(*n));
      continue;
    }

    if (tokens[0].text == "label") {
      label = tokens.size() > 1
                  ? std::string(line.substr(static_cast<std::size_t>(tokens[1].column - 1)))
                  : std::string{};
      while (!label.empty() && (label.back() == ' ' || label.back() == '\t' || label.back() == '\r')) {
        label.pop_back();
      }
      continue;
    }
    if (tokens[0].text == "qubits") {
      throw ParseError(Kind::kSyntax, line_no, tokens[0].column, "duplicate 'qubits' header");
    }

    const auto kind = gate_from_name(tokens[0].text);
    if (!kind) {
      throw ParseError(Kind::kUnknownGate, line_no, tokens[0].column,
                       "unknown gate '" + std::string(tokens[0].text) + "'");
    }
    GateOp op;
    op.kind = *kind;
    std::size_t t = 1;
    for (; t < tokens.size(); ++t) {
      const auto q = parse_int(tokens[t].text);
      if (!q) break;
      if (*q < 1 || *q > circuit->n_qubits()) {
        throw ParseError(Kind::kOperandOutOfRange, line_no, tokens[t].column,
                         "operand " + std::string(tokens[t].text) + " outside [1, " +
                             std::to_string(circuit->n_qubits()) + "]");
      }
      for (int prev : op.qubits) {
        if (prev == *q) {
          throw ParseError(Kind::kDuplicateOperand, line_no, tokens[t].column,
                           "duplicate operand " + std::string(tokens[t].text));
        }
      }
      op.qubits.push_back(static_cast<int>(*q));
    }
    if (t < tokens.size() && tokens[t].text.starts_with("theta=")) {
      const auto angle = parse_angle(tokens[t].text.substr(6));
      if (!angle) {
        throw ParseError(Kind::kSyntax, line_no, tokens[t].column + 6,
                         "malformed angle '" + std::string(tokens[t].text.substr(6)) + "'");
      }
      op.theta = *angle;
      ++t;
    }
    if (t < tokens.size() && tokens[t].text == "@") {
      if (t + 1 >= tokens.size()) {
        throw ParseError(Kind::kSyntax, line_no, tokens[t].column, "expected duration after '@'");
      }
      const auto d = parse_number(tokens[t + 1].text);
      if (!d) {
        throw ParseError(Kind::kSyntax, line_no, tokens[t + 1].column,
                         "malformed duration '" + std::string(tokens[t + 1].text) + "'");
      }
      if (*d < 0.0) {
        throw ParseError(Kind::kNegativeDuration, line_no, tokens[t + 1].column, "negative duration");
      }
      op.duration = *d;
      t += 2;
    }
    if (t < tokens.size()) {
      throw ParseError(Kind::kSyntax, line_no, tokens[t].column,
                       "unexpected token '" + std::string(tokens[t].text) + "'");
    }
    if (const auto arity = gate_arity(op.kind); arity && static_cast<int>(op.qubits.size()) != *arity) {
      throw ParseError(Kind::kArity, line_no, tokens[0].column,
                       std::string(gate_name(op.kind)) + " takes " + std::to_string(*arity) +
                           " operand(s), got " + std::to_string(op.qubits.size()));
    }
    if (gate_takes_angle(op.kind) && !op.theta) {
      throw ParseError(Kind::kSyntax, line_no, tokens[0].column,
                       std::string(gate_name(op.kind)) + " requires theta=<angle>");
    }
    if (!gate_takes_angle(op.kind) && op.theta) {
      throw ParseError(Kind::kSyntax, line_no, tokens[0].column,
                       std::string(gate_name(op.kind)) + " does not take an angle");
    }
    circuit->append(std::move(op));
  }

  if (!circuit) throw ParseError(Kind::kMissingHeader, last_line, 1, "missing 'qubits <n>' header");
  circuit->set_label(std::move(label));
  return std::move(*circuit);
}

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.n_qubits() << '\n';
  if (!circuit.label().empty()) out << "label " << circuit.label() << '\n';
  for (const auto& op : circuit.ops()) {
    out << gate_name(op.kind);
    for (int q : op.qubits) out << ' ' << q;
    if (op.theta) out << " theta=" << format_angle(*op.theta);
    out << " @ " << shortest(op.duration) << '\n';
  }
  return out.str();
}

Circuit load_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open circuit file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str(), path.stem().string());
}

nlohmann::json to_json(const Circuit& circuit) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : circuit.ops()) {
    nlohmann::json j{{"gate", gate_name(op.kind)}, {"qubits", op.qubits}, {"duration", op.duration}};
    if (op.theta) j["theta"] = *op.theta;
    ops.push_back(std::move(j));
  }
  return {{"n_qubits", circuit.n_qubits()}, {"label", circuit.label()}, {"ops", std::move(ops)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit circuit(j.at("n_qubits").get<int>(), {}, j.value("label", std::string{}));
  for (const auto& jo : j.at("ops")) {
    const auto name = jo.at("gate").get<std::string>();
    const auto kind = gate_from_name(name);
    if (!kind) throw std::invalid_argument("unknown gate '" + name + "'");
    GateOp op;
    op.kind = *kind;
    op.qubits = jo.value("qubits", std::vector<int>{});
    if (jo.contains("theta")) op.theta = jo.at("theta").get<double>();
    op.duration = jo.value("duration", 1.0);
    circuit.append(std::move(op));
  }
  return circuit;
}

}  // namespace corrnoise

/* revnet: reversible-logic adder toolkit
 * Copyright (C) 2026 revnet contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file netlist.hpp
  \brief Line-oriented textual netlist format.

  Grammar (UTF-8, `#` starts a comment to end of line):

      revnet 1
      lines <count>
      in <id> primary <label>
      in <id> const <0|1>
      gate <KIND> <in-ids...> -> <out-ids...>
      out <id> primary <label>
      out <id> garbage

  Serialization is canonical: header, line count, `in` statements in
  ascending id order, gates in circuit order, `out` statements in ascending
  id order, one statement per line, LF-terminated.
*/

#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "circuit.hpp"

namespace revnet {

struct Diagnostic {
  int line = 0; ///< 1-based; 0 for whole-file problems
  int col = 0;  ///< 1-based
  std::string message;
};

struct ParseResult {
  std::optional<Circuit> circuit;
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const { return circuit.has_value(); }
};

namespace detail {

struct Token {
  std::string text;
  int col = 0;
};

[[nodiscard]] inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') {
      break;
    }
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

[[nodiscard]] inline std::optional<uint32_t> parse_id(const std::string& text) {
  if (text.empty()) {
    return std::nullopt;
  }
  uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      return std::nullopt;
    }
    value = value * 10 + static_cast<uint64_t>(c - '0');
    if (value > 0xFFFFFFFFull) {
      return std::nullopt;
    }
  }
  return static_cast<uint32_t>(value);
}

} // namespace detail

[[nodiscard]] inline ParseResult parse_netlist(std::string_view text,
                                               std::string name = "netlist") {
  ParseResult result;
  auto& diags = result.diagnostics;

  Circuit circuit;
  circuit.name = std::move(name);

  bool header_seen = false;
  bool lines_seen = false;
  uint32_t n_lines = 0;
  std::vector<uint8_t> produced; // input role or earlier gate output
  std::vector<uint8_t> consumed; // gate input or output role

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    auto tokens = detail::tokenize_line(raw);
    if (tokens.empty()) {
      continue;
    }
    const auto& head = tokens[0];
    auto fail = [&](int col, std::string message) {
      diags.push_back({line_no, col, std::move(message)});
    };

    if (!header_seen) {
      if (head.text != "revnet" || tokens.size() != 2 || tokens[1].text != "1") {
        fail(head.col, "missing header: expected 'revnet 1'");
      }
      header_seen = true;
      continue;
    }
    if (!lines_seen) {
      if (head.text != "lines" || tokens.size() != 2) {
        fail(head.col, "expected 'lines <count>'");
        continue;
      }
      const auto count = detail::parse_id(tokens[1].text);
      if (!count) {
        fail(tokens[1].col, "invalid line count '" + tokens[1].text + "'");
        continue;
      }
      lines_seen = true;
      n_lines = *count;
      circuit.lines.resize(n_lines);
      produced.assign(n_lines, 0);
      consumed.assign(n_lines, 0);
      continue;
    }

    auto check_id = [&](const detail::Token& token) -> std::optional<uint32_t> {
      const auto id = detail::parse_id(token.text);
      if (!id) {
        fail(token.col, "invalid line id '" + token.text + "'");
        return std::nullopt;
      }
      if (*id >= n_lines) {
        fail(token.col, "undeclared line id " + token.text + " (lines " +
                            std::to_string(n_lines) + ")");
        return std::nullopt;
      }
      return id;
    };

    if (head.text == "in") {
      if (tokens.size() != 4 ||
          (tokens[2].text != "primary" && tokens[2].text != "const")) {
        fail(head.col, "expected 'in <id> primary <label>' or 'in <id> const <0|1>'");
        continue;
      }
      const auto id = check_id(tokens[1]);
      if (!id) {
        continue;
      }
      if (produced[*id]) {
        fail(tokens[1].col, "line " + tokens[1].text + " already has a source");
        continue;
      }
      if (tokens[2].text == "primary") {
        circuit.lines[*id].input_label = tokens[3].text;
      } else {
        if (tokens[3].text != "0" && tokens[3].text != "1") {
          fail(tokens[3].col, "constant value must be 0 or 1");
          continue;
        }
        circuit.lines[*id].const_value = static_cast<uint8_t>(tokens[3].text == "1");
      }
      produced[*id] = 1;
    } else if (head.text == "gate") {
      if (tokens.size() < 2) {
        fail(head.col, "expected 'gate <KIND> <in-ids...> -> <out-ids...>'");
        continue;
      }
      const auto kind = gate_from_name(tokens[1].text);
      if (!kind) {
        fail(tokens[1].col, "unknown gate kind '" + tokens[1].text + "'");
        continue;
      }
      size_t arrow = 0;
      for (size_t i = 2; i < tokens.size(); ++i) {
        if (tokens[i].text == "->") {
          arrow = i;
        }
      }
      if (arrow == 0) {
        fail(head.col, "gate statement missing '->'");
        continue;
      }
      const auto arity = static_cast<size_t>(gate_arity(*kind));
      const size_t n_in = arrow - 2;
      const size_t n_out = tokens.size() - arrow - 1;
      if (n_in != arity || n_out != arity) {
        fail(tokens[1].col, "arity mismatch: " + tokens[1].text + " is a " +
                                std::to_string(arity) + "-ary gate, got " +
                                std::to_string(n_in) + " inputs and " +
                                std::to_string(n_out) + " outputs");
        continue;
      }
      GateInstance gate;
      gate.kind = *kind;
      bool bad = false;
      for (size_t i = 2; i < arrow; ++i) {
        const auto id = check_id(tokens[i]);
        if (!id) {
          bad = true;
          continue;
        }
        if (!produced[*id]) {
          fail(tokens[i].col, "line " + tokens[i].text + " used before it is defined");
          bad = true;
        } else if (consumed[*id]) {
          fail(tokens[i].col,
               "fan-out violation: line " + tokens[i].text + " is already consumed");
          bad = true;
        }
        gate.inputs.push_back(id.value_or(0));
      }
      for (size_t i = arrow + 1; i < tokens.size(); ++i) {
        const auto id = check_id(tokens[i]);
        if (!id) {
          bad = true;
          continue;
        }
        if (produced[*id]) {
          fail(tokens[i].col, "line " + tokens[i].text + " already has a source");
          bad = true;
        }
        gate.outputs.push_back(id.value_or(0));
      }
      if (bad) {
        continue;
      }
      for (auto id : gate.inputs) {
        consumed[id] = 1;
        circuit.lines[id].consumer = static_cast<int32_t>(circuit.gates.size());
      }
      for (auto id : gate.outputs) {
        produced[id] = 1;
        circuit.lines[id].producer = static_cast<int32_t>(circuit.gates.size());
      }
      circuit.gates.push_back(std::move(gate));
    } else if (head.text == "out") {
      if (tokens.size() < 3 ||
          (tokens[2].text == "primary" && tokens.size() != 4) ||
          (tokens[2].text == "garbage" && tokens.size() != 3) ||
          (tokens[2].text != "primary" && tokens[2].text != "garbage")) {
        fail(head.col, "expected 'out <id> primary <label>' or 'out <id> garbage'");
        continue;
      }
      const auto id = check_id(tokens[1]);
      if (!id) {
        continue;
      }
      if (consumed[*id]) {
        fail(tokens[1].col, "line " + tokens[1].text + " is already consumed");
        continue;
      }
      if (tokens[2].text == "primary") {
        circuit.lines[*id].output_label = tokens[3].text;
      } else {
        circuit.lines[*id].garbage = true;
      }
      consumed[*id] = 1;
    } else {
      fail(head.col, "unknown statement '" + head.text + "'");
    }
  }

  if (!header_seen) {
    diags.push_back({line_no == 0 ? 1 : line_no, 1, "missing header: expected 'revnet 1'"});
  } else if (!lines_seen) {
    diags.push_back({line_no, 1, "missing 'lines <count>' statement"});
  }

  if (!diags.empty()) {
    return result;
  }
  auto violations = validate(circuit);
  for (auto& violation : violations) {
    diags.push_back({0, 0, violation});
  }
  if (!diags.empty()) {
    return result;
  }
  result.circuit = std::move(circuit);
  return result;
}

[[nodiscard]] inline std::string serialize_netlist(const Circuit& circuit) {
  std::ostringstream out;
  out << "revnet 1\n";
  out << "lines " << circuit.lines.size() << "\n";
  for (LineId i = 0; i < circuit.lines.size(); ++i) {
    const auto& line = circuit.lines[i];
    if (line.input_label) {
      out << "in " << i << " primary " << *line.input_label << "\n";
    } else if (line.const_value) {
      out << "in " << i << " const " << int(*line.const_value) << "\n";
    }
  }
  for (const auto& gate : circuit.gates) {
    out << "gate " << gate_name(gate.kind);
    for (auto id : gate.inputs) {
      out << " " << id;
    }
    out << " ->";
    for (auto id : gate.outputs) {
      out << " " << id;
    }
    out << "\n";
  }
  for (LineId i = 0; i < circuit.lines.size(); ++i) {
    const auto& line = circuit.lines[i];
    if (line.output_label) {
      out << "out " << i << " primary " << *line.output_label << "\n";
    } else if (line.garbage) {
      out << "out " << i << " garbage\n";
    }
  }
  return out.str();
}

/*! \brief Structural identity: same line roles, gates, and wiring. */
[[nodiscard]] inline bool structurally_equal(const Circuit& lhs, const Circuit& rhs) {
  if (lhs.lines.size() != rhs.lines.size() || lhs.gates.size() != rhs.gates.size()) {
    return false;
  }
  for (size_t i = 0; i < lhs.lines.size(); ++i) {
    const auto& a = lhs.lines[i];
    const auto& b = rhs.lines[i];
    if (a.input_label != b.input_label || a.const_value != b.const_value ||
        a.output_label != b.output_label || a.garbage != b.garbage) {
      return false;
    }
  }
  for (size_t g = 0; g < lhs.gates.size(); ++g) {
    const auto& a = lhs.gates[g];
    const auto& b = rhs.gates[g];
    if (a.kind != b.kind || a.inputs != b.inputs || a.outputs != b.outputs) {
      return false;
    }
  }
  return true;
}

} // namespace revnet

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
  \file circuit.hpp
  \brief Fan-out-free reversible circuits in single-assignment form.

  Every wire segment is a distinct line: each gate consumes its input lines
  and writes fresh output lines.  Fan-out and cycles are therefore
  unrepresentable by construction when circuits are built through
  CircuitBuilder; `validate` re-checks the invariants on arbitrary data
  (e.g. parsed netlists).
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gates.hpp"

namespace revnet {

using LineId = uint32_t;

struct circuit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LineInfo {
  std::optional<std::string> input_label;  ///< primary input, if any
  std::optional<uint8_t> const_value;      ///< constant input, if any
  std::optional<std::string> output_label; ///< primary output, if any
  bool garbage = false;                    ///< garbage output
  int32_t producer = -1;                   ///< producing gate index, -1 = circuit input
  int32_t consumer = -1;                   ///< consuming gate index, -1 = unconsumed

  [[nodiscard]] bool is_input() const { return input_label || const_value; }
  [[nodiscard]] bool is_output() const { return output_label.has_value() || garbage; }
};

struct GateInstance {
  GateKind kind;
  std::vector<LineId> inputs;
  std::vector<LineId> outputs;
};

struct Circuit {
  std::string name;
  std::vector<LineInfo> lines;
  std::vector<GateInstance> gates;

  [[nodiscard]] std::vector<LineId> primary_inputs() const {
    std::vector<LineId> ids;
    for (LineId i = 0; i < lines.size(); ++i) {
      if (lines[i].input_label) {
        ids.push_back(i);
      }
    }
    return ids;
  }

  [[nodiscard]] std::vector<LineId> primary_outputs() const {
    std::vector<LineId> ids;
    for (LineId i = 0; i < lines.size(); ++i) {
      if (lines[i].output_label) {
        ids.push_back(i);
      }
    }
    return ids;
  }

  [[nodiscard]] std::optional<LineId> find_output(std::string_view label) const {
    for (LineId i = 0; i < lines.size(); ++i) {
      if (lines[i].output_label && *lines[i].output_label == label) {
        return i;
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] std::optional<LineId> find_input(std::string_view label) const {
    for (LineId i = 0; i < lines.size(); ++i) {
      if (lines[i].input_label && *lines[i].input_label == label) {
        return i;
      }
    }
    return std::nullopt;
  }
};

/*! \brief Incremental builder enforcing single-assignment wiring. */
class CircuitBuilder {
public:
  explicit CircuitBuilder(std::string name = "") { circuit_.name = std::move(name); }

  LineId add_primary_input(std::string label) {
    LineInfo line;
    line.input_label = std::move(label);
    circuit_.lines.push_back(std::move(line));
    return static_cast<LineId>(circuit_.lines.size() - 1);
  }

  LineId add_constant(uint8_t value) {
    if (value > 1) {
      throw circuit_error("constant line value must be 0 or 1");
    }
    LineInfo line;
    line.const_value = value;
    circuit_.lines.push_back(std::move(line));
    return static_cast<LineId>(circuit_.lines.size() - 1);
  }

  /*! \brief Appends a gate reading `input_ids`; returns the fresh output lines. */
  std::vector<LineId> append_gate(GateKind kind, std::span<const LineId> input_ids) {
    const auto arity = static_cast<size_t>(gate_arity(kind));
    if (input_ids.size() != arity) {
      throw circuit_error(std::string(gate_name(kind)) + " takes " +
                          std::to_string(arity) + " inputs, got " +
                          std::to_string(input_ids.size()));
    }
    for (size_t i = 0; i < input_ids.size(); ++i) {
      const LineId id = input_ids[i];
      if (id >= circuit_.lines.size()) {
        throw circuit_error("unknown line id " + std::to_string(id));
      }
      if (circuit_.lines[id].consumer >= 0) {
        throw circuit_error("fan-out violation: line " + std::to_string(id) +
                            " is already consumed by gate " +
                            std::to_string(circuit_.lines[id].consumer));
      }
      if (circuit_.lines[id].is_output()) {
        throw circuit_error("line " + std::to_string(id) +
                            " is already bound as a circuit output");
      }
      for (size_t j = i + 1; j < input_ids.size(); ++j) {
        if (input_ids[j] == id) {
          throw circuit_error("duplicate line id " + std::to_string(id) +
                              " in one gate");
        }
      }
    }
    const auto gate_index = static_cast<int32_t>(circuit_.gates.size());
    GateInstance gate;
    gate.kind = kind;
    gate.inputs.assign(input_ids.begin(), input_ids.end());
    for (size_t i = 0; i < arity; ++i) {
      circuit_.lines[input_ids[i]].consumer = gate_index;
      LineInfo out;
      out.producer = gate_index;
      circuit_.lines.push_back(std::move(out));
      gate.outputs.push_back(static_cast<LineId>(circuit_.lines.size() - 1));
    }
    circuit_.gates.push_back(std::move(gate));
    return circuit_.gates.back().outputs;
  }

  std::vector<LineId> append_gate(GateKind kind, std::initializer_list<LineId> ids) {
    return append_gate(kind, std::span<const LineId>(ids.begin(), ids.size()));
  }

  void set_primary_output(LineId id, std::string label) {
    check_bindable(id);
    circuit_.lines[id].output_label = std::move(label);
  }

  void set_garbage(LineId id) {
    check_bindable(id);
    circuit_.lines[id].garbage = true;
  }

  [[nodiscard]] Circuit build() && { return std::move(circuit_); }
  [[nodiscard]] const Circuit& peek() const { return circuit_; }

private:
  void check_bindable(LineId id) const {
    if (id >= circuit_.lines.size()) {
      throw circuit_error("unknown line id " + std::to_string(id));
    }
    if (circuit_.lines[id].consumer >= 0) {
      throw circuit_error("line " + std::to_string(id) +
                          " is consumed and cannot be a circuit output");
    }
    if (circuit_.lines[id].is_output()) {
      throw circuit_error("line " + std::to_string(id) + " already has an output role");
    }
  }

  Circuit circuit_;
};

/*! \brief Structural checks; returns human-readable violations, empty = ok. */
[[nodiscard]] inline std::vector<std::string> validate(const Circuit& circuit) {
  std::vector<std::string> violations;
  const auto n_lines = circuit.lines.size();

  std::vector<int> produced(n_lines, 0);
  std::vector<int> consumed(n_lines, 0);
  for (size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    const auto arity = static_cast<size_t>(gate_arity(gate.kind));
    if (gate.inputs.size() != arity || gate.outputs.size() != arity) {
      violations.push_back("gate " + std::to_string(g) + " (" +
                           std::string(gate_name(gate.kind)) + "): arity mismatch");
      continue;
    }
    for (auto id : gate.inputs) {
      if (id >= n_lines) {
        violations.push_back("gate " + std::to_string(g) + ": unknown input line " +
                             std::to_string(id));
        continue;
      }
      consumed[id]++;
    }
    for (auto id : gate.outputs) {
      if (id >= n_lines) {
        violations.push_back("gate " + std::to_string(g) + ": unknown output line " +
                             std::to_string(id));
        continue;
      }
      produced[id]++;
    }
  }

  size_t n_in = 0;
  size_t n_out = 0;
  for (size_t i = 0; i < n_lines; ++i) {
    const auto& line = circuit.lines[i];
    const int sources = produced[i] + (line.is_input() ? 1 : 0);
    if (sources == 0) {
      violations.push_back("line " + std::to_string(i) + ": no source");
    } else if (sources > 1) {
      violations.push_back("line " + std::to_string(i) + ": multiple sources");
    }
    const int sinks = consumed[i] + (line.is_output() ? 1 : 0);
    if (sinks == 0) {
      violations.push_back("line " + std::to_string(i) + ": unbound output");
    } else if (sinks > 1) {
      violations.push_back("line " + std::to_string(i) +
                           ": fan-out (multiple sinks)");
    }
    if (line.input_label && line.const_value) {
      violations.push_back("line " + std::to_string(i) +
                           ": both primary and constant input role");
    }
    if (line.output_label && line.garbage) {
      violations.push_back("line " + std::to_string(i) +
                           ": both primary and garbage output role");
    }
    if (line.is_input()) {
      ++n_in;
    }
    if (line.is_output()) {
      ++n_out;
    }
  }

  // topological order: a gate may only read circuit inputs or outputs of
  // earlier gates
  for (size_t g = 0; g < circuit.gates.size(); ++g) {
    for (auto id : circuit.gates[g].inputs) {
      if (id < n_lines) {
        const auto& line = circuit.lines[id];
        if (!line.is_input() &&
            (line.producer < 0 || static_cast<size_t>(line.producer) >= g)) {
          violations.push_back("gate " + std::to_string(g) + ": input line " +
                               std::to_string(id) + " is not yet defined");
        }
      }
    }
  }

  if (n_in != n_out) {
    violations.push_back("width mismatch: " + std::to_string(n_in) + " inputs vs " +
                         std::to_string(n_out) + " outputs");
  }
  return violations;
}

[[nodiscard]] inline Circuit checked(Circuit circuit) {
  auto violations = validate(circuit);
  if (!violations.empty()) {
    throw circuit_error(circuit.name + ": " + violations.front());
  }
  return circuit;
}

/*! \brief Full simulation trace: one bit per line. */
struct SimTrace {
  std::vector<uint8_t> values; ///< indexed by line id

  [[nodiscard]] uint8_t operator[](LineId id) const { return values[id]; }
};

/*! \brief Simulates with primary-input bits given in declaration order. */
[[nodiscard]] inline SimTrace simulate(const Circuit& circuit,
                                       std::span<const uint8_t> primary_bits) {
  SimTrace trace;
  trace.values.assign(circuit.lines.size(), 0);
  size_t next = 0;
  for (LineId i = 0; i < circuit.lines.size(); ++i) {
    const auto& line = circuit.lines[i];
    if (line.input_label) {
      if (next >= primary_bits.size()) {
        throw circuit_error("simulate: assignment too short");
      }
      trace.values[i] = primary_bits[next++] & 1u;
    } else if (line.const_value) {
      trace.values[i] = *line.const_value;
    }
  }
  if (next != primary_bits.size()) {
    throw circuit_error("simulate: assignment has extra bits");
  }
  uint8_t in[4];
  uint8_t out[4];
  for (const auto& gate : circuit.gates) {
    const auto arity = static_cast<size_t>(gate_arity(gate.kind));
    for (size_t i = 0; i < arity; ++i) {
      in[i] = trace.values[gate.inputs[i]];
    }
    eval_gate_raw(gate.kind, in, out);
    for (size_t i = 0; i < arity; ++i) {
      trace.values[gate.outputs[i]] = out[i];
    }
  }
  return trace;
}

/*! \brief Simulates with a label-keyed assignment over the primary inputs. */
[[nodiscard]] inline SimTrace simulate(const Circuit& circuit,
                                       const std::map<std::string, uint8_t>& assignment) {
  std::vector<uint8_t> bits;
  size_t used = 0;
  for (const auto& line : circuit.lines) {
    if (line.input_label) {
      auto it = assignment.find(*line.input_label);
      if (it == assignment.end()) {
        throw circuit_error("simulate: missing assignment for input '" +
                            *line.input_label + "'");
      }
      bits.push_back(it->second & 1u);
      ++used;
    }
  }
  if (used != assignment.size()) {
    throw circuit_error("simulate: assignment names unknown inputs");
  }
  return simulate(circuit, bits);
}

/*! \brief Gate depth per line: 0 for circuit inputs, 1 + max over a gate's
 * inputs for its outputs.  Every gate costs one stage regardless of kind. */
[[nodiscard]] inline std::vector<int> line_depths(const Circuit& circuit) {
  std::vector<int> depth(circuit.lines.size(), 0);
  for (const auto& gate : circuit.gates) {
    int d = 0;
    for (auto id : gate.inputs) {
      d = std::max(d, depth[id]);
    }
    for (auto id : gate.outputs) {
      depth[id] = d + 1;
    }
  }
  return depth;
}

[[nodiscard]] inline int depth_of(const Circuit& circuit, LineId id) {
  if (id >= circuit.lines.size()) {
    throw circuit_error("depth_of: unknown line id " + std::to_string(id));
  }
  return line_depths(circuit)[id];
}

/*! \brief Per-line arrival times under the functional-dependency timing model:
 * an output becomes ready one stage after the inputs in its support cone, so a
 * pass-through does not wait for the gate's other operands.  Used for
 * analytic-vs-structural delay checks; the PD metric uses line_depths. */
[[nodiscard]] inline std::vector<int> arrival_times(const Circuit& circuit) {
  std::vector<int> arrival(circuit.lines.size(), 0);
  for (const auto& gate : circuit.gates) {
    const int arity = gate_arity(gate.kind);
    for (int o = 0; o < arity; ++o) {
      const uint8_t support = output_support(gate.kind, o);
      int d = 0;
      for (int i = 0; i < arity; ++i) {
        if (support & (1u << i)) {
          d = std::max(d, arrival[gate.inputs[i]]);
        }
      }
      arrival[gate.outputs[o]] = d + 1;
    }
  }
  return arrival;
}

/*! \brief Structural test: every member gate kind preserves parity. */
[[nodiscard]] inline bool circuit_parity_preserving(const Circuit& circuit) {
  return std::all_of(circuit.gates.begin(), circuit.gates.end(),
                     [](const GateInstance& g) { return is_parity_preserving(g.kind); });
}

struct MetricsReport {
  int gc = 0;    ///< gate count
  int ci = 0;    ///< constant inputs
  int go = 0;    ///< garbage outputs
  int alpha = 0; ///< two-input XOR terms
  int beta = 0;  ///< two-input AND terms
  int delta = 0; ///< NOT terms
  int ac = 0;    ///< area: sum of gate widths
  int pd = 0;    ///< path delay: max gate depth over primary outputs

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

[[nodiscard]] inline MetricsReport metrics(const Circuit& circuit) {
  MetricsReport report;
  report.gc = static_cast<int>(circuit.gates.size());
  for (const auto& gate : circuit.gates) {
    const auto cost = cost_attributes(gate.kind);
    report.alpha += cost.alpha;
    report.beta += cost.beta;
    report.delta += cost.delta;
    report.ac += cost.width;
  }
  const auto depth = line_depths(circuit);
  for (LineId i = 0; i < circuit.lines.size(); ++i) {
    const auto& line = circuit.lines[i];
    if (line.const_value) {
      report.ci++;
    }
    if (line.garbage) {
      report.go++;
    }
    if (line.output_label) {
      report.pd = std::max(report.pd, depth[i]);
    }
  }
  return report;
}

} // namespace revnet

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
  \file faults.hpp
  \brief Single bit-flip fault injection and parity-based detection.

  The fault model is a transient flip of one wire segment per trial,
  applied immediately after the wire's value is produced.  A circuit built
  from parity-preserving gates propagates any single flip to a boundary
  parity mismatch, so checking input parity against output parity (garbage
  lines included) detects every such fault.
*/

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace revnet {

struct FaultSite {
  LineId line;
  std::string description; ///< producing gate + output position, or input role
};

/*! \brief One site per line, in line-id order. */
[[nodiscard]] inline std::vector<FaultSite> enumerate_fault_sites(const Circuit& circuit) {
  std::vector<FaultSite> sites;
  sites.reserve(circuit.lines.size());
  for (LineId i = 0; i < circuit.lines.size(); ++i) {
    const auto& line = circuit.lines[i];
    std::string desc;
    if (line.input_label) {
      desc = "primary input " + *line.input_label;
    } else if (line.const_value) {
      desc = "constant " + std::to_string(int(*line.const_value));
    } else {
      const auto& gate = circuit.gates[line.producer];
      int pos = 0;
      for (size_t o = 0; o < gate.outputs.size(); ++o) {
        if (gate.outputs[o] == i) {
          pos = static_cast<int>(o);
        }
      }
      desc = "gate " + std::to_string(line.producer) + " (" +
             std::string(gate_name(gate.kind)) + ") output " + std::to_string(pos);
    }
    sites.push_back({i, std::move(desc)});
  }
  return sites;
}

/*! \brief Simulation with each listed line complemented right after it is
 *  produced; downstream gates see the flipped value.  Listing a line twice
 *  cancels out. */
[[nodiscard]] inline SimTrace simulate_with_faults(const Circuit& circuit,
                                                   std::span<const LineId> flipped,
                                                   std::span<const uint8_t> primary_bits) {
  std::vector<uint8_t> flip(circuit.lines.size(), 0);
  for (auto id : flipped) {
    if (id >= circuit.lines.size()) {
      throw circuit_error("fault site: unknown line id " + std::to_string(id));
    }
    flip[id] ^= 1u;
  }
  SimTrace trace;
  trace.values.assign(circuit.lines.size(), 0);
  size_t next = 0;
  for (LineId i = 0; i < circuit.lines.size(); ++i) {
    const auto& line = circuit.lines[i];
    if (line.input_label) {
      if (next >= primary_bits.size()) {
        throw circuit_error("simulate: assignment too short");
      }
      trace.values[i] = (primary_bits[next++] & 1u) ^ flip[i];
    } else if (line.const_value) {
      trace.values[i] = *line.const_value ^ flip[i];
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
      trace.values[gate.outputs[i]] = out[i] ^ flip[gate.outputs[i]];
    }
  }
  return trace;
}

[[nodiscard]] inline SimTrace simulate_with_fault(const Circuit& circuit,
                                                  const FaultSite& site,
                                                  std::span<const uint8_t> primary_bits) {
  const LineId one[] = {site.line};
  return simulate_with_faults(circuit, one, primary_bits);
}

namespace detail {

[[nodiscard]] inline uint8_t intended_input_parity(const Circuit& circuit,
                                                   std::span<const uint8_t> primary_bits) {
  uint8_t parity = 0;
  size_t next = 0;
  for (const auto& line : circuit.lines) {
    if (line.input_label) {
      parity ^= primary_bits[next++] & 1u;
    } else if (line.const_value) {
      parity ^= *line.const_value;
    }
  }
  return parity;
}

[[nodiscard]] inline uint8_t output_parity(const Circuit& circuit, const SimTrace& trace,
                                           bool primary_only) {
  uint8_t parity = 0;
  for (LineId i = 0; i < circuit.lines.size(); ++i) {
    const auto& line = circuit.lines[i];
    if (line.output_label || (!primary_only && line.garbage)) {
      parity ^= trace[i];
    }
  }
  return parity;
}

} // namespace detail

/*! \brief True iff the checker sees the fault: the parity of the intended
 *  inputs (constants included) differs from the parity of all observed
 *  outputs (garbage included). */
[[nodiscard]] inline bool parity_detects(const Circuit& circuit, const FaultSite& site,
                                         std::span<const uint8_t> primary_bits) {
  const auto trace = simulate_with_fault(circuit, site, primary_bits);
  return detail::intended_input_parity(circuit, primary_bits) !=
         detail::output_parity(circuit, trace, false);
}

struct UndetectedCase {
  FaultSite site;
  std::vector<uint8_t> assignment;
};

struct FaultReport {
  long total_sites = 0;
  long total_trials = 0;
  long detected = 0;
  std::vector<UndetectedCase> undetected_cases;

  [[nodiscard]] double coverage() const {
    return total_trials == 0 ? 1.0 : double(detected) / double(total_trials);
  }
};

struct FaultInputMode {
  bool exhaustive = true;
  long random_trials = 0; ///< assignments per site when not exhaustive
  uint64_t seed = 0;
};

/*! \brief Runs the parity check over all sites x selected assignments.
 *
 *  With `primary_only` the checker is restricted to primary outputs and a
 *  fault counts as detected when their parity deviates from the fault-free
 *  run; garbage-only disturbances then go unseen.
 */
[[nodiscard]] inline FaultReport fault_coverage(const Circuit& circuit,
                                                FaultInputMode mode,
                                                bool primary_only = false) {
  const auto sites = enumerate_fault_sites(circuit);
  const auto n_inputs = circuit.primary_inputs().size();
  if (mode.exhaustive && n_inputs > 22) {
    throw circuit_error("fault_coverage: exhaustive input space too large");
  }

  std::vector<std::vector<uint8_t>> assignments;
  if (mode.exhaustive) {
    for (uint64_t v = 0; v < (uint64_t{1} << n_inputs); ++v) {
      std::vector<uint8_t> bits(n_inputs);
      for (size_t i = 0; i < n_inputs; ++i) {
        bits[i] = (v >> i) & 1u;
      }
      assignments.push_back(std::move(bits));
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    for (long k = 0; k < mode.random_trials; ++k) {
      std::vector<uint8_t> bits(n_inputs);
      for (size_t i = 0; i < n_inputs; ++i) {
        bits[i] = static_cast<uint8_t>(rng() & 1u);
      }
      assignments.push_back(std::move(bits));
    }
  }

  FaultReport report;
  report.total_sites = static_cast<long>(sites.size());
  for (const auto& site : sites) {
    for (const auto& bits : assignments) {
      ++report.total_trials;
      bool detected = false;
      if (primary_only) {
        const auto faulted = simulate_with_fault(circuit, site, bits);
        const auto clean = simulate(circuit, bits);
        detected = detail::output_parity(circuit, faulted, true) !=
                   detail::output_parity(circuit, clean, true);
      } else {
        detected = parity_detects(circuit, site, bits);
      }
      if (detected) {
        ++report.detected;
      } else {
        report.undetected_cases.push_back({site, bits});
      }
    }
  }
  return report;
}

} // namespace revnet

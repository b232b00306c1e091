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
  \file gates.hpp
  \brief The fixed catalog of eight reversible gate species.

  Each gate is an n*n bijection on bit tuples.  Evaluation is bit-exact;
  reversibility and parity preservation are decided by exhaustive
  enumeration of the 2^n truth-table rows.
*/

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revnet {

enum class GateKind : uint8_t { FG, TG, PG, FRG, F2G, NFT, IG, MIG };

inline constexpr std::array<GateKind, 8> all_gate_kinds = {
    GateKind::FG,  GateKind::TG,  GateKind::PG, GateKind::FRG,
    GateKind::F2G, GateKind::NFT, GateKind::IG, GateKind::MIG};

[[nodiscard]] constexpr int gate_arity(GateKind kind) {
  switch (kind) {
  case GateKind::FG:
    return 2;
  case GateKind::TG:
  case GateKind::PG:
  case GateKind::FRG:
  case GateKind::F2G:
  case GateKind::NFT:
    return 3;
  case GateKind::IG:
  case GateKind::MIG:
    return 4;
  }
  return 0;
}

[[nodiscard]] constexpr std::string_view gate_name(GateKind kind) {
  switch (kind) {
  case GateKind::FG:
    return "FG";
  case GateKind::TG:
    return "TG";
  case GateKind::PG:
    return "PG";
  case GateKind::FRG:
    return "FRG";
  case GateKind::F2G:
    return "F2G";
  case GateKind::NFT:
    return "NFT";
  case GateKind::IG:
    return "IG";
  case GateKind::MIG:
    return "MIG";
  }
  return "?";
}

[[nodiscard]] inline std::optional<GateKind> gate_from_name(std::string_view name) {
  for (auto kind : all_gate_kinds) {
    if (gate_name(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

/*! \brief Evaluates a gate on raw bits, writing `gate_arity(kind)` outputs.
 *
 * Inputs are not range-checked; callers pass values in {0,1}.
 */
constexpr void eval_gate_raw(GateKind kind, const uint8_t* in, uint8_t* out) {
  const uint8_t a = in[0];
  const uint8_t b = gate_arity(kind) > 1 ? in[1] : 0;
  const uint8_t c = gate_arity(kind) > 2 ? in[2] : 0;
  const uint8_t d = gate_arity(kind) > 3 ? in[3] : 0;
  switch (kind) {
  case GateKind::FG:
    out[0] = a;
    out[1] = a ^ b;
    break;
  case GateKind::TG:
    out[0] = a;
    out[1] = b;
    out[2] = (a & b) ^ c;
    break;
  case GateKind::PG:
    out[0] = a;
    out[1] = a ^ b;
    out[2] = (a & b) ^ c;
    break;
  case GateKind::FRG:
    out[0] = a;
    out[1] = ((a ^ 1) & b) ^ (a & c);
    out[2] = ((a ^ 1) & c) ^ (a & b);
    break;
  case GateKind::F2G:
    out[0] = a;
    out[1] = a ^ b;
    out[2] = a ^ c;
    break;
  case GateKind::NFT:
    out[0] = a ^ b;
    out[1] = ((b ^ 1) & c) ^ (a & (c ^ 1));
    out[2] = (b & c) ^ (a & (c ^ 1));
    break;
  case GateKind::IG:
    out[0] = a;
    out[1] = a ^ b;
    out[2] = (a & b) ^ c;
    out[3] = (b & d) ^ ((b ^ 1) & (a ^ d));
    break;
  case GateKind::MIG:
    out[0] = a;
    out[1] = a ^ b;
    out[2] = (a & b) ^ c;
    out[3] = (a & (b ^ 1)) ^ d;
    break;
  }
}

[[nodiscard]] inline std::vector<uint8_t> eval_gate(GateKind kind,
                                                    std::span<const uint8_t> inputs) {
  const auto arity = static_cast<size_t>(gate_arity(kind));
  if (inputs.size() != arity) {
    throw std::invalid_argument("eval_gate: " + std::string(gate_name(kind)) +
                                " expects " + std::to_string(arity) + " inputs, got " +
                                std::to_string(inputs.size()));
  }
  for (auto bit : inputs) {
    if (bit > 1) {
      throw std::invalid_argument("eval_gate: inputs must be 0 or 1");
    }
  }
  std::vector<uint8_t> out(arity);
  eval_gate_raw(kind, inputs.data(), out.data());
  return out;
}

[[nodiscard]] inline std::vector<uint8_t> eval_gate(GateKind kind,
                                                    std::initializer_list<uint8_t> inputs) {
  return eval_gate(kind, std::span<const uint8_t>(inputs.begin(), inputs.size()));
}

using TruthRow = std::pair<std::vector<uint8_t>, std::vector<uint8_t>>;

/*! \brief All 2^arity rows in ascending binary input order (first input is the
 * most significant position, matching the written tuple order). */
[[nodiscard]] inline std::vector<TruthRow> truth_table(GateKind kind) {
  const int arity = gate_arity(kind);
  std::vector<TruthRow> rows;
  rows.reserve(size_t{1} << arity);
  for (uint32_t v = 0; v < (1u << arity); ++v) {
    std::vector<uint8_t> in(arity);
    for (int i = 0; i < arity; ++i) {
      in[i] = (v >> (arity - 1 - i)) & 1u;
    }
    rows.emplace_back(in, eval_gate(kind, in));
  }
  return rows;
}

[[nodiscard]] inline bool is_reversible(GateKind kind) {
  const int arity = gate_arity(kind);
  std::vector<bool> seen(size_t{1} << arity, false);
  for (const auto& [in, out] : truth_table(kind)) {
    uint32_t v = 0;
    for (auto bit : out) {
      v = (v << 1) | bit;
    }
    if (seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

[[nodiscard]] inline bool is_parity_preserving(GateKind kind) {
  for (const auto& [in, out] : truth_table(kind)) {
    uint8_t pin = 0;
    uint8_t pout = 0;
    for (auto bit : in) {
      pin ^= bit;
    }
    for (auto bit : out) {
      pout ^= bit;
    }
    if (pin != pout) {
      return false;
    }
  }
  return true;
}

/*! \brief Two-input XOR / two-input AND / NOT term counts of a gate's defining
 * expressions, plus its line width.  Shared subterms are counted once so that
 * circuit-level sums reproduce the published aggregates. */
struct CostAttributes {
  int alpha = 0; ///< two-input XOR terms
  int beta = 0;  ///< two-input AND terms
  int delta = 0; ///< NOT terms
  int width = 0; ///< gate arity, used for area accounting

  friend bool operator==(const CostAttributes&, const CostAttributes&) = default;
};

[[nodiscard]] constexpr CostAttributes cost_attributes(GateKind kind) {
  switch (kind) {
  case GateKind::FG:
    return {1, 0, 0, 2};
  case GateKind::TG:
    return {1, 1, 0, 3};
  case GateKind::PG:
    return {2, 1, 0, 3};
  case GateKind::FRG:
    return {2, 4, 1, 3};
  case GateKind::F2G:
    return {2, 0, 0, 3};
  case GateKind::NFT:
    return {3, 3, 1, 3};
  case GateKind::IG:
    return {4, 3, 1, 4};
  case GateKind::MIG:
    return {3, 2, 1, 4};
  }
  return {};
}

/*! \brief Bitmask of input positions each output position functionally depends
 * on (bit i set = depends on input i).  Pass-through outputs depend only on the
 * line they copy, which matters for arrival-time analysis: a pass-through is
 * ready as soon as its own input is, not when the whole gate's inputs are. */
[[nodiscard]] constexpr uint8_t output_support(GateKind kind, int output_pos) {
  constexpr uint8_t A = 1, B = 2, C = 4, D = 8;
  switch (kind) {
  case GateKind::FG: {
    constexpr uint8_t m[] = {A, A | B};
    return m[output_pos];
  }
  case GateKind::TG: {
    constexpr uint8_t m[] = {A, B, A | B | C};
    return m[output_pos];
  }
  case GateKind::PG: {
    constexpr uint8_t m[] = {A, A | B, A | B | C};
    return m[output_pos];
  }
  case GateKind::FRG: {
    constexpr uint8_t m[] = {A, A | B | C, A | B | C};
    return m[output_pos];
  }
  case GateKind::F2G: {
    constexpr uint8_t m[] = {A, A | B, A | C};
    return m[output_pos];
  }
  case GateKind::NFT: {
    constexpr uint8_t m[] = {A | B, A | B | C, A | B | C};
    return m[output_pos];
  }
  case GateKind::IG:
  case GateKind::MIG: {
    constexpr uint8_t m[] = {A, A | B, A | B | C, A | B | D};
    return m[output_pos];
  }
  }
  return 0;
}

} // namespace revnet

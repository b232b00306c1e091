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
  \file adders.hpp
  \brief Generators for the parity-preserving adder family.

  A 1-bit full adder is two cascaded MIG gates.  Wider adders chain full
  adders into a ripple carry, optionally grouped into carry-skip blocks
  whose skip logic comes in three flavours (two AND-tree variants plus the
  baseline with an extra copy gate).  All generators produce fan-out-free
  circuits whose metrics match the published per-design aggregates.

  Line labels follow one convention throughout: operand bits `a<i>`/`b<i>`,
  carry-in `cin`, sum bits `s<i>`, carry-out `cout` (bit 0 = LSB).
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace revnet {

/*! \brief Carry-skip-logic flavour of a block. */
enum class CsaStyle : uint8_t {
  REF17,     ///< baseline: AND tree of NFTs, NFT skip mux, two copy gates
  NFT_STYLE, ///< AND tree of NFTs, FRG skip mux, one copy gate
  FRG_STYLE, ///< AND tree of FRGs, FRG skip mux, one copy gate
};

[[nodiscard]] constexpr std::string_view csa_style_name(CsaStyle style) {
  switch (style) {
  case CsaStyle::REF17:
    return "ref17";
  case CsaStyle::NFT_STYLE:
    return "nft";
  case CsaStyle::FRG_STYLE:
    return "frg";
  }
  return "?";
}

[[nodiscard]] inline std::optional<CsaStyle> csa_style_from_name(std::string_view name) {
  if (name == "ref17") {
    return CsaStyle::REF17;
  }
  if (name == "nft") {
    return CsaStyle::NFT_STYLE;
  }
  if (name == "frg") {
    return CsaStyle::FRG_STYLE;
  }
  return std::nullopt;
}

/*! \brief Block sizes of an n-bit carry-skip adder. */
struct BlockPlan {
  int n_bits = 0;
  std::vector<int> block_sizes;
};

namespace detail {

struct FullAdderLines {
  LineId sum;    ///< a ^ b ^ cin
  LineId cout;   ///< (a^b)cin ^ ab
  LineId g1;     ///< first MIG pass-through (= a)
  LineId g2;     ///< second MIG pass-through (= a ^ b), the propagate bit
  LineId g3;     ///< fourth output of the second MIG
};

/*! Two cascaded MIGs: MIG(a,b,0,0) -> (a, p, ab, ab'); MIG(p,cin,ab,ab')
 *  -> (p, sum, cout, g3).  Output roles are left to the caller so blocks
 *  can consume the propagate pass-through. */
inline FullAdderLines append_full_adder(CircuitBuilder& builder, LineId a, LineId b,
                                        LineId cin) {
  const auto c0 = builder.add_constant(0);
  const auto c1 = builder.add_constant(0);
  const auto m1 = builder.append_gate(GateKind::MIG, {a, b, c0, c1});
  const auto m2 = builder.append_gate(GateKind::MIG, {m1[1], cin, m1[2], m1[3]});
  return {m2[1], m2[2], m1[0], m2[0], m2[3]};
}

/*! AND of two lines; returns the product line, marks the rest garbage. */
inline LineId append_and2(CircuitBuilder& builder, CsaStyle style, LineId x, LineId y) {
  const auto c0 = builder.add_constant(0);
  if (style == CsaStyle::FRG_STYLE) {
    const auto out = builder.append_gate(GateKind::FRG, {x, c0, y});
    builder.set_garbage(out[0]);
    builder.set_garbage(out[2]);
    return out[1]; // x'*0 ^ x*y = xy
  }
  const auto out = builder.append_gate(GateKind::NFT, {c0, x, y});
  builder.set_garbage(out[0]);
  builder.set_garbage(out[1]);
  return out[2]; // x*y with first input 0
}

/*! Balanced AND tree over the propagate bits. */
inline LineId append_and_tree(CircuitBuilder& builder, CsaStyle style,
                              std::span<const LineId> terms) {
  if (terms.size() == 1) {
    return terms[0];
  }
  const size_t half = (terms.size() + 1) / 2;
  const auto left = append_and_tree(builder, style, terms.subspan(0, half));
  const auto right = append_and_tree(builder, style, terms.subspan(half));
  return append_and2(builder, style, left, right);
}

struct BlockLines {
  std::vector<LineId> sums;
  LineId cout;
};

/*! One carry-skip block: b full adders rippling from a copied carry-in,
 *  an AND tree over the propagate bits, and a skip mux selecting between
 *  the rippled carry and the carry-in copy. */
inline BlockLines append_csa_block(CircuitBuilder& builder, CsaStyle style,
                                   std::span<const LineId> a, std::span<const LineId> b,
                                   LineId cin) {
  const size_t width = a.size();

  // duplicate the block carry-in for the ripple chain and the skip mux
  const auto z0 = builder.add_constant(0);
  const auto z1 = builder.add_constant(0);
  const auto copies = builder.append_gate(GateKind::F2G, {cin, z0, z1});
  builder.set_garbage(copies[0]);
  const auto cin_ripple = copies[1];
  const auto cin_mux = copies[2];

  BlockLines block;
  std::vector<LineId> propagate;
  LineId carry = cin_ripple;
  for (size_t i = 0; i < width; ++i) {
    const auto fa = append_full_adder(builder, a[i], b[i], carry);
    builder.set_garbage(fa.g1);
    builder.set_garbage(fa.g3);
    block.sums.push_back(fa.sum);
    propagate.push_back(fa.g2);
    carry = fa.cout;
  }
  const auto c_ripple = carry;
  LineId p = append_and_tree(builder, style, propagate);

  if (style == CsaStyle::REF17) {
    // the baseline routes P through an extra copy gate before the mux
    const auto y0 = builder.add_constant(0);
    const auto y1 = builder.add_constant(0);
    const auto p_copies = builder.append_gate(GateKind::F2G, {p, y0, y1});
    builder.set_garbage(p_copies[1]);
    builder.set_garbage(p_copies[2]);
    p = p_copies[0];
    const auto mux = builder.append_gate(GateKind::NFT, {c_ripple, cin_mux, p});
    builder.set_garbage(mux[0]);
    builder.set_garbage(mux[1]);
    block.cout = mux[2]; // P*cin ^ P'*c_ripple
  } else {
    const auto mux = builder.append_gate(GateKind::FRG, {p, cin_mux, c_ripple});
    builder.set_garbage(mux[0]);
    builder.set_garbage(mux[1]);
    block.cout = mux[2]; // P'*c_ripple ^ P*cin
  }
  return block;
}

inline std::vector<LineId> add_operand(CircuitBuilder& builder, char prefix, int from,
                                       int count) {
  std::vector<LineId> ids;
  for (int i = 0; i < count; ++i) {
    ids.push_back(builder.add_primary_input(prefix + std::to_string(from + i)));
  }
  return ids;
}

} // namespace detail

/*! \brief 1-bit fault-tolerant full adder: two MIGs, 2 constants, 3 garbage. */
[[nodiscard]] inline Circuit gen_ftfa() {
  CircuitBuilder builder("ftfa");
  const auto a = builder.add_primary_input("a0");
  const auto b = builder.add_primary_input("b0");
  const auto cin = builder.add_primary_input("cin");
  const auto fa = detail::append_full_adder(builder, a, b, cin);
  builder.set_primary_output(fa.sum, "s0");
  builder.set_primary_output(fa.cout, "cout");
  builder.set_garbage(fa.g1);
  builder.set_garbage(fa.g2);
  builder.set_garbage(fa.g3);
  return checked(std::move(builder).build());
}

/*! \brief The non-parity-preserving reference full adder: two Peres gates,
 *  1 constant, 2 garbage.  Used as the counter-example in fault campaigns. */
[[nodiscard]] inline Circuit gen_pg_adder() {
  CircuitBuilder builder("pg_adder");
  const auto a = builder.add_primary_input("a0");
  const auto b = builder.add_primary_input("b0");
  const auto cin = builder.add_primary_input("cin");
  const auto c0 = builder.add_constant(0);
  const auto p1 = builder.append_gate(GateKind::PG, {a, b, c0});
  const auto p2 = builder.append_gate(GateKind::PG, {p1[1], cin, p1[2]});
  builder.set_garbage(p1[0]);
  builder.set_garbage(p2[0]);
  builder.set_primary_output(p2[1], "s0");
  builder.set_primary_output(p2[2], "cout");
  return checked(std::move(builder).build());
}

/*! \brief N-bit ripple-carry adder: n chained full adders. */
[[nodiscard]] inline Circuit gen_rca(int n) {
  if (n < 1) {
    throw circuit_error("gen_rca: width must be >= 1");
  }
  CircuitBuilder builder("rca" + std::to_string(n));
  const auto a = detail::add_operand(builder, 'a', 0, n);
  const auto b = detail::add_operand(builder, 'b', 0, n);
  LineId carry = builder.add_primary_input("cin");
  for (int i = 0; i < n; ++i) {
    const auto fa = detail::append_full_adder(builder, a[i], b[i], carry);
    builder.set_primary_output(fa.sum, "s" + std::to_string(i));
    builder.set_garbage(fa.g1);
    builder.set_garbage(fa.g2);
    builder.set_garbage(fa.g3);
    carry = fa.cout;
  }
  builder.set_primary_output(carry, "cout");
  return checked(std::move(builder).build());
}

/*! \brief Standalone b-bit carry-skip block. */
[[nodiscard]] inline Circuit gen_csa_block(int b, CsaStyle style) {
  if (b < 2) {
    throw circuit_error("gen_csa_block: block width must be >= 2");
  }
  CircuitBuilder builder("csa_block_b" + std::to_string(b) + "_" +
                         std::string(csa_style_name(style)));
  const auto a_ids = detail::add_operand(builder, 'a', 0, b);
  const auto b_ids = detail::add_operand(builder, 'b', 0, b);
  const auto cin = builder.add_primary_input("cin");
  const auto block = detail::append_csa_block(builder, style, a_ids, b_ids, cin);
  for (int i = 0; i < b; ++i) {
    builder.set_primary_output(block.sums[i], "s" + std::to_string(i));
  }
  builder.set_primary_output(block.cout, "cout");
  return checked(std::move(builder).build());
}

namespace detail {

[[nodiscard]] inline Circuit gen_csa_from_plan(const BlockPlan& plan, CsaStyle style,
                                               std::string name) {
  CircuitBuilder builder(std::move(name));
  std::vector<std::vector<LineId>> a_blocks;
  std::vector<std::vector<LineId>> b_blocks;
  int bit = 0;
  for (int width : plan.block_sizes) {
    a_blocks.push_back(add_operand(builder, 'a', bit, width));
    b_blocks.push_back(add_operand(builder, 'b', bit, width));
    bit += width;
  }
  LineId carry = builder.add_primary_input("cin");
  bit = 0;
  for (size_t k = 0; k < plan.block_sizes.size(); ++k) {
    const auto block =
        append_csa_block(builder, style, a_blocks[k], b_blocks[k], carry);
    for (size_t i = 0; i < block.sums.size(); ++i) {
      builder.set_primary_output(block.sums[i], "s" + std::to_string(bit + int(i)));
    }
    carry = block.cout;
    bit += plan.block_sizes[k];
  }
  builder.set_primary_output(carry, "cout");
  return checked(std::move(builder).build());
}

} // namespace detail

/*! \brief Fixed-block-size plan; a remainder smaller than 2 borrows from the
 *  last full block so every block stays skippable. */
[[nodiscard]] inline BlockPlan block_sizes_fixed(int n, int b) {
  if (b < 2 || n < b) {
    throw circuit_error("block_sizes_fixed: need n >= b >= 2");
  }
  BlockPlan plan;
  plan.n_bits = n;
  plan.block_sizes.assign(static_cast<size_t>(n / b), b);
  const int remainder = n % b;
  if (remainder >= 2) {
    plan.block_sizes.push_back(remainder);
  } else if (remainder == 1) {
    if (b > 2) {
      plan.block_sizes.back() -= 1;
      plan.block_sizes.push_back(2);
    } else {
      plan.block_sizes.back() += 1;
    }
  }
  return plan;
}

/*! \brief N-bit carry-skip adder with fixed block size b. */
[[nodiscard]] inline Circuit gen_csa_fixed(int n, int b, CsaStyle style) {
  const auto plan = block_sizes_fixed(n, b);
  return detail::gen_csa_from_plan(plan, style,
                                   "csa_fixed_n" + std::to_string(n) + "_b" +
                                       std::to_string(b) + "_" +
                                       std::string(csa_style_name(style)));
}

/*! \brief Palindromic variable-block plan: ideal sizes b, b+1, ..., b+t/2-1
 *  mirrored, with b = n/t - t/4 + 1/2 rounded to the nearest integer and the
 *  two middle blocks corrected so the sizes sum to n. */
[[nodiscard]] inline BlockPlan block_sizes_variable(int n, int t) {
  if (t < 2 || t % 2 != 0) {
    throw circuit_error("block_sizes_variable: block count must be even and >= 2");
  }
  const double b_real = double(n) / t - double(t) / 4.0 + 0.5;
  const int b = static_cast<int>(std::lround(b_real));
  if (b < 1) {
    throw circuit_error("block_sizes_variable: infeasible (b < 1 after rounding)");
  }
  BlockPlan plan;
  plan.n_bits = n;
  for (int i = 0; i < t / 2; ++i) {
    plan.block_sizes.push_back(b + i);
  }
  for (int i = t / 2 - 1; i >= 0; --i) {
    plan.block_sizes.push_back(b + i);
  }
  int diff = n - std::accumulate(plan.block_sizes.begin(), plan.block_sizes.end(), 0);
  // correct the two middle blocks, keeping the palindrome where possible
  auto& mid_lo = plan.block_sizes[t / 2 - 1];
  auto& mid_hi = plan.block_sizes[t / 2];
  mid_lo += diff / 2 + diff % 2;
  mid_hi += diff / 2;
  for (int size : plan.block_sizes) {
    if (size < 1) {
      throw circuit_error("block_sizes_variable: infeasible for n=" +
                          std::to_string(n) + ", t=" + std::to_string(t));
    }
  }
  return plan;
}

/*! \brief N-bit carry-skip adder with t variable-size blocks. */
[[nodiscard]] inline Circuit gen_csa_variable(int n, int t, CsaStyle style) {
  const auto plan = block_sizes_variable(n, t);
  for (int size : plan.block_sizes) {
    if (size < 2) {
      throw circuit_error("gen_csa_variable: plan contains a block narrower than 2");
    }
  }
  return detail::gen_csa_from_plan(plan, style,
                                   "csa_variable_n" + std::to_string(n) + "_t" +
                                       std::to_string(t) + "_" +
                                       std::string(csa_style_name(style)));
}

/*! \brief Packs integer operands into a label-keyed assignment (bit 0 = LSB). */
[[nodiscard]] inline std::map<std::string, uint8_t>
adder_assignment(int n, uint64_t a, uint64_t b, uint8_t cin) {
  std::map<std::string, uint8_t> assignment;
  for (int i = 0; i < n; ++i) {
    assignment["a" + std::to_string(i)] = (a >> i) & 1u;
    assignment["b" + std::to_string(i)] = (b >> i) & 1u;
  }
  assignment["cin"] = cin & 1u;
  return assignment;
}

/*! \brief Reads back (sum, cout) from a simulated adder trace. */
struct AdderResult {
  uint64_t sum = 0;
  uint8_t cout = 0;
};

[[nodiscard]] inline AdderResult read_adder_outputs(const Circuit& circuit,
                                                    const SimTrace& trace, int n) {
  AdderResult result;
  for (int i = 0; i < n; ++i) {
    const auto id = circuit.find_output("s" + std::to_string(i));
    if (!id) {
      throw circuit_error("missing sum output s" + std::to_string(i));
    }
    result.sum |= uint64_t{trace[*id]} << i;
  }
  const auto cout = circuit.find_output("cout");
  if (!cout) {
    throw circuit_error("missing cout output");
  }
  result.cout = trace[*cout];
  return result;
}

} // namespace revnet

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
  \file delay.hpp
  \brief Closed-form worst-case delay models for carry-skip adders.

  Delays are in abstract gate-delay units.  The fixed-block model covers the
  exact per-block composition and its smooth approximation (valid for small
  blocks where ceil(log2 B) ~ B/2), the variable-block model the palindromic
  block plans, and the baselines the two published competitor families.
  Optimal block parameters are kept real-valued; rounding happens only when a
  parameter feeds a concrete circuit plan.
*/

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "adders.hpp"
#include "circuit.hpp"

namespace revnet {

enum class DelayFamily : uint8_t { STUDY, REF17, REF15 };
enum class DelayScheme : uint8_t { FIXED, VARIABLE };

[[nodiscard]] constexpr std::string_view delay_family_name(DelayFamily family) {
  switch (family) {
  case DelayFamily::STUDY:
    return "study";
  case DelayFamily::REF17:
    return "ref17";
  case DelayFamily::REF15:
    return "ref15";
  }
  return "?";
}

[[nodiscard]] constexpr std::string_view delay_scheme_name(DelayScheme scheme) {
  return scheme == DelayScheme::FIXED ? "fixed" : "variable";
}

struct DelayModelId {
  DelayFamily family;
  DelayScheme scheme;

  friend bool operator==(const DelayModelId&, const DelayModelId&) = default;
};

inline constexpr std::array<DelayModelId, 6> all_delay_models = {{
    {DelayFamily::STUDY, DelayScheme::FIXED},
    {DelayFamily::STUDY, DelayScheme::VARIABLE},
    {DelayFamily::REF17, DelayScheme::FIXED},
    {DelayFamily::REF17, DelayScheme::VARIABLE},
    {DelayFamily::REF15, DelayScheme::FIXED},
    {DelayFamily::REF15, DelayScheme::VARIABLE},
}};

struct DelayResult {
  double value = 0.0;         ///< delay in gate-delay units
  double n = 0.0;             ///< adder width the query used
  double param = 0.0;         ///< block size B or block count t
  double optimal_param = 0.0; ///< real-valued optimum, 0 when not an optimized query
};

[[nodiscard]] inline int ceil_log2(int value) {
  if (value < 1) {
    throw std::invalid_argument("ceil_log2: argument must be positive");
  }
  int bits = 0;
  int pow2 = 1;
  while (pow2 < value) {
    pow2 *= 2;
    ++bits;
  }
  return bits;
}

/*! \brief Delay to produce a block's usable carry via the ripple chain. */
[[nodiscard]] inline int d_ripple(int b) {
  if (b < 1) {
    throw std::invalid_argument("d_ripple: block size must be >= 1");
  }
  return b + 3;
}

/*! \brief Delay to produce a block's usable carry via the skip path. */
[[nodiscard]] inline int d_skip(int b) {
  if (b < 1) {
    throw std::invalid_argument("d_skip: block size must be >= 1");
  }
  return ceil_log2(b) + 4;
}

enum class FixedDelayMode : uint8_t { EXACT_EQ3, APPROX_EQ4 };

/*! \brief Worst-case delay of an n-bit fixed-block carry-skip adder:
 *  ripple through the first block, skip across the middle, ripple through
 *  the last.  The approximation substitutes ceil(log2 b) ~ b/2. */
[[nodiscard]] inline DelayResult t_fixed(double n, double b, FixedDelayMode mode) {
  if (n < b || b < 1) {
    throw std::invalid_argument("t_fixed: need n >= b >= 1");
  }
  DelayResult result;
  result.n = n;
  result.param = b;
  if (mode == FixedDelayMode::EXACT_EQ3) {
    if (n / b < 2.0) {
      throw std::invalid_argument("t_fixed: exact form needs at least two blocks");
    }
    const int bi = static_cast<int>(std::llround(b));
    result.value = (b + 3) + (n / b - 2) * (ceil_log2(bi) + 4) + (b + 3);
  } else {
    result.value = b + n / 2 + 4 * n / b - 2;
  }
  return result;
}

/*! \brief Real-valued block size minimizing the approximate fixed delay. */
[[nodiscard]] inline double b_opt(double n) {
  if (n < 1) {
    throw std::invalid_argument("b_opt: width must be >= 1");
  }
  return std::sqrt(4.0 * n);
}

/*! \brief Approximate fixed delay at the optimal block size. */
[[nodiscard]] inline double t_fixed_opt(double n) {
  if (n < 1) {
    throw std::invalid_argument("t_fixed_opt: width must be >= 1");
  }
  return n / 2 + 4 * std::sqrt(n) - 2;
}

/*! \brief Ideal first-block width of a t-block palindromic plan. */
[[nodiscard]] inline double variable_first_block(double n, int t) {
  return n / t - t / 4.0 + 0.5;
}

enum class VariableDelayMode : uint8_t { EXACT_EQ9, APPROX_EQ12 };

/*! \brief Worst-case delay of an n-bit variable-block carry-skip adder with t
 *  blocks.  The exact form sums skip delays over the inner block sizes; a
 *  fractional ideal width is rounded up for the integer summation span. */
[[nodiscard]] inline DelayResult t_variable(double n, int t, VariableDelayMode mode) {
  if (t < 2 || t % 2 != 0) {
    throw std::invalid_argument("t_variable: block count must be even and >= 2");
  }
  const double b = variable_first_block(n, t);
  if (b < 1.0) {
    throw std::invalid_argument("t_variable: infeasible first-block width");
  }
  DelayResult result;
  result.n = n;
  result.param = t;
  if (mode == VariableDelayMode::EXACT_EQ9) {
    const int b_lo = static_cast<int>(std::ceil(b));
    double sum = 0.0;
    for (int k = b_lo + 1; k <= b_lo + t / 2 - 1; ++k) {
      sum += ceil_log2(k) + 4;
    }
    result.value = 2 * (b + 3) + 2 * sum;
  } else {
    result.value = 15.0 * t / 4.0 - 1.5 + n / t + n / 2;
  }
  return result;
}

/*! \brief Real-valued block count minimizing the approximate variable delay. */
[[nodiscard]] inline double t_opt_variable(double n) {
  if (n < 1) {
    throw std::invalid_argument("t_opt_variable: width must be >= 1");
  }
  return 2.0 / std::sqrt(15.0) * std::sqrt(n);
}

/*! \brief Approximate variable delay at the optimal block count. */
[[nodiscard]] inline double t_variable_opt(double n) {
  if (n < 1) {
    throw std::invalid_argument("t_variable_opt: width must be >= 1");
  }
  return n / 2 + std::sqrt(15.0) * std::sqrt(n) - 1.5;
}

/*! \brief Optimized delay of a (family, scheme) model at width n, with the
 *  accompanying real-valued optimal block parameter. */
[[nodiscard]] inline DelayResult baseline_delay(DelayModelId model, double n) {
  if (n < 1) {
    throw std::invalid_argument("baseline_delay: width must be >= 1");
  }
  const double sqrt_n = std::sqrt(n);
  DelayResult result;
  result.n = n;
  switch (model.family) {
  case DelayFamily::STUDY:
    if (model.scheme == DelayScheme::FIXED) {
      result.value = t_fixed_opt(n);
      result.optimal_param = b_opt(n);
    } else {
      result.value = t_variable_opt(n);
      result.optimal_param = t_opt_variable(n);
    }
    break;
  case DelayFamily::REF17:
    if (model.scheme == DelayScheme::FIXED) {
      result.value = n / 2 + 4.47 * sqrt_n - 4;
      result.optimal_param = std::sqrt(5.0 * n);
    } else {
      result.value = n / 2 + std::sqrt(19.0) * sqrt_n - 3.5;
      result.optimal_param = 2.0 / std::sqrt(19.0) * sqrt_n;
    }
    break;
  case DelayFamily::REF15:
    if (model.scheme == DelayScheme::FIXED) {
      result.value = n / 2 + 7.75 * sqrt_n - 4;
      result.optimal_param = std::sqrt(5.0 * n / 3.0);
    } else {
      result.value = n / 2 + std::sqrt(51.0) * sqrt_n - 2.5;
      result.optimal_param = 2.0 * std::sqrt(51.0) / 17.0 * sqrt_n;
    }
    break;
  }
  result.param = result.optimal_param;
  return result;
}

struct SweepRow {
  int n;
  DelayModelId model;
  double delay;
  double optimal_param;
};

/*! \brief Delay-vs-width table, one row per (n, model); n outer, model order
 *  as listed (study, ref17, ref15; fixed before variable). */
[[nodiscard]] inline std::vector<SweepRow>
sweep(std::span<const DelayModelId> models, std::span<const int> n_values) {
  if (models.empty() || n_values.empty()) {
    throw std::invalid_argument("sweep: empty model or width list");
  }
  std::vector<SweepRow> rows;
  rows.reserve(models.size() * n_values.size());
  for (int n : n_values) {
    for (const auto& model : models) {
      const auto delay = baseline_delay(model, n);
      rows.push_back({n, model, delay.value, delay.optimal_param});
    }
  }
  return rows;
}

/*! \brief Width beyond which the optimized study delay beats a baseline
 *  (same scheme): the crossover of the two closed forms. */
[[nodiscard]] inline double crossover_width(DelayScheme scheme, DelayFamily baseline) {
  // both curve pairs share the n/2 term; solve c1*sqrt(n)+k1 = c2*sqrt(n)+k2
  double c_study = 0.0, k_study = 0.0, c_base = 0.0, k_base = 0.0;
  if (scheme == DelayScheme::FIXED) {
    c_study = 4.0;
    k_study = -2.0;
    c_base = baseline == DelayFamily::REF17 ? 4.47 : 7.75;
    k_base = -4.0;
  } else {
    c_study = std::sqrt(15.0);
    k_study = -1.5;
    c_base = baseline == DelayFamily::REF17 ? std::sqrt(19.0) : std::sqrt(51.0);
    k_base = baseline == DelayFamily::REF17 ? -3.5 : -2.5;
  }
  const double sqrt_n = (k_study - k_base) / (c_base - c_study);
  return sqrt_n * sqrt_n;
}

struct StructuralCheckRow {
  int b;
  int ripple_structural;
  int ripple_formula;
  int skip_structural;
  int skip_formula;

  [[nodiscard]] int ripple_delta() const { return ripple_structural - ripple_formula; }
  [[nodiscard]] int skip_delta() const { return skip_structural - skip_formula; }
};

/*! \brief Compares the closed forms against generated blocks.
 *
 * The structural figure is the arrival time of the block's carry at the point
 * the next stage can use it: arrival of the skip mux's data input, plus the
 * mux stage, plus the carry hand-off copy the following block applies.  Both
 * mux data paths are measured: the rippled carry and the propagate AND tree.
 */
[[nodiscard]] inline std::vector<StructuralCheckRow>
validate_against_structure(CsaStyle style, std::span<const int> b_values) {
  std::vector<StructuralCheckRow> rows;
  for (int b : b_values) {
    const auto circuit = gen_csa_block(b, style);
    const auto arrival = arrival_times(circuit);
    const auto cout_id = circuit.find_output("cout");
    if (!cout_id) {
      throw circuit_error("block has no cout output");
    }
    const auto& mux = circuit.gates[circuit.lines[*cout_id].producer];
    // mux operand positions: FRG(P, cin, c_ripple) or NFT(c_ripple, cin, P)
    const LineId c_ripple = style == CsaStyle::REF17 ? mux.inputs[0] : mux.inputs[2];
    const LineId p_root = style == CsaStyle::REF17 ? mux.inputs[2] : mux.inputs[0];
    constexpr int mux_stage = 1;
    constexpr int handoff_stage = 1;
    StructuralCheckRow row;
    row.b = b;
    row.ripple_structural = arrival[c_ripple] + mux_stage + handoff_stage;
    row.ripple_formula = d_ripple(b);
    row.skip_structural = arrival[p_root] + mux_stage + handoff_stage;
    row.skip_formula = d_skip(b);
    rows.push_back(row);
  }
  return rows;
}

} // namespace revnet

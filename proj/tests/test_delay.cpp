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

#include <catch_amalgamated.hpp>

#include <revnet/delay.hpp>

#include <cmath>

using namespace revnet;
using Catch::Matchers::WithinAbs;

TEST_CASE("per-block delay pieces")
{
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
  CHECK_THROWS_AS(ceil_log2(0), std::invalid_argument);
  CHECK(d_ripple(4) == 7);
  CHECK(d_skip(4) == 6);
  CHECK(d_skip(8) == 7);
}

TEST_CASE("fixed-block delay closed forms")
{
  CHECK_THAT(t_fixed(16, 4, FixedDelayMode::EXACT_EQ3).value, WithinAbs(26.0, 1e-12));
  CHECK_THAT(t_fixed(16, 8, FixedDelayMode::APPROX_EQ4).value, WithinAbs(22.0, 1e-12));
  CHECK_THAT(b_opt(16), WithinAbs(8.0, 1e-12));
  CHECK_THAT(t_fixed_opt(16), WithinAbs(22.0, 1e-12));
  CHECK_THROWS_AS(t_fixed(4, 8, FixedDelayMode::EXACT_EQ3), std::invalid_argument);
  CHECK_THROWS_AS(t_fixed(6, 4, FixedDelayMode::EXACT_EQ3), std::invalid_argument);
}

TEST_CASE("exact and approximate fixed forms coincide when ceil(log2 b) = b/2")
{
  for (double n : {8.0, 16.0, 24.0, 32.0, 64.0}) {
    for (double b : {2.0, 4.0}) {
      const auto exact = t_fixed(n, b, FixedDelayMode::EXACT_EQ3).value;
      const auto approx = t_fixed(n, b, FixedDelayMode::APPROX_EQ4).value;
      CHECK_THAT(exact, WithinAbs(approx, 1e-9));
    }
  }
}

TEST_CASE("variable-block delay closed forms")
{
  CHECK_THAT(t_variable(16, 2, VariableDelayMode::EXACT_EQ9).value,
             WithinAbs(22.0, 1e-12));
  CHECK_THAT(t_variable(16, 2, VariableDelayMode::APPROX_EQ12).value,
             WithinAbs(22.0, 1e-12));
  CHECK_THAT(t_variable_opt(16), WithinAbs(8.0 + 4.0 * std::sqrt(15.0) - 1.5, 1e-9));
  CHECK_THROWS_AS(t_variable(16, 3, VariableDelayMode::EXACT_EQ9),
                  std::invalid_argument);
}

TEST_CASE("optimal parameters bracket the minimum")
{
  for (double n : {16.0, 64.0, 256.0}) {
    const double b = b_opt(n);
    const auto at = [&](double x) {
      return t_fixed(n, x, FixedDelayMode::APPROX_EQ4).value;
    };
    CHECK(at(b - 0.5) > at(b));
    CHECK(at(b + 0.5) > at(b));
    CHECK_THAT(at(b), WithinAbs(t_fixed_opt(n), 1e-9));

    const double t = t_opt_variable(n);
    const auto var_at = [&](double x) { return 15.0 * x / 4.0 - 1.5 + n / x + n / 2; };
    CHECK(var_at(t - 0.5) > var_at(t));
    CHECK(var_at(t + 0.5) > var_at(t));
    CHECK_THAT(var_at(t), WithinAbs(t_variable_opt(n), 1e-9));
  }
}

TEST_CASE("optimized delays grow monotonically in width")
{
  for (const auto& model : all_delay_models) {
    double previous = 0.0;
    for (int n = 8; n <= 512; n *= 2) {
      const auto delay = baseline_delay(model, n);
      CHECK(delay.value > previous);
      previous = delay.value;
    }
  }
}

TEST_CASE("published baseline delays at n=16")
{
  const auto ref17_fixed =
      baseline_delay({DelayFamily::REF17, DelayScheme::FIXED}, 16);
  CHECK_THAT(ref17_fixed.value, WithinAbs(21.88, 1e-9));
  CHECK_THAT(ref17_fixed.optimal_param, WithinAbs(std::sqrt(80.0), 1e-9));
  const auto ref15_fixed =
      baseline_delay({DelayFamily::REF15, DelayScheme::FIXED}, 16);
  CHECK_THAT(ref15_fixed.value, WithinAbs(35.0, 1e-9));
  const auto study_fixed =
      baseline_delay({DelayFamily::STUDY, DelayScheme::FIXED}, 16);
  CHECK_THAT(study_fixed.value, WithinAbs(22.0, 1e-9));
  CHECK_THAT(study_fixed.optimal_param, WithinAbs(8.0, 1e-9));
}

TEST_CASE("sweep tabulates n-major, model-minor and is deterministic")
{
  const int widths[] = {16, 32};
  const auto rows = sweep(all_delay_models, widths);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].n == 16);
  CHECK(rows[0].model == DelayModelId{DelayFamily::STUDY, DelayScheme::FIXED});
  CHECK(rows[5].n == 16);
  CHECK(rows[5].model == DelayModelId{DelayFamily::REF15, DelayScheme::VARIABLE});
  CHECK(rows[6].n == 32);
  const auto again = sweep(all_delay_models, widths);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].delay == again[i].delay);
    CHECK(rows[i].optimal_param == again[i].optimal_param);
  }
  CHECK_THROWS_AS(sweep(all_delay_models, std::span<const int>{}),
                  std::invalid_argument);
}

TEST_CASE("the study curves undercut the baselines beyond the crossover")
{
  const double fixed_ref17 = crossover_width(DelayScheme::FIXED, DelayFamily::REF17);
  const double var_ref17 = crossover_width(DelayScheme::VARIABLE, DelayFamily::REF17);
  CHECK_THAT(fixed_ref17, WithinAbs(18.107741, 1e-5));
  CHECK_THAT(var_ref17, WithinAbs(16.940972, 1e-5));
  for (int n = 25; n <= 512; ++n) {
    const auto study = baseline_delay({DelayFamily::STUDY, DelayScheme::FIXED}, n);
    const auto ref17 = baseline_delay({DelayFamily::REF17, DelayScheme::FIXED}, n);
    const auto ref15 = baseline_delay({DelayFamily::REF15, DelayScheme::FIXED}, n);
    CHECK(study.value < ref17.value);
    CHECK(ref17.value < ref15.value);
  }
  for (int n = 17; n <= 512; ++n) {
    const auto study = baseline_delay({DelayFamily::STUDY, DelayScheme::VARIABLE}, n);
    const auto ref17 = baseline_delay({DelayFamily::REF17, DelayScheme::VARIABLE}, n);
    CHECK(study.value < ref17.value);
  }
}

TEST_CASE("generated blocks reproduce the closed-form block delays")
{
  const int widths[] = {2, 3, 4, 6, 8};
  for (auto style : {CsaStyle::NFT_STYLE, CsaStyle::FRG_STYLE}) {
    const auto rows = validate_against_structure(style, widths);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
      INFO("style " << csa_style_name(style) << " b=" << row.b);
      CHECK(row.ripple_structural == row.ripple_formula);
      CHECK(row.skip_structural == row.skip_formula);
      CHECK(row.ripple_formula == row.b + 3);
      CHECK(row.skip_formula == ceil_log2(row.b) + 4);
    }
  }
  // the baseline's extra copy gate costs one stage on the skip path
  for (const auto& row : validate_against_structure(CsaStyle::REF17, widths)) {
    CHECK(row.ripple_delta() == 0);
    CHECK(row.skip_delta() == 1);
  }
}

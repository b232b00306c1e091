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

#include <revnet/adders.hpp>
#include <revnet/faults.hpp>

using namespace revnet;

TEST_CASE("one fault site per line, in line order")
{
  const auto circuit = gen_ftfa();
  const auto sites = enumerate_fault_sites(circuit);
  REQUIRE(sites.size() == 13);
  for (size_t i = 0; i < sites.size(); ++i) {
    CHECK(sites[i].line == LineId(i));
  }
  CHECK(sites[0].description == "primary input a0");
  CHECK(sites[3].description == "constant 0");
  CHECK(sites[5].description == "gate 0 (MIG) output 0");
  CHECK(sites[12].description == "gate 1 (MIG) output 3");
}

TEST_CASE("a flipped line propagates downstream")
{
  const auto circuit = gen_ftfa();
  // a=1, b=0, cin=0: sum=1, cout=0; flipping the carry-in input flips both
  const std::vector<uint8_t> bits = {1, 0, 0};
  const auto cin_line = *circuit.find_input("cin");
  const auto faulted = simulate_with_fault(circuit, {cin_line, ""}, bits);
  const auto result = read_adder_outputs(circuit, faulted, 1);
  CHECK(result.sum == 0);
  CHECK(result.cout == 1);
}

TEST_CASE("flipping the same line twice cancels out")
{
  const auto circuit = gen_ftfa();
  const std::vector<uint8_t> bits = {1, 1, 0};
  const LineId twice[] = {5, 5};
  const auto faulted = simulate_with_faults(circuit, twice, bits);
  const auto clean = simulate(circuit, bits);
  CHECK(faulted.values == clean.values);
  CHECK_THROWS_AS(simulate_with_fault(circuit, {LineId{99}, ""}, bits), circuit_error);
}

TEST_CASE("parity flags every single fault in a parity-preserving circuit")
{
  const auto circuit = gen_ftfa();
  for (const auto& site : enumerate_fault_sites(circuit)) {
    for (uint32_t v = 0; v < 8; ++v) {
      const std::vector<uint8_t> bits = {uint8_t(v & 1), uint8_t((v >> 1) & 1),
                                         uint8_t((v >> 2) & 1)};
      CHECK(parity_detects(circuit, site, bits));
    }
  }
}

TEST_CASE("parity is blind to an even number of faults")
{
  const auto circuit = gen_ftfa();
  for (uint32_t v = 0; v < 8; ++v) {
    const std::vector<uint8_t> bits = {uint8_t(v & 1), uint8_t((v >> 1) & 1),
                                       uint8_t((v >> 2) & 1)};
    const LineId pair[] = {5, 12}; // two garbage-bound lines
    const auto faulted = simulate_with_faults(circuit, pair, bits);
    uint8_t pin = 0;
    uint8_t pout = 0;
    size_t next = 0;
    for (LineId i = 0; i < circuit.lines.size(); ++i) {
      const auto& line = circuit.lines[i];
      if (line.input_label) {
        pin ^= bits[next++];
      } else if (line.const_value) {
        pin ^= *line.const_value;
      }
      if (line.is_output()) {
        pout ^= faulted[i];
      }
    }
    CHECK(pin == pout);
  }
}

TEST_CASE("exhaustive campaigns over the adder family reach full coverage")
{
  const auto ftfa = fault_coverage(gen_ftfa(), {});
  CHECK(ftfa.total_sites == 13);
  CHECK(ftfa.total_trials == 13 * 8);
  CHECK(ftfa.detected == ftfa.total_trials);
  CHECK(ftfa.coverage() == 1.0);
  CHECK(ftfa.undetected_cases.empty());

  const auto rca = fault_coverage(gen_rca(4), {});
  CHECK(rca.total_sites == 49);
  CHECK(rca.coverage() == 1.0);

  for (auto style : {CsaStyle::REF17, CsaStyle::NFT_STYLE, CsaStyle::FRG_STYLE}) {
    const auto report = fault_coverage(gen_csa_block(4, style), {});
    INFO(csa_style_name(style));
    CHECK(report.coverage() == 1.0);
  }
}

TEST_CASE("the non-parity-preserving adder leaks faults")
{
  const auto report = fault_coverage(gen_pg_adder(), {});
  CHECK(report.total_sites == 10);
  CHECK(report.total_trials == 80);
  CHECK(report.coverage() < 1.0);
  CHECK(report.coverage() > 0.0);
  CHECK_FALSE(report.undetected_cases.empty());
  // every miss names a real site and carries the triggering assignment
  for (const auto& miss : report.undetected_cases) {
    CHECK(miss.site.line < 10);
    CHECK(miss.assignment.size() == 3);
  }
}

TEST_CASE("random campaigns are reproducible from the seed")
{
  FaultInputMode mode;
  mode.exhaustive = false;
  mode.random_trials = 50;
  mode.seed = 7;
  const auto circuit = gen_pg_adder();
  const auto first = fault_coverage(circuit, mode);
  const auto second = fault_coverage(circuit, mode);
  CHECK(first.total_trials == 10 * 50);
  CHECK(first.detected == second.detected);
  REQUIRE(first.undetected_cases.size() == second.undetected_cases.size());
  for (size_t i = 0; i < first.undetected_cases.size(); ++i) {
    CHECK(first.undetected_cases[i].site.line == second.undetected_cases[i].site.line);
    CHECK(first.undetected_cases[i].assignment ==
          second.undetected_cases[i].assignment);
  }
  mode.seed = 8;
  const auto reseeded = fault_coverage(circuit, mode);
  CHECK(reseeded.total_trials == first.total_trials);
}

TEST_CASE("restricting the checker to primary outputs loses coverage")
{
  const auto circuit = gen_ftfa();
  const auto full = fault_coverage(circuit, {});
  const auto primary = fault_coverage(circuit, {}, true);
  CHECK(full.coverage() == 1.0);
  CHECK(primary.coverage() < 1.0);
  // every miss leaves the primary-output parity at its fault-free value,
  // whether the disturbance stayed in the garbage cone or flipped two results
  for (const auto& miss : primary.undetected_cases) {
    const auto faulted = simulate_with_fault(circuit, miss.site, miss.assignment);
    const auto clean = simulate(circuit, miss.assignment);
    uint8_t faulted_parity = 0;
    uint8_t clean_parity = 0;
    for (LineId i = 0; i < circuit.lines.size(); ++i) {
      if (circuit.lines[i].output_label) {
        faulted_parity ^= faulted[i];
        clean_parity ^= clean[i];
      }
    }
    CHECK(faulted_parity == clean_parity);
  }
}

TEST_CASE("exhaustive campaigns refuse oversized input spaces")
{
  CHECK_THROWS_AS(fault_coverage(gen_rca(11), {}), circuit_error);
}

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
#include <revnet/netlist.hpp>

#include <algorithm>

using namespace revnet;

namespace {

bool has_diagnostic(const ParseResult& result, std::string_view needle)
{
  return std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                     [&](const Diagnostic& d) {
                       return d.message.find(needle) != std::string::npos;
                     });
}

} // namespace

TEST_CASE("round trip preserves structure for every generator")
{
  std::vector<Circuit> circuits;
  circuits.push_back(gen_ftfa());
  circuits.push_back(gen_pg_adder());
  circuits.push_back(gen_rca(1));
  circuits.push_back(gen_rca(5));
  for (auto style : {CsaStyle::REF17, CsaStyle::NFT_STYLE, CsaStyle::FRG_STYLE}) {
    circuits.push_back(gen_csa_block(4, style));
    circuits.push_back(gen_csa_fixed(8, 4, style));
    circuits.push_back(gen_csa_variable(16, 4, style));
  }
  for (const auto& circuit : circuits) {
    INFO(circuit.name);
    const auto text = serialize_netlist(circuit);
    const auto parsed = parse_netlist(text);
    REQUIRE(parsed.ok());
    CHECK(structurally_equal(circuit, *parsed.circuit));
    // canonical form is a fixed point
    CHECK(serialize_netlist(*parsed.circuit) == text);
  }
}

TEST_CASE("a hand-written netlist behaves like the generated one")
{
  static const char* text = R"(# one-bit full adder, two cascaded MIGs
revnet 1
lines 13
in 0 primary a0
in 1 primary b0
in 2 primary cin
in 3 const 0
in 4 const 0
gate MIG 0 1 3 4 -> 5 6 7 8   # trailing comment
gate MIG 6 2 7 8 -> 9 10 11 12

out 5 garbage
out 9 garbage
out 10 primary s0
out 11 primary cout
out 12 garbage
)";
  const auto parsed = parse_netlist(text);
  REQUIRE(parsed.ok());
  const auto& circuit = *parsed.circuit;
  CHECK(structurally_equal(circuit, gen_ftfa()));
  for (uint8_t a = 0; a < 2; ++a) {
    for (uint8_t b = 0; b < 2; ++b) {
      for (uint8_t cin = 0; cin < 2; ++cin) {
        const auto trace = simulate(circuit, adder_assignment(1, a, b, cin));
        const auto result = read_adder_outputs(circuit, trace, 1);
        CHECK(int(result.sum) == (a + b + cin) % 2);
        CHECK(int(result.cout) == (a + b + cin) / 2);
      }
    }
  }
}

TEST_CASE("arity mismatch diagnostic")
{
  static const char* text = "revnet 1\n"
                            "lines 5\n"
                            "in 0 primary x\n"
                            "in 1 primary y\n"
                            "gate TG 0 1 -> 2 3 4\n"
                            "out 2 garbage\n";
  const auto parsed = parse_netlist(text);
  CHECK_FALSE(parsed.ok());
  CHECK(has_diagnostic(parsed, "arity mismatch"));
  REQUIRE_FALSE(parsed.diagnostics.empty());
  CHECK(parsed.diagnostics.front().line == 5);
  CHECK(parsed.diagnostics.front().col == 6);
}

TEST_CASE("fan-out diagnostic")
{
  static const char* text = "revnet 1\n"
                            "lines 7\n"
                            "in 0 primary x\n"
                            "in 1 primary y\n"
                            "in 2 primary z\n"
                            "gate FG 0 1 -> 3 4\n"
                            "gate FG 0 2 -> 5 6\n"
                            "out 3 garbage\n";
  const auto parsed = parse_netlist(text);
  CHECK_FALSE(parsed.ok());
  CHECK(has_diagnostic(parsed, "fan-out violation"));
  REQUIRE_FALSE(parsed.diagnostics.empty());
  CHECK(parsed.diagnostics.front().line == 7);
  CHECK(parsed.diagnostics.front().col == 9);
}

TEST_CASE("missing header diagnostic")
{
  const auto no_header = parse_netlist("lines 2\nin 0 primary x\nout 0 garbage\n");
  CHECK_FALSE(no_header.ok());
  CHECK(has_diagnostic(no_header, "missing header: expected 'revnet 1'"));

  const auto empty = parse_netlist("");
  CHECK_FALSE(empty.ok());
  CHECK(has_diagnostic(empty, "missing header"));

  const auto wrong_version = parse_netlist("revnet 2\nlines 0\n");
  CHECK_FALSE(wrong_version.ok());
  CHECK(has_diagnostic(wrong_version, "missing header"));
}

TEST_CASE("unknown gate kind and undeclared ids")
{
  static const char* text = "revnet 1\n"
                            "lines 4\n"
                            "in 0 primary x\n"
                            "in 1 primary y\n"
                            "gate CNOT 0 1 -> 2 3\n"
                            "gate FG 0 9 -> 2 3\n"
                            "out 2 garbage\n"
                            "out 3 garbage\n";
  const auto parsed = parse_netlist(text);
  CHECK_FALSE(parsed.ok());
  CHECK(has_diagnostic(parsed, "unknown gate kind 'CNOT'"));
  CHECK(has_diagnostic(parsed, "undeclared line id 9"));
}

TEST_CASE("parsing continues past the first error")
{
  static const char* text = "revnet 1\n"
                            "lines 2\n"
                            "in 0 primary x\n"
                            "frobnicate\n"
                            "out 0 garbage\n"
                            "out 1 primary\n";
  const auto parsed = parse_netlist(text);
  CHECK_FALSE(parsed.ok());
  CHECK(parsed.diagnostics.size() >= 2);
  CHECK(has_diagnostic(parsed, "unknown statement 'frobnicate'"));
  CHECK(has_diagnostic(parsed, "expected 'out <id> primary <label>'"));
}

TEST_CASE("a structurally inconsistent netlist fails whole-file validation")
{
  // declared line 2 is never produced or consumed
  static const char* text = "revnet 1\n"
                            "lines 3\n"
                            "in 0 primary x\n"
                            "in 1 primary y\n"
                            "out 0 garbage\n"
                            "out 1 garbage\n";
  const auto parsed = parse_netlist(text);
  CHECK_FALSE(parsed.ok());
  CHECK(has_diagnostic(parsed, "no source"));
}

TEST_CASE("serialization is canonical")
{
  const auto circuit = gen_ftfa();
  const auto text = serialize_netlist(circuit);
  CHECK(text.rfind("revnet 1\nlines 13\n", 0) == 0);
  CHECK(text.back() == '\n');
  CHECK(text.find("gate MIG 0 1 3 4 -> 5 6 7 8\n") != std::string::npos);
  CHECK(text.find("out 10 primary s0\n") != std::string::npos);
}

TEST_CASE("structural equality is sensitive to roles and wiring")
{
  const auto a = gen_ftfa();
  auto b = gen_ftfa();
  CHECK(structurally_equal(a, b));
  b.lines[0].input_label = "renamed";
  CHECK_FALSE(structurally_equal(a, b));
  auto c = gen_ftfa();
  std::swap(c.gates[1].inputs[0], c.gates[1].inputs[1]);
  CHECK_FALSE(structurally_equal(a, c));
  CHECK_FALSE(structurally_equal(a, gen_pg_adder()));
}

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

/// \file cli.hpp
/// \brief Command-line front end (generation, simulation, reports).
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adders.hpp"
#include "circuit.hpp"
#include "compare.hpp"
#include "delay.hpp"
#include "faults.hpp"
#include "netlist.hpp"

namespace revnet::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification = 1;
inline constexpr int exit_usage = 2;

namespace detail {

[[nodiscard]] inline std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

[[nodiscard]] inline std::string hex_string(uint64_t value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(value));
  return buf;
}

inline bool read_file(const std::string& path, std::string& text, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read file '" << path << "'\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

inline bool load_circuit(const std::string& path, Circuit& circuit, std::ostream& err) {
  std::string text;
  if (!read_file(path, text, err)) {
    return false;
  }
  auto parsed = parse_netlist(text, path);
  if (!parsed.ok()) {
    for (const auto& diag : parsed.diagnostics) {
      err << path << ":" << diag.line << ":" << diag.col << ": " << diag.message
          << "\n";
    }
    return false;
  }
  circuit = std::move(*parsed.circuit);
  return true;
}

[[nodiscard]] inline std::optional<uint64_t> parse_hex(std::string text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    text = text.substr(2);
  }
  if (text.empty()) {
    return std::nullopt;
  }
  uint64_t value = 0;
  for (char c : text) {
    int digit = -1;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    }
    if (digit < 0) {
      return std::nullopt;
    }
    value = (value << 4) | static_cast<uint64_t>(digit);
  }
  return value;
}

[[nodiscard]] inline std::vector<std::string> split(const std::string& text,
                                                    char separator) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, separator)) {
    parts.push_back(part);
  }
  return parts;
}

/// Number of a<i> operand bits declared by the circuit.
[[nodiscard]] inline int operand_width(const Circuit& circuit) {
  int width = 0;
  while (circuit.find_input("a" + std::to_string(width))) {
    ++width;
  }
  return width;
}

inline void write_output(const std::string& path, const std::string& text,
                         std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream file(path, std::ios::binary);
    file << text;
  }
}

[[nodiscard]] inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,family,scheme,delay,optimal_param\n";
  for (const auto& row : rows) {
    out << row.n << "," << delay_family_name(row.model.family) << ","
        << delay_scheme_name(row.model.scheme) << "," << fmt("%.4f", row.delay) << ","
        << fmt("%.4f", row.optimal_param) << "\n";
  }
  return out.str();
}

} // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"parity-preserving reversible adder toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an adder netlist");
  std::string gen_what;
  gen->add_option("generator", gen_what, "ftfa|rca|csa-fixed|csa-variable")->required();
  int gen_bits = 0;
  int gen_block = 0;
  int gen_blocks = 0;
  std::string gen_style = "nft";
  std::string gen_out_path;
  gen->add_option("--bits", gen_bits, "adder width N");
  gen->add_option("--block", gen_block, "fixed block size B");
  gen->add_option("--blocks", gen_blocks, "variable block count T (even)");
  gen->add_option("--style", gen_style, "ref17|nft|frg");
  gen->add_option("-o,--output", gen_out_path, "write netlist to FILE");

  // sim
  auto* sim = app.add_subcommand("sim", "simulate an adder netlist");
  std::string sim_file;
  std::string sim_inputs;
  sim->add_option("file", sim_file, "netlist file")->required();
  sim->add_option("--inputs", sim_inputs, "A[,B[,CIN]] as hex,hex,bit (bit 0 = LSB)")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "validate a netlist and report verdicts");
  std::string verify_file;
  verify->add_option("file", verify_file, "netlist file")->required();

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "cost metrics of a netlist");
  std::string metrics_file;
  bool metrics_json = false;
  metrics_cmd->add_option("file", metrics_file, "netlist file")->required();
  metrics_cmd->add_flag("--json", metrics_json, "emit JSON");

  // compare
  auto* compare_cmd =
      app.add_subcommand("compare", "computed vs published design costs");
  bool compare_as_csv = false;
  compare_cmd->add_flag("--csv", compare_as_csv, "emit CSV");

  // delay-sweep
  auto* sweep_cmd = app.add_subcommand("delay-sweep", "delay-vs-width table");
  std::string sweep_n_list = "16,32,64,128,256,512";
  std::string sweep_models = "all";
  std::string sweep_csv_path;
  sweep_cmd->add_option("--n-list", sweep_n_list, "comma-separated widths");
  sweep_cmd->add_option("--models", sweep_models, "all|study|ref17|ref15");
  sweep_cmd->add_option("--csv", sweep_csv_path, "write CSV to FILE");

  // faults
  auto* faults_cmd = app.add_subcommand("faults", "single bit-flip fault campaign");
  std::string faults_file;
  bool faults_exhaustive = false;
  long faults_random = 0;
  uint64_t faults_seed = 0;
  bool faults_primary_only = false;
  faults_cmd->add_option("file", faults_file, "netlist file")->required();
  faults_cmd->add_flag("--exhaustive", faults_exhaustive, "all input assignments");
  faults_cmd->add_option("--random", faults_random, "K random assignments per site");
  faults_cmd->add_option("--seed", faults_seed, "seed for --random");
  faults_cmd->add_flag("--primary-only", faults_primary_only,
                       "parity check over primary outputs only");

  std::vector<const char*> argv;
  argv.push_back("revnet");
  for (const auto& arg : args) {
    argv.push_back(arg.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (app.got_subcommand(gen)) {
      const auto style = csa_style_from_name(gen_style);
      if (!style) {
        err << "error: unknown style '" << gen_style << "'\n";
        return exit_usage;
      }
      Circuit circuit;
      if (gen_what == "ftfa") {
        circuit = gen_ftfa();
      } else if (gen_what == "rca") {
        if (gen_bits < 1) {
          err << "error: rca requires --bits >= 1\n";
          return exit_usage;
        }
        circuit = gen_rca(gen_bits);
      } else if (gen_what == "csa-fixed") {
        if (gen_bits < 2 || gen_block < 2) {
          err << "error: csa-fixed requires --bits and --block (both >= 2)\n";
          return exit_usage;
        }
        circuit = gen_csa_fixed(gen_bits, gen_block, *style);
      } else if (gen_what == "csa-variable") {
        if (gen_bits < 2 || gen_blocks < 2) {
          err << "error: csa-variable requires --bits and --blocks (even, >= 2)\n";
          return exit_usage;
        }
        circuit = gen_csa_variable(gen_bits, gen_blocks, *style);
      } else {
        err << "error: unknown generator '" << gen_what << "'\n";
        return exit_usage;
      }
      detail::write_output(gen_out_path, serialize_netlist(circuit), out);
      return exit_ok;
    }

    if (app.got_subcommand(sim)) {
      Circuit circuit;
      if (!detail::load_circuit(sim_file, circuit, err)) {
        return exit_usage;
      }
      const int width = detail::operand_width(circuit);
      if (width == 0) {
        err << "error: netlist has no a<i>/b<i> operand inputs\n";
        return exit_usage;
      }
      const auto parts = detail::split(sim_inputs, ',');
      if (parts.empty() || parts.size() > 3) {
        err << "error: --inputs expects A[,B[,CIN]]\n";
        return exit_usage;
      }
      const auto a = detail::parse_hex(parts[0]);
      const auto b = parts.size() > 1 ? detail::parse_hex(parts[1])
                                      : std::optional<uint64_t>{0};
      const auto cin = parts.size() > 2 ? detail::parse_hex(parts[2])
                                        : std::optional<uint64_t>{0};
      if (!a || !b || !cin || *cin > 1) {
        err << "error: malformed --inputs value\n";
        return exit_usage;
      }
      const uint64_t mask = width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
      if ((*a & ~mask) || (*b & ~mask)) {
        err << "error: operand wider than the " << width << "-bit adder\n";
        return exit_usage;
      }
      const auto trace =
          simulate(circuit, adder_assignment(width, *a, *b, uint8_t(*cin)));
      for (LineId i = 0; i < circuit.lines.size(); ++i) {
        if (circuit.lines[i].output_label) {
          out << *circuit.lines[i].output_label << "=" << int(trace[i]) << "\n";
        }
      }
      const auto result = read_adder_outputs(circuit, trace, width);
      out << "sum=0x" << detail::hex_string(result.sum) << "\n";
      return exit_ok;
    }

    if (app.got_subcommand(verify)) {
      std::string text;
      if (!detail::read_file(verify_file, text, err)) {
        return exit_usage;
      }
      auto parsed = parse_netlist(text, verify_file);
      if (!parsed.ok()) {
        for (const auto& diag : parsed.diagnostics) {
          err << verify_file << ":" << diag.line << ":" << diag.col << ": "
              << diag.message << "\n";
        }
        out << "valid: no\n";
        return exit_verification;
      }
      const auto& circuit = *parsed.circuit;
      bool reversible = true;
      for (const auto& gate : circuit.gates) {
        reversible = reversible && is_reversible(gate.kind);
      }
      out << "valid: yes\n";
      out << "gates reversible: " << (reversible ? "yes" : "no") << "\n";
      out << "parity preserving: "
          << (circuit_parity_preserving(circuit) ? "yes" : "no") << "\n";
      return exit_ok;
    }

    if (app.got_subcommand(metrics_cmd)) {
      Circuit circuit;
      if (!detail::load_circuit(metrics_file, circuit, err)) {
        return exit_usage;
      }
      const auto report = metrics(circuit);
      if (metrics_json) {
        nlohmann::json json{{"gc", report.gc},       {"ci", report.ci},
                            {"go", report.go},       {"alpha", report.alpha},
                            {"beta", report.beta},   {"delta", report.delta},
                            {"ac", report.ac},       {"pd", report.pd}};
        out << json.dump() << "\n";
      } else {
        out << "gc=" << report.gc << " ci=" << report.ci << " go=" << report.go
            << " hc=" << report.alpha << "a+" << report.beta << "b+" << report.delta
            << "d ac=" << report.ac << " pd=" << report.pd << "\n";
      }
      return exit_ok;
    }

    if (app.got_subcommand(compare_cmd)) {
      const auto rows = compare_designs();
      out << (compare_as_csv ? compare_csv(rows) : compare_text(rows));
      return exit_ok;
    }

    if (app.got_subcommand(sweep_cmd)) {
      std::vector<int> widths;
      for (const auto& part : detail::split(sweep_n_list, ',')) {
        try {
          widths.push_back(std::stoi(part));
        } catch (const std::exception&) {
          err << "error: bad width '" << part << "' in --n-list\n";
          return exit_usage;
        }
        if (widths.back() < 1) {
          err << "error: widths must be >= 1\n";
          return exit_usage;
        }
      }
      std::vector<DelayModelId> models;
      for (const auto& model : all_delay_models) {
        if (sweep_models == "all" ||
            sweep_models == delay_family_name(model.family)) {
          models.push_back(model);
        }
      }
      if (models.empty()) {
        err << "error: unknown --models '" << sweep_models << "'\n";
        return exit_usage;
      }
      const auto csv = detail::sweep_csv(sweep(models, widths));
      std::ostringstream notes;
      notes << "# crossover fixed study<ref17 at n="
            << detail::fmt("%.4f", crossover_width(DelayScheme::FIXED, DelayFamily::REF17))
            << "\n"
            << "# crossover fixed study<ref15 at n="
            << detail::fmt("%.4f", crossover_width(DelayScheme::FIXED, DelayFamily::REF15))
            << "\n"
            << "# crossover variable study<ref17 at n="
            << detail::fmt("%.4f",
                           crossover_width(DelayScheme::VARIABLE, DelayFamily::REF17))
            << "\n"
            << "# crossover variable study<ref15 at n="
            << detail::fmt("%.4f",
                           crossover_width(DelayScheme::VARIABLE, DelayFamily::REF15))
            << "\n";
      if (sweep_csv_path.empty()) {
        out << csv << notes.str();
      } else {
        detail::write_output(sweep_csv_path, csv, out);
        out << notes.str();
      }
      return exit_ok;
    }

    if (app.got_subcommand(faults_cmd)) {
      Circuit circuit;
      if (!detail::load_circuit(faults_file, circuit, err)) {
        return exit_usage;
      }
      if (faults_exhaustive && faults_random > 0) {
        err << "error: --exhaustive and --random are mutually exclusive\n";
        return exit_usage;
      }
      FaultInputMode mode;
      if (faults_random > 0) {
        mode.exhaustive = false;
        mode.random_trials = faults_random;
        mode.seed = faults_seed;
      }
      const auto report = fault_coverage(circuit, mode, faults_primary_only);
      out << "sites=" << report.total_sites << " trials=" << report.total_trials
          << " detected=" << report.detected
          << " coverage=" << detail::fmt("%.6f", report.coverage()) << "\n";
      size_t shown = 0;
      for (const auto& miss : report.undetected_cases) {
        if (shown++ == 10) {
          out << "... (" << report.undetected_cases.size() - 10 << " more)\n";
          break;
        }
        out << "undetected: line " << miss.site.line << " (" << miss.site.description
            << ") inputs=";
        for (auto bit : miss.assignment) {
          out << int(bit);
        }
        out << "\n";
      }
      return exit_ok;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

} // namespace revnet::cli

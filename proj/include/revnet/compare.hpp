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
  \file compare.hpp
  \brief Computed-vs-published cost comparison for the benchmark designs.

  The published figures are embedded as tagged constants so the report can
  show both columns side by side.  Mismatching columns are flagged, never
  silently overwritten: the published record carries a couple of internal
  inconsistencies (constant-input and NOT counts) that must stay visible.
*/

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "adders.hpp"
#include "circuit.hpp"

namespace revnet {

/*! \brief Published cost row, source tag "Table I". */
struct PublishedCosts {
  int gc;
  std::string gate_mix;
  int alpha;
  int beta;
  int delta;
  int ci;
  int go;
  int ac;
};

struct CompareRow {
  std::string design;
  std::optional<MetricsReport> computed; ///< absent for echoed-only designs
  PublishedCosts published;
  std::vector<std::string> flags; ///< mismatching column names, report order
};

[[nodiscard]] inline std::vector<CompareRow> compare_designs() {
  struct Entry {
    std::string design;
    std::optional<Circuit> circuit;
    PublishedCosts published;
  };
  std::vector<Entry> entries;
  entries.push_back({"1-bit FTFA (2 MIG)", gen_ftfa(), {2, "2 MIG", 6, 4, 2, 2, 3, 8}});
  entries.push_back({"1-bit FTFA (2 IG)", std::nullopt, {2, "2 IG", 8, 6, 2, 2, 3, 8}});
  entries.push_back({"1-bit FTFA (4 FRG)", std::nullopt, {4, "4 FRG", 8, 16, 4, 2, 3, 15}});
  entries.push_back({"4-bit CSA nft",
                     gen_csa_block(4, CsaStyle::NFT_STYLE),
                     {13, "8MIG+3NFT+1F2G+1FRG", 37, 29, 12, 14, 17, 47}});
  entries.push_back({"4-bit CSA frg",
                     gen_csa_block(4, CsaStyle::FRG_STYLE),
                     {13, "8MIG+4FRG+1F2G", 34, 32, 5, 14, 17, 47}});
  entries.push_back({"4-bit CSA ref17",
                     gen_csa_block(4, CsaStyle::REF17),
                     {14, "8MIG+4NFT+2F2G", 40, 28, 12, 15, 19, 50}});
  entries.push_back({"4-bit CSA (24 FRG)", std::nullopt, {24, "24 FRG", 48, 96, 24, 19, 24, 72}});

  std::vector<CompareRow> rows;
  for (auto& entry : entries) {
    CompareRow row;
    row.design = entry.design;
    row.published = entry.published;
    if (entry.circuit) {
      const auto report = metrics(*entry.circuit);
      row.computed = report;
      auto flag = [&](int computed, int published, const char* column) {
        if (computed != published) {
          row.flags.emplace_back(column);
        }
      };
      flag(report.gc, entry.published.gc, "gc");
      flag(report.alpha, entry.published.alpha, "alpha");
      flag(report.beta, entry.published.beta, "beta");
      flag(report.delta, entry.published.delta, "delta");
      flag(report.ci, entry.published.ci, "ci");
      flag(report.go, entry.published.go, "go");
      flag(report.ac, entry.published.ac, "ac");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

[[nodiscard]] inline std::string hc_string(int alpha, int beta, int delta) {
  return std::to_string(alpha) + "a+" + std::to_string(beta) + "b+" +
         std::to_string(delta) + "d";
}

[[nodiscard]] inline std::string join_flags(const std::vector<std::string>& flags) {
  std::string joined;
  for (const auto& flag : flags) {
    if (!joined.empty()) {
      joined += ';';
    }
    joined += flag;
  }
  return joined;
}

} // namespace detail

[[nodiscard]] inline std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << "design,gc,alpha,beta,delta,ci,go,ac,src_gc,src_hc,src_ci,src_go,src_ac,flags\n";
  for (const auto& row : rows) {
    out << row.design << ",";
    if (row.computed) {
      const auto& m = *row.computed;
      out << m.gc << "," << m.alpha << "," << m.beta << "," << m.delta << "," << m.ci
          << "," << m.go << "," << m.ac;
    } else {
      out << ",,,,,,";
    }
    out << "," << row.published.gc << ","
        << detail::hc_string(row.published.alpha, row.published.beta,
                             row.published.delta)
        << "," << row.published.ci << "," << row.published.go << "," << row.published.ac
        << "," << detail::join_flags(row.flags) << "\n";
  }
  return out.str();
}

[[nodiscard]] inline std::string compare_text(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << row.design << "\n";
    if (row.computed) {
      const auto& m = *row.computed;
      out << "  computed : gc=" << m.gc << " hc="
          << detail::hc_string(m.alpha, m.beta, m.delta) << " ci=" << m.ci
          << " go=" << m.go << " ac=" << m.ac << "\n";
    } else {
      out << "  computed : (not generated; published constants only)\n";
    }
    out << "  published: gc=" << row.published.gc << " (" << row.published.gate_mix
        << ") hc="
        << detail::hc_string(row.published.alpha, row.published.beta,
                             row.published.delta)
        << " ci=" << row.published.ci << " go=" << row.published.go
        << " ac=" << row.published.ac << "\n";
    if (!row.flags.empty()) {
      out << "  mismatch : " << detail::join_flags(row.flags) << "\n";
    }
  }
  return out.str();
}

} // namespace revnet

// Copyright 2026 The hallmhd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hallmhd/ledger.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "hallmhd/errors.hpp"

namespace hallmhd {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_ledger_header(std::ostream& os) {
  for (std::size_t i = 0; i < kLedgerColumns.size(); ++i) os << (i ? "," : "") << kLedgerColumns[i];
  os << '\n';
}

void write_ledger_row(std::ostream& os, const LedgerRow& r) {
  os << format_double(r.t) << ',' << format_double(r.energy) << ',' << format_double(r.enstrophy)
     << ',' << format_double(r.joule) << ',' << format_double(r.divu_max) << ','
     << format_double(r.divB_max);
  for (double b : r.bands) os << ',' << format_double(b);
  os << ',' << r.ohm_iters << ',' << format_double(r.ohm_residual) << '\n';
}

void write_ledger(std::ostream& os, const std::vector<LedgerRow>& rows) {
  write_ledger_header(os);
  for (const auto& r : rows) write_ledger_row(os, r);
}

namespace {

double parse_double(const std::string& s, int line) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw IoError("ledger line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

}  // namespace

std::vector<LedgerRow> read_ledger(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("ledger: empty input");
  std::ostringstream expected;
  write_ledger_header(expected);
  if (line + "\n" != expected.str()) throw IoError("ledger: unexpected header '" + line + "'");

  std::vector<LedgerRow> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != kLedgerColumns.size())
      throw IoError("ledger line " + std::to_string(lineno) + ": expected " +
                    std::to_string(kLedgerColumns.size()) + " columns");
    LedgerRow r;
    r.t = parse_double(cells[0], lineno);
    r.energy = parse_double(cells[1], lineno);
    r.enstrophy = parse_double(cells[2], lineno);
    r.joule = parse_double(cells[3], lineno);
    r.divu_max = parse_double(cells[4], lineno);
    r.divB_max = parse_double(cells[5], lineno);
    for (int b = 0; b < 5; ++b) r.bands[b] = parse_double(cells[6 + b], lineno);
    r.ohm_iters = static_cast<int>(parse_double(cells[11], lineno));
    r.ohm_residual = parse_double(cells[12], lineno);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hallmhd

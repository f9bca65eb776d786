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

#pragma once

// Run ledger: one CSV row per probe time. Column order is fixed and part of
// the output contract; values are written with 17 significant digits.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace hallmhd {

struct LedgerRow {
  double t = 0;
  double energy = 0;
  double enstrophy = 0;  ///< ||grad u||^2
  double joule = 0;      ///< beta eta^2 ||j||^2
  double divu_max = 0;
  double divB_max = 0;
  std::array<double, 5> bands{};  ///< ll, lt, mid, gt, gg norms of B
  int ohm_iters = 0;
  double ohm_residual = 0;

  bool operator==(const LedgerRow&) const = default;
};

inline constexpr std::array<const char*, 13> kLedgerColumns = {
    "t",       "energy",  "enstrophy", "joule",   "divu_max", "divB_max",  "band_ll",
    "band_lt", "band_mid", "band_gt",  "band_gg", "ohm_iters", "ohm_residual"};

/// printf("%.17g"), with "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

void write_ledger_header(std::ostream& os);
void write_ledger_row(std::ostream& os, const LedgerRow& row);
void write_ledger(std::ostream& os, const std::vector<LedgerRow>& rows);

/// Parses a ledger written by write_ledger. Throws IoError on a malformed
/// header or row.
std::vector<LedgerRow> read_ledger(std::istream& is);

}  // namespace hallmhd

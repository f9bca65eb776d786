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

// Binary field container.
//
//   offset  type        content
//   0       char[8]     "HMHDSNAP"
//   8       uint8       format version (1)
//   9       uint8       system: 0 = nsm, 1 = hall
//   10      int32       n
//   14      float64     dealias fraction
//   22      float64     time
//   30      float64[7]  beta, eta, gamma, s, K, R, delta
//   86      uint8       field count
//   then per field: char tag ('u', 'B' or 'E') followed by 3 components of
//   n * n * (n/2 + 1) complex coefficients, each as (re, im) float64.
//
// All values little-endian. Coefficients use the grid's half-spectrum layout.

#include <cstdint>
#include <optional>
#include <string>

#include "hallmhd/fields.hpp"
#include "hallmhd/params.hpp"

namespace hallmhd {

enum class SystemKind : std::uint8_t { nsm = 0, hall = 1 };

inline constexpr std::uint8_t kSnapshotVersion = 1;

struct Snapshot {
  Snapshot(SystemKind sys, double t, const PhysParams& params, SpectralField u_, SpectralField B_,
           std::optional<SpectralField> E_ = std::nullopt)
      : system(sys), time(t), p(params), u(std::move(u_)), B(std::move(B_)), E(std::move(E_)) {}

  SystemKind system;
  double time;
  PhysParams p;
  SpectralField u;
  SpectralField B;
  std::optional<SpectralField> E;
};

/// Throws IoError when the file cannot be written.
void write_snapshot(const std::string& path, const Snapshot& snap);
/// Throws IoError on a bad magic, version, truncated file or trailing bytes.
Snapshot read_snapshot(const std::string& path);

}  // namespace hallmhd

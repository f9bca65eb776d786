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

// Five-band frequency partition used by the limit analysis:
//
//   ll : |xi| <= R
//   lt : R < |xi| <= 1/(2 K beta eta^2 gamma)
//   mid: 1/(2 K beta eta^2 gamma) < |xi| <= K/(2 beta eta^2 gamma)
//   gt : K/(2 beta eta^2 gamma) < |xi| <= Phi,   Phi = phi(gamma/delta)
//   gg : |xi| > Phi

#include <array>
#include <string_view>

#include "hallmhd/fields.hpp"
#include "hallmhd/params.hpp"

namespace hallmhd {

enum class Band { ll = 0, lt, mid, gt, gg };

inline constexpr std::array<Band, 5> kAllBands = {Band::ll, Band::lt, Band::mid, Band::gt, Band::gg};

std::string_view to_string(Band b);

struct BandSpec {
  double radius_low = 0;  ///< R
  double radius_lt = 0;   ///< 1/(2 K beta eta^2 gamma)
  double radius_mid = 0;  ///< K/(2 beta eta^2 gamma)
  double radius_phi = 0;  ///< phi(gamma/delta)

  static BandSpec from_params(const PhysParams& p);

  /// R <= radius_lt <= radius_mid <= radius_phi.
  bool ordered() const;
  /// Throws BandOrderError unless ordered().
  void validate() const;
  /// Thresholds made monotone by raising each to the previous one; empty
  /// bands stay empty.
  BandSpec clamped() const;

  /// Band of a mode with |xi|^2 = xi2. Assumes ordered().
  Band classify(double xi2) const;
};

/// Keeps the modes of f lying in band b. Throws BandOrderError when the
/// thresholds are not ordered.
SpectralField band_filter(const SpectralField& f, Band b, const BandSpec& spec);

/// All five band components; their sum is f.
std::array<SpectralField, 5> band_split(const SpectralField& f, const BandSpec& spec);

/// L2 norm of each band of f in one pass. Uses `spec` as given, so pass
/// clamped() thresholds when they may be out of order.
std::array<double, 5> band_norms(const SpectralField& f, const BandSpec& spec);

}  // namespace hallmhd

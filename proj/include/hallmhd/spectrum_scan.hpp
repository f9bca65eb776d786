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

// Parameter scans that check the closed-form spectral data against a numeric
// eigendecomposition of the 6x6 symbol, and every eigenvalue estimate over
// both frequency regimes. Used by `hallmhd verify-spectrum` and the
// acceptance suite.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hallmhd/params.hpp"

namespace hallmhd {

struct EigenScanReport {
  int samples = 0;
  int rejected_near_shell = 0;
  double max_rel_error_lambda0 = 0;
  double max_rel_error_plus = 0;
  double max_rel_error_minus = 0;
  double max_spurious_zero = 0;     ///< |leftover eigenvalue| / ||A||
  double max_vieta_sum_error = 0;   ///< relative
  double max_vieta_product_error = 0;
  double seconds = 0;

  double max_rel_error() const;
};

/// Samples (xi, beta, eta, gamma) with beta, eta in [0.5, 2], gamma in
/// [0.05, 1], |xi| / resonance radius log-uniform in [0.05, 20], keeping only
/// points with |1 - 4 beta^2 eta^4 gamma^2 |xi|^2| > 1e-6.
EigenScanReport eigen_oracle_scan(int samples, std::uint64_t seed);

/// Log10-decade histogram of relative margins margin / max(|lhs|, |rhs|).
struct MarginHistogram {
  static constexpr std::array<const char*, 7> kLabels = {
      "violation", "<1e-14", "1e-14..1e-10", "1e-10..1e-6", "1e-6..1e-3", "1e-3..1e-1", ">=1e-1"};
  std::array<long, 7> counts{};

  void add(double relative_margin, bool pass);
};

struct InequalityStats {
  long evaluated = 0;
  long violations = 0;
  long not_applicable = 0;
  double min_relative_margin = 1e300;
  MarginHistogram histogram;
};

struct BoundScanReport {
  long wavevectors = 0;
  long evaluations = 0;
  long violations = 0;
  std::map<std::string, InequalityStats> per_check;
  /// Smallest observed decay rate omega with
  /// |exp(t l+)(1 - exp(t(l- - l+)))/(t(l- - l+))| <= exp(-omega t / gamma^2)
  /// on the middle band, over all parameter sets; and the smallest
  /// (1 - sqrt(1 - 1/K^2)) / (2 beta eta^2) for comparison.
  double empirical_omega = 1e300;
  double reference_omega = 1e300;
  double seconds = 0;
};

struct BoundScanGrid {
  std::vector<double> betas{0.5, 1.0, 2.0};
  std::vector<double> etas{0.5, 1.0, 2.0};
  std::vector<double> gammas{0.05, 0.1, 0.5, 1.0};
  std::vector<double> ks{1.05, 1.1, 1.1080339887498948};  // last is sqrt(5)/2 - 0.01
};

/// For every parameter combination, evaluates eigen_bound_check on
/// `per_regime` log-spaced |xi| in (0, resonance] and as many in
/// (resonance, 1e4 * resonance], plus the K-band endpoints exactly.
BoundScanReport eigen_bound_scan(int per_regime, const BoundScanGrid& grid = {});

}  // namespace hallmhd

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

// Generalized Ohm's law
//
//   (1/eta)(E + u x B) - beta eta j + grad p_e = j x B,   div j = 0,
//
// solved for j by Picard iteration on the Leray-projected equation. The map
// contracts in L2 when ||B||_inf < beta eta.

#include <optional>
#include <utility>
#include <vector>

#include "hallmhd/fields.hpp"
#include "hallmhd/params.hpp"

namespace hallmhd {

struct OhmOptions {
  double tol = 1e-12;
  int max_iter = 200;
  /// Solve on the zero-mean subspace: drops the xi = 0 mode of the forcing
  /// and of every iterate.
  bool remove_mean = false;
};

struct OhmSolveReport {
  explicit OhmSolveReport(SpectralField j0) : j(std::move(j0)) {}

  SpectralField j;
  int iterations = 0;
  /// || beta eta j + P(j x B) - (1/eta) P(E + u x B) ||
  double residual = 0;
  /// ||B||_inf / (beta eta), the a priori contraction factor.
  double contraction_estimate = 0;
  /// ||j^{k+1} - j^k|| for every iteration.
  std::vector<double> increments;
  /// Largest ratio of consecutive increments above the round-off floor; 0
  /// when fewer than two increments qualify.
  double observed_ratio = 0;
};

/// Iterates j^{k+1} = (1/(beta eta)) P[(1/eta)(E + u x B) - j^k x B] from
/// j^0 = (1/(beta eta^2)) P(E + u x B), or from `initial_guess` when given,
/// until ||j^{k+1} - j^k|| < tol (1 + ||j^{k+1}||). Throws ConvergenceError
/// after max_iter iterations and NumericalError on non-finite iterates.
OhmSolveReport solve_ohm(const SpectralField& u, const SpectralField& B, const SpectralField& E,
                         const PhysParams& p, const OhmOptions& opt = {},
                         const std::optional<SpectralField>& initial_guess = std::nullopt);

/// Electron pressure p_e recovered from the gradient part of the unprojected
/// residual (1/eta)(E + u x B) - beta eta j - j x B.
ScalarSpectralField electron_pressure(const SpectralField& u, const SpectralField& B,
                                      const SpectralField& E, const SpectralField& j,
                                      const PhysParams& p);

/// Divergence-free part of the limiting electric field,
/// P(-u x B + beta eta^2 j + eta j x B).
SpectralField electric_field_closure(const SpectralField& u, const SpectralField& B,
                                     const SpectralField& j, const PhysParams& p);

}  // namespace hallmhd

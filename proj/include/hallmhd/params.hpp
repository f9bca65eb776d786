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

namespace hallmhd {

/// Physical constants of the Navier-Stokes-Maxwell system together with the
/// analysis parameters that shape the frequency bands.
struct PhysParams {
  double beta = 1.0;         ///< collision / relaxation coefficient
  double eta = 1.0;          ///< current-scale ratio
  double gamma = 0.2;        ///< fluid-to-light speed ratio, in (0, 1]
  double sobolev_s = 0.75;   ///< regularity exponent, in (1/2, 1)
  double band_K = 1.1;       ///< band constant, in (1, sqrt(5)/2)
  double band_R = 4.0;       ///< low-frequency radius
  double band_delta = 1.5;   ///< high-frequency cutoff parameter

  /// beta * eta^2, the resistivity of the limiting system.
  double resistivity() const { return beta * eta * eta; }

  /// 1 / (beta eta^2 gamma^2): the damping rate of the electric field, -lambda_0.
  double damping_rate() const { return 1.0 / (resistivity() * gamma * gamma); }

  /// |xi| at which lambda_+ and lambda_- collide: 1 / (2 beta eta^2 gamma).
  double resonance_radius() const { return 0.5 / (resistivity() * gamma); }

  /// Throws ParamError when any invariant is violated.
  void validate() const;

  bool operator==(const PhysParams&) const = default;
};

/// phi(x) = x^{2/(2s-3)}; the very-high-frequency cutoff is phi(gamma/delta).
double phi_cutoff(double x, double sobolev_s);

}  // namespace hallmhd

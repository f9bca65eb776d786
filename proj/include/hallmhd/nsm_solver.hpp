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

// Incompressible Navier-Stokes-Maxwell system with generalized Ohm's law:
//
//   du/dt + div(u (x) u) - lap u + grad p = j x B,            div u = 0
//   gamma dE/dt - (1/gamma) curl B = -(1/gamma) j,             div E = 0
//   dB/dt + curl E = 0,                                        div B = 0
//   (1/eta)(E + u x B) - beta eta j + grad p_e = j x B,        div j = 0
//
// Integrated in the rescaled variable E~ = gamma E, for which the linear
// (E~, B) block is exactly the Maxwell symbol. Each step is an exponential
// Heun step: the linear part (viscosity and Maxwell) is propagated exactly
// per mode and the remaining sources are added with a two-stage explicit rule.
//
// The xi = 0 mode of the Lorentz force and of j is dropped, so the means of u,
// B and E are constant in time.

#include <optional>

#include "hallmhd/fields.hpp"
#include "hallmhd/ohm.hpp"
#include "hallmhd/params.hpp"
#include "hallmhd/run.hpp"

namespace hallmhd {

struct NsmState {
  NsmState(GridPtr grid, const PhysParams& params)
      : u(grid), E(grid), B(grid), p(params) {}

  double time = 0;
  SpectralField u;
  SpectralField E;  ///< unscaled electric field
  SpectralField B;
  PhysParams p;
};

struct NsmSources {
  SpectralField du;
  SpectralField dE;  ///< source of the unscaled E
  SpectralField dB;
  OhmSolveReport ohm;
};

/// du = P[-div(u (x) u) + j x B], dE = -(1/gamma^2)(j - P E/(beta eta^2)),
/// dB = 0, with j from solve_ohm.
NsmSources nsm_rhs_nonlinear(const NsmState& s, const OhmOptions& ohm = RunOptions<NsmState>{}.ohm,
                             const std::optional<SpectralField>& j_guess = std::nullopt);

/// cfl_safety * min(dx / ||u||_inf, beta eta^2 gamma^2 / (1 + ||B||_inf)).
double nsm_stable_dt(const NsmState& s, double cfl_safety);

/// exp(dt L) applied to the state: viscous decay of u and the Maxwell
/// propagator on (gamma E, B). Time advances by dt.
NsmState nsm_linear_flow(const NsmState& s, double dt);

/// One exponential Heun step of size cfg.dt. Throws StepSizeError when
/// cfg.dt exceeds nsm_stable_dt and NumericalError on non-finite output.
NsmState step(const NsmState& s, const StepConfig& cfg);

/// Advances to time T. Ledger rows are produced at every probe time; the
/// energy trace has one sample per step.
RunResult<NsmState> run_nsm(const NsmState& initial, double T, const StepConfig& cfg,
                            const RunOptions<NsmState>& opt = {});

}  // namespace hallmhd

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

// Hall-MHD with general coefficients:
//
//   du/dt + div(u (x) u) - lap u + grad p = (curl B) x B,      div u = 0
//   dB/dt + eta curl((curl B) x B) - curl(u x B) = beta eta^2 lap B
//
// Viscous and resistive terms are integrated exactly, the rest with the
// same exponential Heun rule as the Navier-Stokes-Maxwell solver.

#include "hallmhd/fields.hpp"
#include "hallmhd/params.hpp"
#include "hallmhd/run.hpp"

namespace hallmhd {

struct HallState {
  HallState(GridPtr grid, const PhysParams& params) : u(grid), B(grid), p(params) {}

  double time = 0;
  SpectralField u;
  SpectralField B;
  PhysParams p;
};

struct HallSources {
  SpectralField du;
  SpectralField dB;
};

/// eta curl((curl B) x B), dealiased.
SpectralField hall_term(const SpectralField& B, double eta);

/// du = P[-div(u (x) u) + (curl B) x B], dB = -hall_term(B) + curl(u x B).
/// With remove_mean the xi = 0 mode of du is dropped.
HallSources hall_rhs(const HallState& s, bool remove_mean = true);

/// cfl_safety * min(dx / ||u||_inf, 0.5 dx^2 / (eta ||B||_inf)).
double hall_stable_dt(const HallState& s, double cfl_safety);

/// One exponential Heun step. Throws StepSizeError above hall_stable_dt and
/// NumericalError on non-finite output.
HallState step_hall(const HallState& s, const StepConfig& cfg);

RunResult<HallState> run_hall(const HallState& initial, double T, const StepConfig& cfg,
                              const RunOptions<HallState>& opt = {});

}  // namespace hallmhd

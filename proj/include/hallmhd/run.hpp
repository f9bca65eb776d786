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

// Types shared by the two time integrators.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hallmhd/ledger.hpp"
#include "hallmhd/ohm.hpp"

namespace hallmhd {

enum class Scheme { etd_heun };

struct StepConfig {
  /// Largest step; the driver subdivides each probe interval evenly.
  double dt = 1e-3;
  Scheme scheme = Scheme::etd_heun;
  double cfl_safety = 0.25;
  /// false drops every nonlinear source, leaving only the exact linear part.
  bool nonlinear = true;
};

/// One accepted step of the energy audit: W(t) and the dissipation rate D(t).
struct EnergySample {
  double t = 0;
  double energy = 0;
  double dissipation = 0;
};

/// Mean over steps of |(W_{n+1} - W_n)/dt_n + (D_n + D_{n+1})/2|.
double energy_residual(const std::vector<EnergySample>& trace);

struct DivergenceMax {
  double u = 0;
  double B = 0;
  double E = 0;
  double j = 0;

  double max() const;
};

template <class State>
struct RunOptions {
  /// Rows are emitted at t = 0, every probe_interval and at T. 0 means only
  /// the endpoints.
  double probe_interval = 0;
  std::function<void(const State&, const LedgerRow&)> on_probe;
  /// Snapshot file prefix; empty disables snapshots.
  std::string snapshot_prefix;
  /// Write a snapshot every this many probes (0: never).
  int snapshot_every = 0;
  OhmOptions ohm{.tol = 1e-12, .max_iter = 200, .remove_mean = true};
};

template <class State>
struct RunResult {
  explicit RunResult(State initial) : final_state(std::move(initial)) {}

  State final_state;
  std::vector<LedgerRow> rows;
  std::vector<EnergySample> energy_trace;
  DivergenceMax max_divergence;
  long steps = 0;
  long ohm_iterations = 0;
  int max_ohm_iterations = 0;
  std::vector<std::string> snapshots;
};

/// Steps of size at most dt that tile an interval of the given length.
int substeps(double length, double dt);

}  // namespace hallmhd

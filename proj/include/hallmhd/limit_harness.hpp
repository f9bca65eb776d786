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

// gamma -> 0 experiment: one Hall-MHD reference run and one
// Navier-Stokes-Maxwell run per gamma from the same (u0, B0), compared at
// common probe times. Also the frequency-band, high-frequency-current and
// source-term diagnostics.
//
// Errors are strong norms (sup over probes of the spatial L2 distance, and
// its L2-in-time counterpart). The convergence they stand in for is weak, so
// a decrease along the sweep is a surrogate, not a rate.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hallmhd/bands.hpp"
#include "hallmhd/fields.hpp"
#include "hallmhd/initial.hpp"
#include "hallmhd/nsm_solver.hpp"
#include "hallmhd/params.hpp"
#include "hallmhd/run.hpp"

namespace hallmhd {

struct BandDiagnostics {
  BandSpec thresholds;  ///< as computed from the parameters
  BandSpec used;        ///< thresholds.clamped()
  bool degenerate = false;
  std::array<double, 5> norms{};
  double total = 0;            ///< ||B||
  double partition_error = 0;  ///< |sum norms^2 - ||B||^2| / max(||B||^2, tiny)
};

/// Band norms of B. Unordered thresholds are clamped and flagged, never fatal.
BandDiagnostics band_diagnostics(const SpectralField& B, const PhysParams& p);

/// L2 norm of j restricted to |xi| > phi(gamma/delta).
double high_freq_current(const SpectralField& j, const PhysParams& p);

/// True when phi(gamma/delta) exceeds every lattice |xi| of the grid.
bool phi_above_nyquist(const Grid& g, const PhysParams& p);

struct SourceNorms {
  double g3_l2 = 0;       ///< ||u x B||
  double g4_l2 = 0;       ///< ||u (x) u||
  double grad_g4_l2 = 0;  ///< ||grad(u (x) u)||
  double grad_g4_lq = 0;  ///< ||grad(u (x) u)|| in L^q, q = 3/(3 - s)

  std::array<double, 4> as_array() const { return {g3_l2, g4_l2, grad_g4_l2, grad_g4_lq}; }
};

/// Norms by physical-space quadrature on the grid.
SourceNorms source_norms(const SpectralField& u, const SpectralField& B, double sobolev_s);
SourceNorms source_norms(const NsmState& s);

struct SweepConfig {
  std::vector<double> gamma_list{0.4, 0.2, 0.1, 0.05};
  PhysParams params;  ///< gamma is replaced per run
  InitialSpec initial;
  int n = 32;
  double dealias_fraction = 2.0 / 3.0;
  double T = 0.25;
  double probe_interval = 0.025;
  double cfl_safety = 0.25;
  int workers = 1;

  /// Throws ParamError unless gamma_list is nonempty, positive and strictly
  /// decreasing and the remaining fields are in range.
  void validate() const;
};

struct ProbeRecord {
  double t = 0;
  double err_u = 0;
  double err_B = 0;
  std::array<double, 5> bands{};
  double j_gg = 0;
  double energy = 0;     ///< full energy including gamma^2 ||E||^2
  double energy_ub = 0;  ///< (||u||^2 + ||B||^2) / 2
  SourceNorms sources;
};

struct GammaResult {
  double gamma = 0;
  bool ok = false;
  std::string failure;
  double dt = 0;
  long steps = 0;
  double sup_err_u = 0;
  double sup_err_B = 0;
  double l2t_err_u = 0;
  double l2t_err_B = 0;
  double l2t_mid = 0;   ///< time-integrated ||B_mid||
  double l2t_j_gg = 0;  ///< time-integrated ||j_>>||
  BandSpec thresholds;
  bool degenerate = false;
  bool phi_above_nyquist = false;
  double e0_discrepancy = 0;
  double energy_residual = 0;
  double max_energy_gap = 0;  ///< max over probes of |E_ub - E_hall|
  SourceNorms max_sources;
  DivergenceMax divergence;
  double max_partition_error = 0;
  int max_ohm_iterations = 0;
  std::vector<ProbeRecord> probes;
};

struct HallReference {
  double dt = 0;
  long steps = 0;
  double energy_residual = 0;
  DivergenceMax divergence;
  std::vector<LedgerRow> rows;
};

struct SweepReport {
  SweepConfig config;
  std::string config_hash;
  HallReference hall;
  std::vector<GammaResult> results;
  /// Least-squares slopes of log sup-error against log gamma over the
  /// successful runs with nonzero error; NaN with fewer than two points.
  double slope_u = 0;
  double slope_B = 0;
  double seconds = 0;

  bool any_ok() const;
};

/// Runs the Hall reference and every gamma, `config.workers` runs at a time.
/// A failing gamma is recorded and the sweep continues.
SweepReport gamma_sweep(const SweepConfig& config);

/// Least-squares slope of log(y) on log(x) over pairs with x, y > 0.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

void write_sweep_json(std::ostream& os, const SweepReport& r);
/// Long format: gamma,t,metric,value. The Hall reference uses gamma = 0.
void write_sweep_csv(std::ostream& os, const SweepReport& r);

}  // namespace hallmhd

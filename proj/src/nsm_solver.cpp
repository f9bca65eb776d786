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

#include "hallmhd/nsm_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "hallmhd/bands.hpp"
#include "hallmhd/errors.hpp"
#include "hallmhd/snapshot.hpp"
#include "hallmhd/spectral_maxwell.hpp"

namespace hallmhd {

namespace {

// Per-mode coefficients of exp(h L) for the most recent h.
class LinearFlow {
 public:
  explicit LinearFlow(const PhysParams& p) : p_(p) {}

  void apply(NsmState& s, double h) {
    const Grid& g = s.u.grid();
    refresh(g, h);
    const double gamma = p_.gamma;
    const double damping = p_.damping_rate();
    for (std::size_t m = 0; m < g.mode_count(); ++m) {
      for (int c = 0; c < 3; ++c) s.u.component(c)[m] *= visc_[m];
      cd e[3], b[3];
      for (int c = 0; c < 3; ++c) {
        e[c] = gamma * s.E.component(c)[m];
        b[c] = s.B.component(c)[m];
      }
      apply_maxwell_propagator(coef_[m], g.xi(m).data(), g.xi2(m), gamma, damping, e, b);
      for (int c = 0; c < 3; ++c) {
        s.E.component(c)[m] = e[c] / gamma;
        s.B.component(c)[m] = b[c];
      }
    }
    s.time += h;
  }

 private:
  void refresh(const Grid& g, double h) {
    if (h == h_ && coef_.size() == g.mode_count()) return;
    h_ = h;
    coef_.resize(g.mode_count());
    visc_.resize(g.mode_count());
    for (std::size_t m = 0; m < g.mode_count(); ++m) {
      coef_[m] = propagator_coefficients(h, std::sqrt(g.xi2(m)), p_);
      visc_[m] = std::exp(-g.xi2(m) * h);
    }
  }

  PhysParams p_;
  double h_ = std::numeric_limits<double>::quiet_NaN();
  std::vector<PropagatorCoefficients> coef_;
  std::vector<double> visc_;
};

void add_sources(NsmState& s, double h, const NsmSources& k) {
  s.u.axpy(h, k.du);
  s.E.axpy(h, k.dE);
}

void check_finite(const NsmState& s, long step_index) {
  if (all_finite(s.u) && all_finite(s.E) && all_finite(s.B)) return;
  std::ostringstream os;
  os << "nsm: non-finite field after step " << step_index << " at t = " << s.time
     << " (gamma = " << s.p.gamma << ")";
  throw NumericalError(os.str());
}

NsmState heun_step(const NsmState& v, const NsmSources& k1, double h, LinearFlow& flow,
                   const OhmOptions& ohm) {
  NsmState a = v;
  add_sources(a, h, k1);
  flow.apply(a, h);
  const NsmSources k2 = nsm_rhs_nonlinear(a, ohm, k1.ohm.j);

  NsmState b = v;
  add_sources(b, 0.5 * h, k1);
  flow.apply(b, h);
  add_sources(b, 0.5 * h, k2);
  return b;
}

void check_dt(const NsmState& s, const StepConfig& cfg) {
  if (!(cfg.dt > 0)) throw ParamError("nsm: dt must be positive");
  if (!(cfg.cfl_safety > 0 && cfg.cfl_safety <= 1)) throw ParamError("nsm: cfl_safety must lie in (0, 1]");
  if (!cfg.nonlinear) return;
  const double bound = nsm_stable_dt(s, cfg.cfl_safety);
  if (cfg.dt > bound * (1 + 1e-12)) {
    std::ostringstream os;
    os << "nsm: dt = " << cfg.dt << " exceeds the stability bound " << bound
       << " = cfl_safety * min(dx/|u|_inf, beta eta^2 gamma^2 / (1 + |B|_inf))";
    throw StepSizeError(os.str(), bound);
  }
}

NsmSources zero_sources(const NsmState& s) {
  return NsmSources{SpectralField(s.u.grid_ptr()), SpectralField(s.u.grid_ptr()),
                    SpectralField(s.u.grid_ptr()), OhmSolveReport(SpectralField(s.u.grid_ptr()))};
}

NsmSources sources_or_zero(const NsmState& s, const StepConfig& cfg, const OhmOptions& ohm,
                           const std::optional<SpectralField>& guess) {
  return cfg.nonlinear ? nsm_rhs_nonlinear(s, ohm, guess) : zero_sources(s);
}

}  // namespace

NsmSources nsm_rhs_nonlinear(const NsmState& s, const OhmOptions& ohm,
                             const std::optional<SpectralField>& j_guess) {
  const GridPtr& grid = s.u.grid_ptr();
  OhmSolveReport rep = solve_ohm(s.u, s.B, s.E, s.p, ohm, j_guess);

  SpectralField du = dealiased_cross(grid, to_physical(rep.j), to_physical(s.B));
  du -= divergence_of_outer(s.u);
  du = leray_project(du);
  if (ohm.remove_mean) du = remove_mean(du);

  const double g2 = s.p.gamma * s.p.gamma;
  SpectralField dE = leray_project(s.E);
  dE *= 1.0 / (s.p.resistivity() * g2);
  dE.axpy(-1.0 / g2, rep.j);
  dE.set_div_free(true);

  return NsmSources{std::move(du), std::move(dE), SpectralField(grid), std::move(rep)};
}

double nsm_stable_dt(const NsmState& s, double cfl_safety) {
  const double umax = linf_norm(s.u);
  const double bmax = linf_norm(s.B);
  const double advective =
      umax > 0 ? s.u.grid().spacing() / umax : std::numeric_limits<double>::infinity();
  const double stiff = s.p.resistivity() * s.p.gamma * s.p.gamma / (1.0 + bmax);
  return cfl_safety * std::min(advective, stiff);
}

NsmState nsm_linear_flow(const NsmState& s, double dt) {
  if (!(dt >= 0)) throw ParamError("nsm_linear_flow: dt must be nonnegative");
  LinearFlow flow(s.p);
  NsmState out = s;
  flow.apply(out, dt);
  return out;
}

NsmState step(const NsmState& s, const StepConfig& cfg) {
  s.p.validate();
  check_dt(s, cfg);
  LinearFlow flow(s.p);
  const OhmOptions ohm = RunOptions<NsmState>{}.ohm;
  NsmState out = cfg.nonlinear ? heun_step(s, nsm_rhs_nonlinear(s, ohm), cfg.dt, flow, ohm)
                               : nsm_linear_flow(s, cfg.dt);
  check_finite(out, 1);
  return out;
}

RunResult<NsmState> run_nsm(const NsmState& initial, double T, const StepConfig& cfg,
                            const RunOptions<NsmState>& opt) {
  initial.p.validate();
  if (!(T >= 0)) throw ParamError("run_nsm: T must be nonnegative");
  if (opt.probe_interval < 0) throw ParamError("run_nsm: probe_interval must be nonnegative");
  check_dt(initial, cfg);

  const PhysParams& p = initial.p;
  const BandSpec bands = BandSpec::from_params(p).clamped();
  LinearFlow flow(p);

  RunResult<NsmState> res(initial);
  NsmState& v = res.final_state;
  NsmSources k = sources_or_zero(v, cfg, opt.ohm, std::nullopt);

  auto dissipation = [&](const NsmState& s, const NsmSources& src) {
    return hdot_norm_squared(s.u, 1.0) + p.resistivity() * l2_norm_squared(src.ohm.j);
  };
  auto track_divergence = [&](const NsmState& s, const NsmSources& src) {
    auto& d = res.max_divergence;
    d.u = std::max(d.u, max_divergence(s.u));
    d.B = std::max(d.B, max_divergence(s.B));
    d.E = std::max(d.E, max_divergence(s.E));
    d.j = std::max(d.j, max_divergence(src.ohm.j));
  };
  auto account = [&](const NsmSources& src) {
    res.ohm_iterations += src.ohm.iterations;
    res.max_ohm_iterations = std::max(res.max_ohm_iterations, src.ohm.iterations);
  };
  int probe_index = 0;
  auto probe = [&](const NsmState& s, const NsmSources& src) {
    LedgerRow row;
    row.t = s.time;
    row.energy = energy(s.u, s.B, s.E, p.gamma);
    row.enstrophy = hdot_norm_squared(s.u, 1.0);
    row.joule = p.resistivity() * l2_norm_squared(src.ohm.j);
    row.divu_max = max_divergence(s.u);
    row.divB_max = max_divergence(s.B);
    row.bands = band_norms(s.B, bands);
    row.ohm_iters = src.ohm.iterations;
    row.ohm_residual = src.ohm.residual;
    res.rows.push_back(row);
    if (opt.on_probe) opt.on_probe(s, row);
    if (!opt.snapshot_prefix.empty() && opt.snapshot_every > 0 && probe_index % opt.snapshot_every == 0) {
      char name[32];
      std::snprintf(name, sizeof name, "_%05d.snap", probe_index);
      const std::string path = opt.snapshot_prefix + name;
      write_snapshot(path, Snapshot(SystemKind::nsm, s.time, p, s.u, s.B, s.E));
      res.snapshots.push_back(path);
    }
    ++probe_index;
  };

  account(k);
  track_divergence(v, k);
  res.energy_trace.push_back({v.time, energy(v.u, v.B, v.E, p.gamma), dissipation(v, k)});
  probe(v, k);

  const double t0 = initial.time;
  const double interval = opt.probe_interval > 0 ? opt.probe_interval : T;
  const int segments = T > 0 ? std::max(1, static_cast<int>(std::ceil(T / interval - 1e-9))) : 0;
  for (int seg = 0; seg < segments; ++seg) {
    const double seg_start = t0 + seg * interval;
    const double seg_end = seg + 1 == segments ? t0 + T : t0 + (seg + 1) * interval;
    const int n = substeps(seg_end - seg_start, cfg.dt);
    const double h = (seg_end - seg_start) / n;
    for (int i = 0; i < n; ++i) {
      NsmState next = cfg.nonlinear ? heun_step(v, k, h, flow, opt.ohm) : v;
      if (!cfg.nonlinear) flow.apply(next, h);
      ++res.steps;
      check_finite(next, res.steps);
      next.time = i + 1 == n ? seg_end : seg_start + (i + 1) * h;
      k = sources_or_zero(next, cfg, opt.ohm, k.ohm.j);
      v = std::move(next);
      account(k);
      track_divergence(v, k);
      res.energy_trace.push_back({v.time, energy(v.u, v.B, v.E, p.gamma), dissipation(v, k)});
    }
    probe(v, k);
  }
  return res;
}

}  // namespace hallmhd

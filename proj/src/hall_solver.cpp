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

#include "hallmhd/hall_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "hallmhd/bands.hpp"
#include "hallmhd/errors.hpp"
#include "hallmhd/snapshot.hpp"

namespace hallmhd {

namespace {

class DiffusionFlow {
 public:
  explicit DiffusionFlow(const PhysParams& p) : resistivity_(p.resistivity()) {}

  void apply(HallState& s, double h) {
    const Grid& g = s.u.grid();
    if (h != h_ || fu_.size() != g.mode_count()) {
      h_ = h;
      fu_.resize(g.mode_count());
      fb_.resize(g.mode_count());
      for (std::size_t m = 0; m < g.mode_count(); ++m) {
        fu_[m] = std::exp(-g.xi2(m) * h);
        fb_[m] = std::exp(-resistivity_ * g.xi2(m) * h);
      }
    }
    for (int c = 0; c < 3; ++c) {
      auto& u = s.u.component(c);
      auto& b = s.B.component(c);
      for (std::size_t m = 0; m < g.mode_count(); ++m) {
        u[m] *= fu_[m];
        b[m] *= fb_[m];
      }
    }
    s.time += h;
  }

 private:
  double resistivity_;
  double h_ = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> fu_, fb_;
};

void add_sources(HallState& s, double h, const HallSources& k) {
  s.u.axpy(h, k.du);
  s.B.axpy(h, k.dB);
}

HallSources zero_sources(const HallState& s) {
  return {SpectralField(s.u.grid_ptr()), SpectralField(s.u.grid_ptr())};
}

HallState heun_step(const HallState& v, const HallSources& k1, double h, DiffusionFlow& flow,
                    const StepConfig& cfg, bool remove_mean) {
  HallState a = v;
  add_sources(a, h, k1);
  flow.apply(a, h);
  const HallSources k2 = cfg.nonlinear ? hall_rhs(a, remove_mean) : zero_sources(a);

  HallState b = v;
  add_sources(b, 0.5 * h, k1);
  flow.apply(b, h);
  add_sources(b, 0.5 * h, k2);
  return b;
}

void check_dt(const HallState& s, const StepConfig& cfg) {
  if (!(cfg.dt > 0)) throw ParamError("hall: dt must be positive");
  if (!(cfg.cfl_safety > 0 && cfg.cfl_safety <= 1)) throw ParamError("hall: cfl_safety must lie in (0, 1]");
  if (!cfg.nonlinear) return;
  const double bound = hall_stable_dt(s, cfg.cfl_safety);
  if (cfg.dt > bound * (1 + 1e-12)) {
    std::ostringstream os;
    os << "hall: dt = " << cfg.dt << " exceeds the stability bound " << bound
       << " = cfl_safety * min(dx/|u|_inf, 0.5 dx^2 / (eta |B|_inf))";
    throw StepSizeError(os.str(), bound);
  }
}

void check_finite(const HallState& s, long step_index) {
  if (all_finite(s.u) && all_finite(s.B)) return;
  std::ostringstream os;
  os << "hall: non-finite field after step " << step_index << " at t = " << s.time;
  throw NumericalError(os.str());
}

}  // namespace

SpectralField hall_term(const SpectralField& B, double eta) {
  SpectralField out = curl(dealiased_cross(curl(B), B));
  out *= eta;
  return out;
}

HallSources hall_rhs(const HallState& s, bool remove_mean_mode) {
  const GridPtr& grid = s.u.grid_ptr();
  const SpectralField j = curl(s.B);
  const PhysicalVector b_phys = to_physical(s.B);

  const SpectralField lorentz = dealiased_cross(grid, to_physical(j), b_phys);

  SpectralField du = lorentz - divergence_of_outer(s.u);
  du = leray_project(du);
  if (remove_mean_mode) du = remove_mean(du);

  SpectralField jxb = s.p.eta * lorentz;
  jxb -= dealiased_cross(grid, to_physical(s.u), b_phys);
  SpectralField dB = curl(jxb);
  dB *= -1.0;
  return {std::move(du), std::move(dB)};
}

double hall_stable_dt(const HallState& s, double cfl_safety) {
  const double dx = s.u.grid().spacing();
  const double umax = linf_norm(s.u);
  const double bmax = linf_norm(s.B);
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double advective = umax > 0 ? dx / umax : inf;
  const double whistler = bmax > 0 ? 0.5 * dx * dx / (s.p.eta * bmax) : inf;
  return cfl_safety * std::min(advective, whistler);
}

HallState step_hall(const HallState& s, const StepConfig& cfg) {
  s.p.validate();
  check_dt(s, cfg);
  DiffusionFlow flow(s.p);
  const HallSources k1 = cfg.nonlinear ? hall_rhs(s) : zero_sources(s);
  HallState out = heun_step(s, k1, cfg.dt, flow, cfg, true);
  check_finite(out, 1);
  return out;
}

RunResult<HallState> run_hall(const HallState& initial, double T, const StepConfig& cfg,
                              const RunOptions<HallState>& opt) {
  initial.p.validate();
  if (!(T >= 0)) throw ParamError("run_hall: T must be nonnegative");
  if (opt.probe_interval < 0) throw ParamError("run_hall: probe_interval must be nonnegative");
  check_dt(initial, cfg);

  const PhysParams& p = initial.p;
  const BandSpec bands = BandSpec::from_params(p).clamped();
  const bool rm = opt.ohm.remove_mean;
  DiffusionFlow flow(p);

  RunResult<HallState> res(initial);
  HallState& v = res.final_state;
  HallSources k = cfg.nonlinear ? hall_rhs(v, rm) : zero_sources(v);

  auto joule = [&](const HallState& s) { return p.resistivity() * l2_norm_squared(curl(s.B)); };
  auto sample = [&](const HallState& s) {
    auto& d = res.max_divergence;
    d.u = std::max(d.u, max_divergence(s.u));
    d.B = std::max(d.B, max_divergence(s.B));
    d.j = std::max(d.j, max_divergence(curl(s.B)));
    res.energy_trace.push_back({s.time, 0.5 * (l2_norm_squared(s.u) + l2_norm_squared(s.B)),
                                hdot_norm_squared(s.u, 1.0) + joule(s)});
  };
  int probe_index = 0;
  auto probe = [&](const HallState& s) {
    LedgerRow row;
    row.t = s.time;
    row.energy = 0.5 * (l2_norm_squared(s.u) + l2_norm_squared(s.B));
    row.enstrophy = hdot_norm_squared(s.u, 1.0);
    row.joule = joule(s);
    row.divu_max = max_divergence(s.u);
    row.divB_max = max_divergence(s.B);
    row.bands = band_norms(s.B, bands);
    res.rows.push_back(row);
    if (opt.on_probe) opt.on_probe(s, row);
    if (!opt.snapshot_prefix.empty() && opt.snapshot_every > 0 && probe_index % opt.snapshot_every == 0) {
      char name[32];
      std::snprintf(name, sizeof name, "_%05d.snap", probe_index);
      const std::string path = opt.snapshot_prefix + name;
      write_snapshot(path, Snapshot(SystemKind::hall, s.time, p, s.u, s.B));
      res.snapshots.push_back(path);
    }
    ++probe_index;
  };

  sample(v);
  probe(v);

  const double t0 = initial.time;
  const double interval = opt.probe_interval > 0 ? opt.probe_interval : T;
  const int segments = T > 0 ? std::max(1, static_cast<int>(std::ceil(T / interval - 1e-9))) : 0;
  for (int seg = 0; seg < segments; ++seg) {
    const double seg_start = t0 + seg * interval;
    const double seg_end = seg + 1 == segments ? t0 + T : t0 + (seg + 1) * interval;
    const int n = substeps(seg_end - seg_start, cfg.dt);
    const double h = (seg_end - seg_start) / n;
    for (int i = 0; i < n; ++i) {
      HallState next = heun_step(v, k, h, flow, cfg, rm);
      ++res.steps;
      check_finite(next, res.steps);
      next.time = i + 1 == n ? seg_end : seg_start + (i + 1) * h;
      v = std::move(next);
      k = cfg.nonlinear ? hall_rhs(v, rm) : zero_sources(v);
      sample(v);
    }
    probe(v);
  }
  return res;
}

}  // namespace hallmhd

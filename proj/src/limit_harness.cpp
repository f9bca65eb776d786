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

#include "hallmhd/limit_harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "hallmhd/errors.hpp"
#include "hallmhd/hall_solver.hpp"
#include "hallmhd/ledger.hpp"

namespace hallmhd {

BandDiagnostics band_diagnostics(const SpectralField& B, const PhysParams& p) {
  BandDiagnostics d;
  d.thresholds = BandSpec::from_params(p);
  d.degenerate = !d.thresholds.ordered();
  d.used = d.thresholds.clamped();
  d.norms = band_norms(B, d.used);
  const double total2 = l2_norm_squared(B);
  d.total = std::sqrt(total2);
  double sum = 0;
  for (double v : d.norms) sum += v * v;
  d.partition_error = std::abs(sum - total2) / std::max(total2, 1e-300);
  return d;
}

double high_freq_current(const SpectralField& j, const PhysParams& p) {
  const Grid& g = j.grid();
  const double phi = phi_cutoff(p.gamma / p.band_delta, p.sobolev_s);
  const double phi2 = phi * phi;
  std::vector<double> terms;
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    if (!(g.xi2(m) > phi2)) continue;
    double s = 0;
    for (int c = 0; c < 3; ++c) s += std::norm(j.component(c)[m]);
    terms.push_back(g.weight(m) * s);
  }
  return std::sqrt(g.parseval_factor() * pairwise_sum(terms));
}

bool phi_above_nyquist(const Grid& g, const PhysParams& p) {
  return phi_cutoff(p.gamma / p.band_delta, p.sobolev_s) > g.max_lattice_radius();
}

SourceNorms source_norms(const SpectralField& u, const SpectralField& B, double sobolev_s) {
  const Grid& g = u.grid();
  const std::size_t N = g.real_size();
  const double cell = std::pow(g.spacing(), 3);
  const double q = 3.0 / (3.0 - sobolev_s);

  const PhysicalVector up = to_physical(u);
  const PhysicalVector bp = to_physical(B);
  // du[k][i] = d_k u_i
  std::array<PhysicalVector, 3> du;
  for (int k = 0; k < 3; ++k) {
    SpectralField d(u.grid_ptr());
    for (std::size_t m = 0; m < g.mode_count(); ++m)
      for (int i = 0; i < 3; ++i) d.component(i)[m] = cd(0, g.xi(m)[k]) * u.component(i)[m];
    du[k] = to_physical(d);
  }

  std::vector<double> g3(N), g4(N), gg2(N), ggq(N);
  for (std::size_t x = 0; x < N; ++x) {
    const double c0 = up[1][x] * bp[2][x] - up[2][x] * bp[1][x];
    const double c1 = up[2][x] * bp[0][x] - up[0][x] * bp[2][x];
    const double c2 = up[0][x] * bp[1][x] - up[1][x] * bp[0][x];
    g3[x] = c0 * c0 + c1 * c1 + c2 * c2;
    const double u2 = up[0][x] * up[0][x] + up[1][x] * up[1][x] + up[2][x] * up[2][x];
    g4[x] = u2 * u2;
    double s = 0;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double v = up[i][x] * du[k][j][x] + up[j][x] * du[k][i][x];
          s += v * v;
        }
    gg2[x] = s;
    ggq[x] = std::pow(s, 0.5 * q);
  }
  SourceNorms n;
  n.g3_l2 = std::sqrt(cell * pairwise_sum(g3));
  n.g4_l2 = std::sqrt(cell * pairwise_sum(g4));
  n.grad_g4_l2 = std::sqrt(cell * pairwise_sum(gg2));
  n.grad_g4_lq = std::pow(cell * pairwise_sum(ggq), 1.0 / q);
  return n;
}

SourceNorms source_norms(const NsmState& s) { return source_norms(s.u, s.B, s.p.sobolev_s); }

void SweepConfig::validate() const {
  if (gamma_list.empty()) throw ParamError("sweep: gamma_list is empty");
  for (std::size_t i = 0; i < gamma_list.size(); ++i) {
    if (!(gamma_list[i] > 0 && gamma_list[i] <= 1)) throw ParamError("sweep: every gamma must lie in (0, 1]");
    if (i > 0 && !(gamma_list[i] < gamma_list[i - 1]))
      throw ParamError("sweep: gamma_list must be strictly decreasing");
  }
  if (!(T >= 0)) throw ParamError("sweep: T must be nonnegative");
  if (!(probe_interval > 0)) throw ParamError("sweep: probe_interval must be positive");
  if (!(cfl_safety > 0 && cfl_safety <= 1)) throw ParamError("sweep: cfl_safety must lie in (0, 1]");
  if (workers < 1) throw ParamError("sweep: workers must be >= 1");
  PhysParams p = params;
  p.gamma = gamma_list.front();
  p.validate();
}

bool SweepReport::any_ok() const {
  return std::any_of(results.begin(), results.end(), [](const GammaResult& r) { return r.ok; });
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (x[i] > 0 && y[i] > 0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  return sxx > 0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

namespace {

struct ProbeFields {
  double t;
  SpectralField u;
  SpectralField B;
};

struct NsmJob {
  GammaResult result;
  std::vector<ProbeFields> fields;
};

struct HallJob {
  bool ok = false;
  std::string failure;
  HallReference ref;
  std::vector<ProbeFields> fields;
};

// sqrt of the trapezoid rule for the integral of f^2.
double l2_in_time(const std::vector<double>& t, const std::vector<double>& f) {
  double s = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    s += 0.5 * (t[i + 1] - t[i]) * (f[i] * f[i] + f[i + 1] * f[i + 1]);
  return std::sqrt(s);
}

void run_gamma(NsmJob& job, const SweepConfig& cfg, const NsmState& s0, double dt) {
  GammaResult& r = job.result;
  const PhysParams& p = s0.p;
  r.dt = dt;
  r.thresholds = BandSpec::from_params(p);
  r.degenerate = !r.thresholds.ordered();
  r.phi_above_nyquist = phi_above_nyquist(s0.u.grid(), p);
  r.e0_discrepancy = l2_norm(s0.E - well_prepared_electric_field(s0.u, s0.B, p));

  RunOptions<NsmState> opt;
  opt.probe_interval = cfg.probe_interval;
  opt.on_probe = [&](const NsmState& s, const LedgerRow& row) {
    ProbeRecord pr;
    pr.t = s.time;
    const auto bd = band_diagnostics(s.B, p);
    pr.bands = bd.norms;
    r.max_partition_error = std::max(r.max_partition_error, bd.partition_error);
    pr.j_gg = high_freq_current(solve_ohm(s.u, s.B, s.E, p, opt.ohm).j, p);
    pr.energy = row.energy;
    pr.energy_ub = 0.5 * (l2_norm_squared(s.u) + l2_norm_squared(s.B));
    pr.sources = source_norms(s);
    r.probes.push_back(pr);
    job.fields.push_back({s.time, s.u, s.B});
  };
  StepConfig sc;
  sc.dt = dt;
  sc.cfl_safety = cfg.cfl_safety;
  const auto res = run_nsm(s0, cfg.T, sc, opt);
  r.steps = res.steps;
  r.energy_residual = energy_residual(res.energy_trace);
  r.divergence = res.max_divergence;
  r.max_ohm_iterations = res.max_ohm_iterations;
  r.ok = true;
}

void run_reference(HallJob& job, const SweepConfig& cfg, const HallState& h0, double dt) {
  RunOptions<HallState> opt;
  opt.probe_interval = cfg.probe_interval;
  opt.on_probe = [&](const HallState& s, const LedgerRow&) { job.fields.push_back({s.time, s.u, s.B}); };
  StepConfig sc;
  sc.dt = dt;
  sc.cfl_safety = cfg.cfl_safety;
  const auto res = run_hall(h0, cfg.T, sc, opt);
  job.ref.dt = dt;
  job.ref.steps = res.steps;
  job.ref.energy_residual = energy_residual(res.energy_trace);
  job.ref.divergence = res.max_divergence;
  job.ref.rows = res.rows;
  job.ok = true;
}

}  // namespace

SweepReport gamma_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const GridPtr grid = Grid::create(cfg.n, cfg.dealias_fraction);

  std::vector<NsmState> initial;
  std::vector<double> dts;
  for (double g : cfg.gamma_list) {
    PhysParams p = cfg.params;
    p.gamma = g;
    initial.push_back(make_nsm_state(grid, p, cfg.initial));
    dts.push_back(nsm_stable_dt(initial.back(), cfg.cfl_safety));
  }
  PhysParams ph = cfg.params;
  ph.gamma = cfg.gamma_list.back();
  const HallState h0 = make_hall_state(grid, ph, cfg.initial);
  const double dt_hall = std::min(*std::min_element(dts.begin(), dts.end()), hall_stable_dt(h0, cfg.cfl_safety));

  const std::size_t G = cfg.gamma_list.size();
  HallJob hall;
  std::vector<NsmJob> jobs(G);
  for (std::size_t i = 0; i < G; ++i) jobs[i].result.gamma = cfg.gamma_list[i];

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) <= G;) {
      try {
        if (k == 0)
          run_reference(hall, cfg, h0, dt_hall);
        else
          run_gamma(jobs[k - 1], cfg, initial[k - 1], dts[k - 1]);
      } catch (const std::exception& e) {
        if (k == 0)
          hall.failure = e.what();
        else
          jobs[k - 1].result.failure = e.what();
      }
    }
  };
  const int nthreads = std::max(1, std::min<int>(cfg.workers, static_cast<int>(G + 1)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SweepReport rep;
  rep.config = cfg;
  rep.hall = hall.ref;
  for (auto& job : jobs) {
    GammaResult& r = job.result;
    if (r.ok && !hall.ok) {
      r.ok = false;
      r.failure = "reference Hall run failed: " + hall.failure;
    }
    if (r.ok && job.fields.size() != hall.fields.size()) {
      r.ok = false;
      r.failure = "probe count mismatch with the reference run";
    }
    if (r.ok) {
      std::vector<double> t, eu, eb, mid, jgg;
      for (std::size_t k = 0; k < job.fields.size(); ++k) {
        const auto& a = job.fields[k];
        const auto& h = hall.fields[k];
        if (std::abs(a.t - h.t) > 1e-12 * (1 + std::abs(h.t))) {
          r.ok = false;
          r.failure = "probe times differ from the reference run";
          break;
        }
        ProbeRecord& pr = r.probes[k];
        pr.err_u = l2_norm(a.u - h.u);
        pr.err_B = l2_norm(a.B - h.B);
        const double eh = 0.5 * (l2_norm_squared(h.u) + l2_norm_squared(h.B));
        r.max_energy_gap = std::max(r.max_energy_gap, std::abs(pr.energy_ub - eh));
        r.sup_err_u = std::max(r.sup_err_u, pr.err_u);
        r.sup_err_B = std::max(r.sup_err_B, pr.err_B);
        const auto s = pr.sources.as_array();
        auto m = r.max_sources.as_array();
        for (int q = 0; q < 4; ++q) m[q] = std::max(m[q], s[q]);
        r.max_sources = {m[0], m[1], m[2], m[3]};
        t.push_back(pr.t);
        eu.push_back(pr.err_u);
        eb.push_back(pr.err_B);
        mid.push_back(pr.bands[static_cast<int>(Band::mid)]);
        jgg.push_back(pr.j_gg);
      }
      r.l2t_err_u = l2_in_time(t, eu);
      r.l2t_err_B = l2_in_time(t, eb);
      r.l2t_mid = l2_in_time(t, mid);
      r.l2t_j_gg = l2_in_time(t, jgg);
    }
    rep.results.push_back(std::move(r));
  }

  std::vector<double> gs, su, sb;
  for (const auto& r : rep.results)
    if (r.ok) {
      gs.push_back(r.gamma);
      su.push_back(r.sup_err_u);
      sb.push_back(r.sup_err_B);
    }
  rep.slope_u = fit_loglog_slope(gs, su);
  rep.slope_B = fit_loglog_slope(gs, sb);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const BandSpec& b) {
  return {{"R", b.radius_low}, {"lt", b.radius_lt}, {"mid", b.radius_mid}, {"phi", b.radius_phi}};
}

ojson to_json(const DivergenceMax& d) { return {{"u", d.u}, {"B", d.B}, {"E", d.E}, {"j", d.j}}; }

ojson to_json(const SourceNorms& s) {
  return {{"g3_l2", s.g3_l2}, {"g4_l2", s.g4_l2}, {"grad_g4_l2", s.grad_g4_l2}, {"grad_g4_lq", s.grad_g4_lq}};
}

const char* const kBandColumns[5] = {"band_ll", "band_lt", "band_mid", "band_gt", "band_gg"};

}  // namespace

void write_sweep_json(std::ostream& os, const SweepReport& r) {
  const auto& c = r.config;
  ojson j;
  j["config_hash"] = r.config_hash;
  j["config"] = {{"gamma_list", c.gamma_list},
                 {"beta", c.params.beta},
                 {"eta", c.params.eta},
                 {"s", c.params.sobolev_s},
                 {"K", c.params.band_K},
                 {"R", c.params.band_R},
                 {"delta", c.params.band_delta},
                 {"n", c.n},
                 {"dealias_fraction", c.dealias_fraction},
                 {"T", c.T},
                 {"probe_interval", c.probe_interval},
                 {"cfl_safety", c.cfl_safety},
                 {"preset", std::string(to_string(c.initial.preset))},
                 {"amplitude", c.initial.amplitude},
                 {"e0_policy", std::string(to_string(c.initial.e_policy))},
                 {"seed", c.initial.seed}};
  j["error_norm"] = "strong L2 surrogate: sup over probes and L2 in time";
  j["slope_u"] = r.slope_u;
  j["slope_B"] = r.slope_B;
  j["seconds"] = r.seconds;
  j["hall_reference"] = {{"dt", r.hall.dt},
                         {"steps", r.hall.steps},
                         {"energy_residual", r.hall.energy_residual},
                         {"max_divergence", to_json(r.hall.divergence)}};
  ojson runs = ojson::array();
  for (const auto& g : r.results) {
    ojson o = {{"gamma", g.gamma}, {"ok", g.ok}, {"failure", g.failure}, {"dt", g.dt}, {"steps", g.steps},
               {"sup_err_u", g.sup_err_u}, {"sup_err_B", g.sup_err_B}, {"l2t_err_u", g.l2t_err_u},
               {"l2t_err_B", g.l2t_err_B}, {"l2t_band_mid", g.l2t_mid}, {"l2t_j_gg", g.l2t_j_gg},
               {"thresholds", to_json(g.thresholds)}, {"bands_degenerate", g.degenerate},
               {"phi_above_nyquist", g.phi_above_nyquist}, {"e0_discrepancy", g.e0_discrepancy},
               {"energy_residual", g.energy_residual}, {"max_energy_gap", g.max_energy_gap},
               {"max_sources", to_json(g.max_sources)}, {"max_divergence", to_json(g.divergence)},
               {"max_partition_error", g.max_partition_error}, {"max_ohm_iterations", g.max_ohm_iterations}};
    ojson probes = ojson::array();
    for (const auto& pr : g.probes)
      probes.push_back({{"t", pr.t}, {"err_u", pr.err_u}, {"err_B", pr.err_B}, {"bands", pr.bands},
                        {"j_gg", pr.j_gg}, {"energy", pr.energy}, {"sources", to_json(pr.sources)}});
    o["probes"] = std::move(probes);
    runs.push_back(std::move(o));
  }
  j["runs"] = std::move(runs);
  os << j.dump(2) << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepReport& r) {
  os << "gamma,t,metric,value\n";
  auto row = [&](double gamma, double t, const char* metric, double v) {
    os << format_double(gamma) << ',' << format_double(t) << ',' << metric << ',' << format_double(v) << '\n';
  };
  for (const auto& lr : r.hall.rows) {
    row(0.0, lr.t, "energy", lr.energy);
    for (int b = 0; b < 5; ++b) row(0.0, lr.t, kBandColumns[b], lr.bands[b]);
  }
  for (const auto& g : r.results) {
    if (!g.ok) continue;
    for (const auto& p : g.probes) {
      row(g.gamma, p.t, "err_u", p.err_u);
      row(g.gamma, p.t, "err_B", p.err_B);
      for (int b = 0; b < 5; ++b) row(g.gamma, p.t, kBandColumns[b], p.bands[b]);
      row(g.gamma, p.t, "j_gg", p.j_gg);
      row(g.gamma, p.t, "energy", p.energy);
      row(g.gamma, p.t, "energy_ub", p.energy_ub);
      row(g.gamma, p.t, "g3_l2", p.sources.g3_l2);
      row(g.gamma, p.t, "g4_l2", p.sources.g4_l2);
      row(g.gamma, p.t, "grad_g4_l2", p.sources.grad_g4_l2);
      row(g.gamma, p.t, "grad_g4_lq", p.sources.grad_g4_lq);
    }
  }
}

}  // namespace hallmhd

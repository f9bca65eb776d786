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

// hallmhd: command-line driver.
//
//   hallmhd verify-spectrum [--config FILE]
//   hallmhd simulate {nsm|hall} [--config FILE]
//   hallmhd sweep [--config FILE]
//   hallmhd bands SNAPSHOT
//
// Exit codes: 0 ok, 1 verification failure, 2 configuration error,
// 3 runtime failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hallmhd/config.hpp"
#include "hallmhd/errors.hpp"
#include "hallmhd/grid.hpp"
#include "hallmhd/hall_solver.hpp"
#include "hallmhd/initial.hpp"
#include "hallmhd/ledger.hpp"
#include "hallmhd/limit_harness.hpp"
#include "hallmhd/nsm_solver.hpp"
#include "hallmhd/snapshot.hpp"
#include "hallmhd/spectrum_scan.hpp"

namespace fs = std::filesystem;
using namespace hallmhd;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

struct Globals {
  std::string config_path;
  std::string output_dir;
  int workers = 0;
  bool verbose = false;
};

RunConfig load(const Globals& g) {
  RunConfig c = g.config_path.empty() ? RunConfig{} : load_config(g.config_path);
  if (!g.output_dir.empty())
    c.output_directory = g.output_dir;
  else if (const char* env = std::getenv("HALLMHD_OUTPUT_DIR"); env && *env)
    c.output_directory = env;
  if (g.workers > 0) c.workers = g.workers;
  return c;
}

fs::path prepare_dir(const RunConfig& c) {
  fs::path dir(c.output_directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  return dir;
}

bool wants(const RunConfig& c, const std::string& fmt) {
  for (const auto& f : c.formats)
    if (f == fmt) return true;
  return false;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream os(p);
  if (!os) throw IoError("cannot open '" + p.string() + "' for writing");
  return os;
}

int verify_spectrum(const Globals& g) {
  const RunConfig c = load(g);
  const std::string hash = config_hash(c);
  const auto eig = eigen_oracle_scan(c.eigen_samples, c.verify_seed);
  const auto bounds = eigen_bound_scan(c.bound_points);
  const bool ok = eig.max_rel_error() <= 1e-10 && bounds.violations == 0;

  const fs::path path = prepare_dir(c) / ("verify_spectrum_" + hash + ".txt");
  auto os = open_out(path);
  os << "config_hash " << hash << "\n\n"
     << "eigenvalue oracle: " << eig.samples << " samples, " << eig.rejected_near_shell
     << " rejected near the resonant shell, " << eig.seconds << " s\n"
     << "  max relative error lambda0 " << format_double(eig.max_rel_error_lambda0) << "\n"
     << "  max relative error lambda+ " << format_double(eig.max_rel_error_plus) << "\n"
     << "  max relative error lambda- " << format_double(eig.max_rel_error_minus) << "\n"
     << "  max spurious zero         " << format_double(eig.max_spurious_zero) << "\n"
     << "  max trace error           " << format_double(eig.max_vieta_sum_error) << "\n"
     << "  max product error         " << format_double(eig.max_vieta_product_error) << "\n\n"
     << "eigenvalue estimates: " << bounds.wavevectors << " wavevectors, " << bounds.evaluations
     << " evaluations, " << bounds.violations << " violations, " << bounds.seconds << " s\n"
     << "  empirical omega " << format_double(bounds.empirical_omega) << ", reference omega "
     << format_double(bounds.reference_omega) << "\n\n";
  os << "check";
  for (const char* l : MarginHistogram::kLabels) os << " | " << l;
  os << " | n/a | min margin\n";
  for (const auto& [name, st] : bounds.per_check) {
    os << name;
    for (long n : st.histogram.counts) os << " | " << n;
    os << " | " << st.not_applicable << " | " << format_double(st.min_relative_margin) << "\n";
  }
  std::cout << "eigen oracle max relative error " << format_double(eig.max_rel_error()) << "\n"
            << "estimate violations " << bounds.violations << "\n"
            << "report " << path.string() << "\n"
            << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int simulate(const Globals& g, const std::string& system) {
  const RunConfig c = load(g);
  const std::string hash = config_hash(c);
  const GridPtr grid = Grid::create(c.n, c.dealias_fraction);
  const fs::path dir = prepare_dir(c);
  const std::string stem = system + "_" + hash;

  StepConfig sc;
  sc.cfl_safety = c.cfl_safety;
  std::vector<LedgerRow> rows;
  double final_energy = 0;
  long steps = 0;
  if (system == "nsm") {
    const NsmState s0 = make_nsm_state(grid, c.physics, c.initial);
    sc.dt = c.dt_policy == DtPolicy::automatic ? nsm_stable_dt(s0, c.cfl_safety) : c.dt;
    RunOptions<NsmState> opt;
    opt.probe_interval = c.probe_interval;
    opt.snapshot_every = c.snapshot_every;
    if (c.snapshot_every > 0) opt.snapshot_prefix = (dir / stem).string();
    if (g.verbose)
      opt.on_probe = [](const NsmState&, const LedgerRow& r) {
        std::cerr << "t = " << r.t << "  energy = " << format_double(r.energy) << "\n";
      };
    auto res = run_nsm(s0, c.T, sc, opt);
    rows = std::move(res.rows);
    steps = res.steps;
  } else {
    const HallState s0 = make_hall_state(grid, c.physics, c.initial);
    sc.dt = c.dt_policy == DtPolicy::automatic ? hall_stable_dt(s0, c.cfl_safety) : c.dt;
    if (!std::isfinite(sc.dt)) sc.dt = c.probe_interval;
    RunOptions<HallState> opt;
    opt.probe_interval = c.probe_interval;
    opt.snapshot_every = c.snapshot_every;
    if (c.snapshot_every > 0) opt.snapshot_prefix = (dir / stem).string();
    if (g.verbose)
      opt.on_probe = [](const HallState&, const LedgerRow& r) {
        std::cerr << "t = " << r.t << "  energy = " << format_double(r.energy) << "\n";
      };
    auto res = run_hall(s0, c.T, sc, opt);
    rows = std::move(res.rows);
    steps = res.steps;
  }
  final_energy = rows.back().energy;

  const fs::path ledger = dir / (stem + ".csv");
  auto os = open_out(ledger);
  os << "# config_hash " << hash << "\n";
  write_ledger(os, rows);
  std::cout << "ledger " << ledger.string() << "\n"
            << "steps " << steps << " dt " << format_double(sc.dt) << "\n"
            << "final t " << format_double(rows.back().t) << " energy " << format_double(final_energy) << "\n";
  return kOk;
}

int sweep(const Globals& g) {
  const RunConfig c = load(g);
  if (!c.gamma_list)
    throw ConfigError(g.config_path.empty() ? "<defaults>" : g.config_path, 0, "missing gamma_list in [sweep]");
  SweepConfig sc;
  sc.gamma_list = *c.gamma_list;
  sc.params = c.physics;
  sc.initial = c.initial;
  sc.n = c.n;
  sc.dealias_fraction = c.dealias_fraction;
  sc.T = c.T;
  sc.probe_interval = c.probe_interval;
  sc.cfl_safety = c.cfl_safety;
  sc.workers = c.workers;
  SweepReport rep = gamma_sweep(sc);
  rep.config_hash = config_hash(c);

  const fs::path dir = prepare_dir(c);
  const std::string stem = "sweep_" + rep.config_hash;
  if (wants(c, "json")) {
    auto os = open_out(dir / (stem + ".json"));
    write_sweep_json(os, rep);
  }
  if (wants(c, "csv")) {
    auto os = open_out(dir / (stem + ".csv"));
    write_sweep_csv(os, rep);
  }
  std::cout << "gamma,sup_err_u,sup_err_B,l2t_band_mid,l2t_j_gg,status\n";
  for (const auto& r : rep.results)
    std::cout << format_double(r.gamma) << ',' << format_double(r.sup_err_u) << ','
              << format_double(r.sup_err_B) << ',' << format_double(r.l2t_mid) << ','
              << format_double(r.l2t_j_gg) << ',' << (r.ok ? "ok" : "failed: " + r.failure) << "\n";
  std::cout << "slope_u " << format_double(rep.slope_u) << "\n"
            << "slope_B " << format_double(rep.slope_B) << "\n"
            << "outputs " << (dir / stem).string() << ".{json,csv}\n";
  return rep.any_ok() ? kOk : kRuntimeError;
}

int bands(const std::string& path) {
  const Snapshot s = read_snapshot(path);
  const auto d = band_diagnostics(s.B, s.p);
  const auto& t = d.thresholds;
  std::cout << "system " << (s.system == SystemKind::nsm ? "nsm" : "hall") << " t " << format_double(s.time)
            << " n " << s.B.grid().n() << " gamma " << format_double(s.p.gamma) << "\n"
            << "thresholds R " << format_double(t.radius_low) << " lt " << format_double(t.radius_lt) << " mid "
            << format_double(t.radius_mid) << " phi " << format_double(t.radius_phi)
            << (d.degenerate ? " (unordered, clamped)" : "") << "\n";
  for (Band b : kAllBands)
    std::cout << "band_" << to_string(b) << " " << format_double(d.norms[static_cast<int>(b)]) << "\n";
  std::cout << "total " << format_double(d.total) << "\n"
            << "partition_error " << format_double(d.partition_error) << "\n"
            << "phi_above_nyquist " << (phi_above_nyquist(s.B.grid(), s.p) ? "yes" : "no") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Navier-Stokes-Maxwell / Hall-MHD spectral laboratory"};
  Globals g;
  app.add_option("--config", g.config_path, "configuration file")->check(CLI::ExistingFile);
  app.add_option("--output-dir", g.output_dir, "output directory (default: $HALLMHD_OUTPUT_DIR, then the config)");
  app.add_option("--workers", g.workers, "concurrent runs in a sweep")->check(CLI::PositiveNumber);
  app.add_flag("--verbose,-v", g.verbose, "progress on stderr");
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-spectrum", "eigenvalue oracle and estimate scan");
  std::string system;
  auto* sim = app.add_subcommand("simulate", "run one solver to T");
  sim->add_option("system", system, "nsm or hall")->required()->check(CLI::IsMember({"nsm", "hall"}));
  auto* sw = app.add_subcommand("sweep", "gamma -> 0 sweep against the Hall-MHD reference");
  std::string snapshot;
  auto* bd = app.add_subcommand("bands", "band norms of a snapshot file");
  bd->add_option("snapshot", snapshot, "snapshot path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (*verify) return verify_spectrum(g);
    if (*sim) return simulate(g, system);
    if (*sw) return sweep(g);
    if (*bd) return bands(snapshot);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ParamError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const StepSizeError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}

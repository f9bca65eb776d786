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

#include "hallmhd/initial.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "hallmhd/errors.hpp"
#include "hallmhd/ohm.hpp"

namespace hallmhd {

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::taylor_green: return "taylor_green";
    case Preset::magnetic_only: return "magnetic_only";
    case Preset::zero: return "zero";
    case Preset::random: return "random";
  }
  return "?";
}

std::string_view to_string(EPolicy p) { return p == EPolicy::zero ? "zero" : "well_prepared"; }

std::optional<Preset> parse_preset(std::string_view s) {
  for (Preset p : {Preset::taylor_green, Preset::magnetic_only, Preset::zero, Preset::random})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

std::optional<EPolicy> parse_e_policy(std::string_view s) {
  if (s == "zero") return EPolicy::zero;
  if (s == "well_prepared") return EPolicy::well_prepared;
  return std::nullopt;
}

namespace {

using VecFn = std::function<std::array<double, 3>(double, double, double)>;

SpectralField sample(const GridPtr& grid, const VecFn& f) {
  const int n = grid->n();
  PhysicalVector v;
  for (auto& c : v) c.resize(grid->real_size());
  std::size_t i = 0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++i) {
        const auto val = f(grid_coordinate(*grid, ix), grid_coordinate(*grid, iy), grid_coordinate(*grid, iz));
        for (int c = 0; c < 3; ++c) v[c][i] = val[c];
      }
  return dealias(from_physical(grid, v));
}

}  // namespace

SpectralField random_solenoidal(const GridPtr& grid, double linf, std::uint64_t seed, int kmax) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  SpectralField f(grid);
  const Grid& g = *grid;
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const auto l = g.lattice(m);
    if (std::abs(l[0]) > kmax || std::abs(l[1]) > kmax || l[2] > kmax || g.xi2(m) == 0.0) continue;
    const double amp = 1.0 / (1.0 + g.xi2(m));
    for (int c = 0; c < 3; ++c) f.component(c)[m] = amp * cd(normal(rng), normal(rng));
  }
  // A round trip through physical space restores Hermitian symmetry on the
  // kz = 0 and kz = n/2 planes.
  f = dealias(leray_project(from_physical(grid, to_physical(f))));
  f = remove_mean(f);
  const double mx = linf_norm(f);
  if (mx > 0) f *= linf / mx;
  f.set_div_free(true);
  return f;
}

InitialFields make_initial_fields(const GridPtr& grid, const InitialSpec& spec) {
  const double a = spec.amplitude;
  switch (spec.preset) {
    case Preset::taylor_green: {
      SpectralField u = leray_project(sample(grid, [a](double x, double y, double z) {
        return std::array<double, 3>{a * std::sin(y), a * std::sin(z), a * std::sin(x)};
      }));
      SpectralField B = leray_project(sample(grid, [a](double x, double y, double z) {
        return std::array<double, 3>{a * std::sin(z), a * std::sin(x), a * std::sin(y)};
      }));
      return {std::move(u), std::move(B)};
    }
    case Preset::magnetic_only: {
      SpectralField B = leray_project(sample(grid, [a](double x, double, double) {
        return std::array<double, 3>{0.0, a * std::sin(x), 0.5 * a * std::cos(2 * x)};
      }));
      SpectralField u(grid);
      u.set_div_free(true);
      return {std::move(u), std::move(B)};
    }
    case Preset::zero: {
      SpectralField u(grid), B(grid);
      u.set_div_free(true);
      B.set_div_free(true);
      return {std::move(u), std::move(B)};
    }
    case Preset::random:
      return {random_solenoidal(grid, a, spec.seed), random_solenoidal(grid, a, spec.seed + 0x9e3779b97f4a7c15ULL)};
  }
  throw ParamError("unknown preset");
}

SpectralField well_prepared_electric_field(const SpectralField& u, const SpectralField& B,
                                           const PhysParams& p) {
  SpectralField e = remove_mean(electric_field_closure(u, B, curl(B), p));
  e.set_div_free(true);
  return e;
}

NsmState make_nsm_state(const GridPtr& grid, const PhysParams& p, const InitialSpec& spec) {
  auto f = make_initial_fields(grid, spec);
  NsmState s(grid, p);
  if (spec.e_policy == EPolicy::well_prepared) s.E = well_prepared_electric_field(f.u, f.B, p);
  s.E.set_div_free(true);
  s.u = std::move(f.u);
  s.B = std::move(f.B);
  return s;
}

HallState make_hall_state(const GridPtr& grid, const PhysParams& p, const InitialSpec& spec) {
  auto f = make_initial_fields(grid, spec);
  HallState s(grid, p);
  s.u = std::move(f.u);
  s.B = std::move(f.B);
  return s;
}

}  // namespace hallmhd

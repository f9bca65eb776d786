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

// Initial-data presets shared by the solvers, the sweep and the CLI.

#include <cstdint>
#include <optional>
#include <string_view>

#include "hallmhd/fields.hpp"
#include "hallmhd/hall_solver.hpp"
#include "hallmhd/nsm_solver.hpp"
#include "hallmhd/params.hpp"

namespace hallmhd {

enum class Preset {
  taylor_green,   ///< u = A (sin y, sin z, sin x), B = A (sin z, sin x, sin y)
  magnetic_only,  ///< u = 0, B = A (0, sin x, cos 2x / 2): both nonlinear terms vanish
  zero,
  random,         ///< seeded solenoidal fields with modes |k_i| <= 4, scaled to max |f| = A
};

enum class EPolicy { zero, well_prepared };

std::string_view to_string(Preset p);
std::string_view to_string(EPolicy p);
std::optional<Preset> parse_preset(std::string_view s);
std::optional<EPolicy> parse_e_policy(std::string_view s);

struct InitialSpec {
  Preset preset = Preset::taylor_green;
  double amplitude = 0.2;
  EPolicy e_policy = EPolicy::well_prepared;
  std::uint64_t seed = 1;

  bool operator==(const InitialSpec&) const = default;
};

struct InitialFields {
  SpectralField u;
  SpectralField B;
};

InitialFields make_initial_fields(const GridPtr& grid, const InitialSpec& spec);

/// Random divergence-free field with lattice modes |k_i| <= kmax, dealiased,
/// zero mean, scaled so its maximum pointwise magnitude equals `linf`.
SpectralField random_solenoidal(const GridPtr& grid, double linf, std::uint64_t seed, int kmax = 4);

/// E0 = P(-u x B + beta eta^2 j + eta j x B) with j = curl B, mean removed.
SpectralField well_prepared_electric_field(const SpectralField& u, const SpectralField& B,
                                           const PhysParams& p);

NsmState make_nsm_state(const GridPtr& grid, const PhysParams& p, const InitialSpec& spec);
HallState make_hall_state(const GridPtr& grid, const PhysParams& p, const InitialSpec& spec);

}  // namespace hallmhd

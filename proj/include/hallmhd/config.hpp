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

// Run configuration: an INI-style text document.
//
//   [physics]  beta, eta, gamma, s, K, R, delta
//   [grid]     n, dealias_fraction
//   [time]     dt_policy (auto | fixed), dt, T, cfl_safety, probe_interval
//   [initial]  preset, amplitude, e0_policy, seed
//   [output]   directory, snapshot_every, formats (comma list of csv, json)
//   [sweep]    gamma_list (comma list), workers
//   [verify]   eigen_samples, seed, bound_points
//
// '#' and ';' start comments. Every key is optional; unknown sections or
// keys are errors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallmhd/errors.hpp"
#include "hallmhd/initial.hpp"
#include "hallmhd/params.hpp"

namespace hallmhd {

class ConfigError : public Error {
 public:
  ConfigError(const std::string& source, int line, const std::string& what)
      : Error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class DtPolicy { automatic, fixed };

struct RunConfig {
  PhysParams physics;
  int n = 32;
  double dealias_fraction = 2.0 / 3.0;

  DtPolicy dt_policy = DtPolicy::automatic;
  double dt = 1e-3;  ///< used by the fixed policy
  double T = 0.25;
  double cfl_safety = 0.25;
  double probe_interval = 0.025;

  InitialSpec initial;

  std::string output_directory = "out";
  int snapshot_every = 0;
  std::vector<std::string> formats{"csv", "json"};

  std::optional<std::vector<double>> gamma_list;
  int workers = 1;

  int eigen_samples = 10000;
  std::uint64_t verify_seed = 12345;
  int bound_points = 200;

  bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError naming `source` and the offending line.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& c);

/// First 16 hex digits of SHA-256 over the canonical form with the output
/// directory and worker count left out.
std::string config_hash(const RunConfig& c);

}  // namespace hallmhd

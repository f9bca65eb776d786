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

#include "hallmhd/run.hpp"

#include <algorithm>
#include <cmath>

#include "hallmhd/errors.hpp"

namespace hallmhd {

double energy_residual(const std::vector<EnergySample>& trace) {
  if (trace.size() < 2) return 0;
  std::vector<double> r(trace.size() - 1);
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    const auto& a = trace[i];
    const auto& b = trace[i + 1];
    r[i] = std::abs((b.energy - a.energy) / (b.t - a.t) + 0.5 * (a.dissipation + b.dissipation));
  }
  double s = 0;
  for (double x : r) s += x;
  return s / static_cast<double>(r.size());
}

double DivergenceMax::max() const { return std::max({u, B, E, j}); }

int substeps(double length, double dt) {
  if (!(dt > 0)) throw ParamError("substeps: dt must be positive");
  if (length <= 0) return 0;
  return std::max(1, static_cast<int>(std::ceil(length / dt * (1 - 1e-12))));
}

}  // namespace hallmhd

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

#include "hallmhd/params.hpp"

#include <cmath>
#include <string>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParamError(msg);
}

}  // namespace

void PhysParams::validate() const {
  require(std::isfinite(beta) && beta > 0, "beta must be positive, got " + std::to_string(beta));
  require(std::isfinite(eta) && eta > 0, "eta must be positive, got " + std::to_string(eta));
  require(std::isfinite(gamma) && gamma > 0 && gamma <= 1,
          "gamma must lie in (0, 1], got " + std::to_string(gamma));
  require(sobolev_s > 0.5 && sobolev_s < 1.0,
          "s must lie in (1/2, 1), got " + std::to_string(sobolev_s));
  require(band_K > 1.0 && band_K < std::sqrt(5.0) / 2.0,
          "K must lie in (1, sqrt(5)/2), got " + std::to_string(band_K));
  require(std::isfinite(band_R) && band_R > 0, "R must be positive, got " + std::to_string(band_R));
  require(std::isfinite(band_delta) && band_delta > 0,
          "delta must be positive, got " + std::to_string(band_delta));
}

double phi_cutoff(double x, double sobolev_s) {
  return std::pow(x, 2.0 / (2.0 * sobolev_s - 3.0));
}

}  // namespace hallmhd

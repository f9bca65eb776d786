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

#include "hallmhd/bands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hallmhd/errors.hpp"

namespace hallmhd {

std::string_view to_string(Band b) {
  switch (b) {
    case Band::ll: return "ll";
    case Band::lt: return "lt";
    case Band::mid: return "mid";
    case Band::gt: return "gt";
    case Band::gg: return "gg";
  }
  return "?";
}

BandSpec BandSpec::from_params(const PhysParams& p) {
  p.validate();
  BandSpec s;
  s.radius_low = p.band_R;
  s.radius_lt = 1.0 / (2.0 * p.band_K * p.resistivity() * p.gamma);
  s.radius_mid = p.band_K / (2.0 * p.resistivity() * p.gamma);
  s.radius_phi = phi_cutoff(p.gamma / p.band_delta, p.sobolev_s);
  return s;
}

bool BandSpec::ordered() const {
  return radius_low <= radius_lt && radius_lt <= radius_mid && radius_mid <= radius_phi;
}

void BandSpec::validate() const {
  if (ordered()) return;
  std::ostringstream os;
  os << "band thresholds not ordered: R=" << radius_low << " lt=" << radius_lt
     << " mid=" << radius_mid << " phi=" << radius_phi;
  throw BandOrderError(os.str());
}

BandSpec BandSpec::clamped() const {
  BandSpec s = *this;
  s.radius_lt = std::max(s.radius_lt, s.radius_low);
  s.radius_mid = std::max(s.radius_mid, s.radius_lt);
  s.radius_phi = std::max(s.radius_phi, s.radius_mid);
  return s;
}

Band BandSpec::classify(double xi2) const {
  if (xi2 <= radius_low * radius_low) return Band::ll;
  if (xi2 <= radius_lt * radius_lt) return Band::lt;
  if (xi2 <= radius_mid * radius_mid) return Band::mid;
  if (xi2 <= radius_phi * radius_phi) return Band::gt;
  return Band::gg;
}

SpectralField band_filter(const SpectralField& f, Band b, const BandSpec& spec) {
  spec.validate();
  const Grid& g = f.grid();
  SpectralField out = f;
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    if (spec.classify(g.xi2(m)) == b) continue;
    for (int c = 0; c < 3; ++c) out.component(c)[m] = 0;
  }
  return out;
}

std::array<SpectralField, 5> band_split(const SpectralField& f, const BandSpec& spec) {
  spec.validate();
  const Grid& g = f.grid();
  std::array<SpectralField, 5> out{SpectralField(f.grid_ptr()), SpectralField(f.grid_ptr()),
                                   SpectralField(f.grid_ptr()), SpectralField(f.grid_ptr()),
                                   SpectralField(f.grid_ptr())};
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    auto& dst = out[static_cast<std::size_t>(spec.classify(g.xi2(m)))];
    for (int c = 0; c < 3; ++c) dst.component(c)[m] = f.component(c)[m];
  }
  for (auto& o : out) o.set_div_free(f.div_free());
  return out;
}

std::array<double, 5> band_norms(const SpectralField& f, const BandSpec& spec) {
  const Grid& g = f.grid();
  std::array<std::vector<double>, 5> terms;
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    double s = 0;
    for (int c = 0; c < 3; ++c) s += std::norm(f.component(c)[m]);
    terms[static_cast<std::size_t>(spec.classify(g.xi2(m)))].push_back(g.weight(m) * s);
  }
  std::array<double, 5> out{};
  for (int b = 0; b < 5; ++b) out[b] = std::sqrt(g.parseval_factor() * pairwise_sum(terms[b]));
  return out;
}

}  // namespace hallmhd

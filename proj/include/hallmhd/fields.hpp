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

// Spectral field algebra on the periodic box. Fields are held as complex
// Fourier coefficients (see grid.hpp for the layout and conventions); every
// operation takes its inputs by const reference and returns a fresh field.

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "hallmhd/grid.hpp"

namespace hallmhd {

using cd = std::complex<double>;

/// Scalar field in Fourier space.
class ScalarSpectralField {
 public:
  explicit ScalarSpectralField(GridPtr grid);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::vector<cd>& coeffs() { return c_; }
  const std::vector<cd>& coeffs() const { return c_; }

 private:
  GridPtr grid_;
  std::vector<cd> c_;
};

/// Three-component vector field in Fourier space. `div_free` is a tag set by
/// operations whose output is solenoidal by construction.
class SpectralField {
 public:
  explicit SpectralField(GridPtr grid);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::vector<cd>& component(int c) { return c_[static_cast<std::size_t>(c)]; }
  const std::vector<cd>& component(int c) const { return c_[static_cast<std::size_t>(c)]; }
  bool div_free() const { return div_free_; }
  void set_div_free(bool v) { div_free_ = v; }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);
  /// this += s * o
  SpectralField& axpy(double s, const SpectralField& o);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  GridPtr grid_;
  std::array<std::vector<cd>, 3> c_;
  bool div_free_ = false;
};

using PhysicalScalar = std::vector<double>;
using PhysicalVector = std::array<std::vector<double>, 3>;

// ---------------------------------------------------------------------------
// Transforms

PhysicalVector to_physical(const SpectralField& f);
PhysicalScalar to_physical(const ScalarSpectralField& f);
SpectralField from_physical(const GridPtr& grid, const PhysicalVector& v);
ScalarSpectralField from_physical(const GridPtr& grid, const PhysicalScalar& v);

/// Physical coordinate x_i = 2 pi i / n along one axis.
double grid_coordinate(const Grid& g, int i);

// ---------------------------------------------------------------------------
// Linear operators

/// u -> u - xi (xi.u) / |xi|^2 per mode; the xi = 0 mode is left unchanged.
SpectralField leray_project(const SpectralField& f);
SpectralField curl(const SpectralField& f);
ScalarSpectralField divergence(const SpectralField& f);
SpectralField gradient(const ScalarSpectralField& f);
/// Zeroes the modes outside the dealias band.
SpectralField dealias(const SpectralField& f);
/// Zeroes the xi = 0 mode.
SpectralField remove_mean(const SpectralField& f);
/// Copies the modes representable on both grids; the rest are zero.
SpectralField resample(const SpectralField& f, const GridPtr& target);

// ---------------------------------------------------------------------------
// Dealiased products

/// a x b: transform, pointwise product, transform back, 2/3 mask.
SpectralField dealiased_cross(const SpectralField& a, const SpectralField& b);
/// Same with operands already in physical space.
SpectralField dealiased_cross(const GridPtr& grid, const PhysicalVector& a, const PhysicalVector& b);

/// Six independent components (xx, yy, zz, xy, xz, yz) of the dealiased a (x) a.
std::array<ScalarSpectralField, 6> dealiased_outer(const SpectralField& a);
/// div(a (x) a)_i = d_j (a_i a_j), dealiased.
SpectralField divergence_of_outer(const SpectralField& a);

// ---------------------------------------------------------------------------
// Reductions. All sums use a fixed pairwise order.

double pairwise_sum(std::span<const double> v);

/// Real L2 pairing <f, g> over the box.
double inner_product(const SpectralField& f, const SpectralField& g);
double l2_norm_squared(const SpectralField& f);
double l2_norm(const SpectralField& f);
double l2_norm(const ScalarSpectralField& f);
/// Homogeneous Sobolev seminorm squared: sum |xi|^{2 sigma} |f|^2 (xi = 0 excluded).
double hdot_norm_squared(const SpectralField& f, double sigma);
/// max over grid points of |f(x)|.
double linf_norm(const SpectralField& f);
/// max over grid points of |div f(x)|.
double max_divergence(const SpectralField& f);
/// max over modes of |xi . f| / (|xi| |f| + eps).
double max_relative_divergence(const SpectralField& f);
bool all_finite(const SpectralField& f);

struct FieldNorms {
  double l2 = 0;
  double h1 = 0;     ///< homogeneous H^1
  double h1s = 0;    ///< homogeneous H^{1+s}
  double linf = 0;
};

FieldNorms norms(const SpectralField& f, double sobolev_s);

/// 1/2 (||u||^2 + ||B||^2 + gamma^2 ||E||^2).
double energy(const SpectralField& u, const SpectralField& B, const SpectralField& E, double gamma);

}  // namespace hallmhd

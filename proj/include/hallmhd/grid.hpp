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

// Periodic lattice on [0, 2pi)^3 with n points per axis. Spectral storage is
// the real-to-complex half spectrum: n x n x (n/2 + 1) modes, mode index
// m = (ix * n + iy) * (n/2 + 1) + iz.
//
// Conventions:
//   * forward transform is unnormalized, inverse carries the 1/n^3 factor;
//   * lattice wavenumbers per axis lie in [-n/2 + 1, n/2];
//   * the Nyquist index n/2 has symbol wavenumber 0 in every operator
//     (derivatives, projection, propagators), so real fields stay real;
//   * dealias mask keeps modes with all |k_i| <= dealias_fraction * n / 2.

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace hallmhd {

class Grid {
 public:
  static std::shared_ptr<const Grid> create(int n, double dealias_fraction = 2.0 / 3.0);

  Grid(int n, double dealias_fraction);
  ~Grid();
  Grid(const Grid&) = delete;
  Grid& operator=(const Grid&) = delete;

  int n() const { return n_; }
  double dealias_fraction() const { return dealias_fraction_; }
  int nz_modes() const { return n_ / 2 + 1; }
  std::size_t real_size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
  std::size_t mode_count() const { return static_cast<std::size_t>(n_) * n_ * nz_modes(); }
  double spacing() const;

  /// Symbol wavevector of mode m (Nyquist components are zero).
  const std::array<double, 3>& xi(std::size_t m) const { return xi_[m]; }
  double xi2(std::size_t m) const { return xi2_[m]; }
  /// Signed integer lattice wavenumbers of mode m (Nyquist reported as +n/2).
  std::array<int, 3> lattice(std::size_t m) const;
  /// 1 on the kz = 0 and kz = n/2 planes, 2 elsewhere: multiplicity of the
  /// mode in the full (Hermitian) spectrum.
  double weight(std::size_t m) const { return weight_[m]; }
  bool keep(std::size_t m) const { return keep_[m] != 0; }

  /// Index of the stored mode for lattice (kx, ky, kz), kz >= 0.
  std::size_t mode_index(int kx, int ky, int kz) const;

  /// Largest |xi| that any lattice mode can carry: sqrt(3) n / 2.
  double max_lattice_radius() const;

  /// Coefficient-space factor of the L2 norm: ||f||^2 = factor * sum w |F|^2.
  double parseval_factor() const;

  void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
  void inverse(std::span<const std::complex<double>> in, std::span<double> out) const;

 private:
  struct Plans;
  int n_;
  double dealias_fraction_;
  std::vector<std::array<double, 3>> xi_;
  std::vector<double> xi2_;
  std::vector<double> weight_;
  std::vector<unsigned char> keep_;
  std::unique_ptr<Plans> plans_;
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace hallmhd

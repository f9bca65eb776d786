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

#include "hallmhd/grid.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

int signed_index(int i, int n) { return i <= n / 2 ? i : i - n; }

}  // namespace

struct Grid::Plans {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

std::shared_ptr<const Grid> Grid::create(int n, double dealias_fraction) {
  return std::make_shared<const Grid>(n, dealias_fraction);
}

Grid::Grid(int n, double dealias_fraction)
    : n_(n), dealias_fraction_(dealias_fraction), plans_(std::make_unique<Plans>()) {
  if (n < 8 || n % 2 != 0) throw ParamError("grid: n must be even and >= 8, got " + std::to_string(n));
  if (!(dealias_fraction > 0 && dealias_fraction <= 1))
    throw ParamError("grid: dealias_fraction must lie in (0, 1]");

  const int nz = nz_modes();
  const std::size_t m = mode_count();
  xi_.resize(m);
  xi2_.resize(m);
  weight_.resize(m);
  keep_.resize(m);
  const double cutoff = dealias_fraction * n / 2.0;
  std::size_t idx = 0;
  for (int ix = 0; ix < n; ++ix) {
    for (int iy = 0; iy < n; ++iy) {
      for (int iz = 0; iz < nz; ++iz, ++idx) {
        const int kx = signed_index(ix, n), ky = signed_index(iy, n), kz = iz;
        const double sx = ix == n / 2 ? 0.0 : kx;
        const double sy = iy == n / 2 ? 0.0 : ky;
        const double sz = iz == n / 2 ? 0.0 : kz;
        xi_[idx] = {sx, sy, sz};
        xi2_[idx] = sx * sx + sy * sy + sz * sz;
        weight_[idx] = (iz == 0 || iz == n / 2) ? 1.0 : 2.0;
        keep_[idx] = (std::abs(kx) <= cutoff && std::abs(ky) <= cutoff && std::abs(kz) <= cutoff);
      }
    }
  }

  std::vector<double> rbuf(real_size());
  std::vector<std::complex<double>> cbuf(m);
  std::lock_guard<std::mutex> lock(planner_mutex());
  plans_->forward = fftw_plan_dft_r2c_3d(n, n, n, rbuf.data(),
                                         reinterpret_cast<fftw_complex*>(cbuf.data()),
                                         FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans_->inverse = fftw_plan_dft_c2r_3d(n, n, n, reinterpret_cast<fftw_complex*>(cbuf.data()),
                                         rbuf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plans_->forward || !plans_->inverse) throw Error("grid: FFTW planning failed");
}

Grid::~Grid() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plans_->forward) fftw_destroy_plan(plans_->forward);
  if (plans_->inverse) fftw_destroy_plan(plans_->inverse);
}

double Grid::spacing() const { return 2.0 * std::numbers::pi / n_; }

std::array<int, 3> Grid::lattice(std::size_t m) const {
  const int nz = nz_modes();
  const int iz = static_cast<int>(m % nz);
  const int iy = static_cast<int>((m / nz) % n_);
  const int ix = static_cast<int>(m / (static_cast<std::size_t>(nz) * n_));
  return {signed_index(ix, n_), signed_index(iy, n_), iz};
}

std::size_t Grid::mode_index(int kx, int ky, int kz) const {
  if (kz < 0 || kz > n_ / 2) throw ParamError("grid: kz out of stored half spectrum");
  const int ix = (kx % n_ + n_) % n_;
  const int iy = (ky % n_ + n_) % n_;
  return (static_cast<std::size_t>(ix) * n_ + iy) * nz_modes() + kz;
}

double Grid::max_lattice_radius() const { return std::sqrt(3.0) * n_ / 2.0; }

double Grid::parseval_factor() const {
  const double vol = std::pow(2.0 * std::numbers::pi, 3);
  const double n3 = static_cast<double>(real_size());
  return vol / (n3 * n3);
}

void Grid::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
  // r2c preserves its input.
  fftw_execute_dft_r2c(plans_->forward, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void Grid::inverse(std::span<const std::complex<double>> in, std::span<double> out) const {
  // c2r destroys its input; work on a copy.
  std::vector<std::complex<double>> tmp(in.begin(), in.end());
  fftw_execute_dft_c2r(plans_->inverse, reinterpret_cast<fftw_complex*>(tmp.data()), out.data());
  const double scale = 1.0 / static_cast<double>(real_size());
  for (double& v : out) v *= scale;
}

}  // namespace hallmhd

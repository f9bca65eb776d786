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

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the closed-form spectral code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hallmhd/fields.hpp"
#include "hallmhd/params.hpp"
#include "hallmhd/spectral_maxwell.hpp"

namespace oracle {

using hallmhd::cd;
using Vec6 = Eigen::Matrix<cd, 6, 1>;
using Mat6 = Eigen::Matrix<cd, 6, 6>;

/// The 6x6 symbol assembled entry by entry.
inline Mat6 symbol(const Eigen::Vector3d& xi, const hallmhd::PhysParams& p) {
  Mat6 a = Mat6::Zero();
  const double damp = 1.0 / (p.beta * p.eta * p.eta * p.gamma * p.gamma);
  const cd ig(0, 1.0 / p.gamma);
  Eigen::Matrix3cd cx;
  cx << 0, -xi.z(), xi.y(), xi.z(), 0, -xi.x(), -xi.y(), xi.x(), 0;
  a.topLeftCorner<3, 3>() = -damp * Eigen::Matrix3cd::Identity();
  a.topRightCorner<3, 3>() = ig * cx;
  a.bottomLeftCorner<3, 3>() = -ig * cx;
  return a;
}

/// Classical RK4 for v' = A v with fixed step h (last step shortened).
inline Vec6 rk4(const Mat6& a, Vec6 v, double t, double h) {
  const int n = static_cast<int>(std::ceil(t / h - 1e-12));
  for (int i = 0; i < n; ++i) {
    const double s = std::min(h, t - i * h);
    const Vec6 k1 = a * v;
    const Vec6 k2 = a * (v + 0.5 * s * k1);
    const Vec6 k3 = a * (v + 0.5 * s * k2);
    const Vec6 k4 = a * (v + s * k3);
    v += s / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return v;
}

inline Vec6 pack(const hallmhd::ModePair& m) {
  Vec6 v;
  v << m.e_hat, m.b_hat;
  return v;
}

inline hallmhd::ModePair unpack(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }

inline Eigen::Vector3cd random_cvec(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector3cd v;
  for (int i = 0; i < 3; ++i) v[i] = cd(n(rng), n(rng));
  return v;
}

inline Eigen::Vector3d random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector3d v(n(rng), n(rng), n(rng));
  return v.normalized();
}

/// Random (e, b) with b transverse to xi.
inline hallmhd::ModePair random_mode(std::mt19937_64& rng, const Eigen::Vector3d& xi) {
  hallmhd::ModePair m{random_cvec(rng), random_cvec(rng)};
  const Eigen::Vector3cd k = xi.cast<cd>();
  m.b_hat -= k * (k.dot(m.b_hat) / xi.squaredNorm());
  return m;
}

inline double max_abs_diff(const hallmhd::SpectralField& a, const hallmhd::SpectralField& b) {
  double mx = 0;
  for (int c = 0; c < 3; ++c)
    for (std::size_t m = 0; m < a.component(c).size(); ++m)
      mx = std::max(mx, std::abs(a.component(c)[m] - b.component(c)[m]));
  return mx;
}

inline double max_abs(const hallmhd::SpectralField& a) {
  double mx = 0;
  for (int c = 0; c < 3; ++c)
    for (const auto& v : a.component(c)) mx = std::max(mx, std::abs(v));
  return mx;
}

/// Dense solve of beta eta j + P mask(j x B) = rhs on a small grid, in
/// physical space. The kernel of P mask is summed directly from its symbol,
/// the system is assembled as a real (3 n^3) x (3 n^3) matrix and factored
/// with partial-pivot LU. Fields are expected already dealiased.
class DenseOhm {
 public:
  explicit DenseOhm(const hallmhd::GridPtr& g) : g_(g), n_(g->n()) {
    const int n = n_;
    const int kmax = static_cast<int>(std::floor(g->dealias_fraction() * n / 2.0));
    kernel_.assign(static_cast<std::size_t>(n * n * n) * 9, 0.0);
    for (int kx = -kmax; kx <= kmax; ++kx)
      for (int ky = -kmax; ky <= kmax; ++ky)
        for (int kz = -kmax; kz <= kmax; ++kz) {
          const double k[3] = {double(kx), double(ky), double(kz)};
          const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
          double sym[9];
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) sym[c * 3 + d] = (c == d) - (k2 > 0 ? k[c] * k[d] / k2 : 0.0);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c) {
                const double ph = std::cos(2 * std::numbers::pi * (kx * a + ky * b + kz * c) / n);
                double* q = &kernel_[(static_cast<std::size_t>((a * n + b) * n + c)) * 9];
                for (int e = 0; e < 9; ++e) q[e] += sym[e] * ph;
              }
        }
    for (auto& v : kernel_) v /= double(n) * n * n;
  }

  /// (P mask f)(x_p), applied with the dense kernel.
  Eigen::VectorXd project(const Eigen::VectorXd& f) const {
    const int N = n_ * n_ * n_;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(3 * N);
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        const double* k = kern(p, q);
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) out[3 * p + c] += k[c * 3 + d] * f[3 * q + d];
      }
    return out;
  }

  /// j solving beta eta j + P mask(j x B) = (1/eta)(E + P mask(u x B)).
  Eigen::VectorXd solve(const hallmhd::SpectralField& u, const hallmhd::SpectralField& B,
                        const hallmhd::SpectralField& E, const hallmhd::PhysParams& p) const {
    const int N = n_ * n_ * n_;
    const auto up = hallmhd::to_physical(u);
    const auto bp = hallmhd::to_physical(B);
    const auto ep = hallmhd::to_physical(E);
    Eigen::VectorXd uxb(3 * N), e(3 * N);
    for (int i = 0; i < N; ++i) {
      const double a[3] = {up[0][i], up[1][i], up[2][i]};
      const double b[3] = {bp[0][i], bp[1][i], bp[2][i]};
      uxb[3 * i] = a[1] * b[2] - a[2] * b[1];
      uxb[3 * i + 1] = a[2] * b[0] - a[0] * b[2];
      uxb[3 * i + 2] = a[0] * b[1] - a[1] * b[0];
      for (int c = 0; c < 3; ++c) e[3 * i + c] = ep[c][i];
    }
    const Eigen::VectorXd rhs = (project(e) + project(uxb)) / p.eta;

    // (j x b)_e = C(b)_{ed} j_d
    Eigen::MatrixXd A = p.beta * p.eta * Eigen::MatrixXd::Identity(3 * N, 3 * N);
    for (int q = 0; q < N; ++q) {
      const double b[3] = {bp[0][q], bp[1][q], bp[2][q]};
      const double C[9] = {0, b[2], -b[1], -b[2], 0, b[0], b[1], -b[0], 0};
      for (int pp = 0; pp < N; ++pp) {
        const double* k = kern(pp, q);
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            double s = 0;
            for (int f = 0; f < 3; ++f) s += k[c * 3 + f] * C[f * 3 + d];
            A(3 * pp + c, 3 * q + d) += s;
          }
      }
    }
    return Eigen::PartialPivLU<Eigen::MatrixXd>(A).solve(rhs);
  }

  /// Physical values of f in the same ordering as solve().
  Eigen::VectorXd flatten(const hallmhd::SpectralField& f) const {
    const auto v = hallmhd::to_physical(f);
    Eigen::VectorXd out(3 * v[0].size());
    for (std::size_t i = 0; i < v[0].size(); ++i)
      for (int c = 0; c < 3; ++c) out[3 * i + c] = v[c][i];
    return out;
  }

 private:
  const double* kern(int p, int q) const {
    const int n = n_;
    const int pa = p / (n * n), pb = (p / n) % n, pc = p % n;
    const int qa = q / (n * n), qb = (q / n) % n, qc = q % n;
    const int a = (pa - qa + n) % n, b = (pb - qb + n) % n, c = (pc - qc + n) % n;
    return &kernel_[(static_cast<std::size_t>((a * n + b) * n + c)) * 9];
  }

  hallmhd::GridPtr g_;
  int n_;
  std::vector<double> kernel_;
};

}  // namespace oracle

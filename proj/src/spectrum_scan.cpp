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

#include "hallmhd/spectrum_scan.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "hallmhd/spectral_maxwell.hpp"

namespace hallmhd {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(n(rng), n(rng), n(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

// Decay bound ratio |(exp(t l+) - exp(t l-)) / (t (l+ - l-))| from the
// eigenvalues directly.
double resonant_quotient(double t, const EigenStructure& es) {
  if (es.regime == Regime::resonant_shell) return std::exp(t * es.lambda_plus.real());
  const cd num = std::exp(t * es.lambda_plus) - std::exp(t * es.lambda_minus);
  return std::abs(num / (t * (es.lambda_plus - es.lambda_minus)));
}

}  // namespace

double EigenScanReport::max_rel_error() const {
  return std::max({max_rel_error_lambda0, max_rel_error_plus, max_rel_error_minus});
}

EigenScanReport eigen_oracle_scan(int samples, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  EigenScanReport rep;
  Eigen::ComplexEigenSolver<SymbolMatrix> solver;
  std::array<int, 6> perm;

  while (rep.samples < samples) {
    PhysParams p;
    p.beta = log_uniform(rng, 0.5, 2.0);
    p.eta = log_uniform(rng, 0.5, 2.0);
    p.gamma = log_uniform(rng, 0.05, 1.0);
    const double k = log_uniform(rng, 0.05, 20.0) * p.resonance_radius();
    if (std::abs(discriminant(k, p)) <= 1e-6) {
      ++rep.rejected_near_shell;
      continue;
    }
    const Vec3 xi = k * random_direction(rng);
    const SymbolMatrix a = maxwell_symbol(xi, p);
    solver.compute(a, false);
    const auto& ev = solver.eigenvalues();
    const auto es = eigen_structure(xi, p);
    const std::array<cd, 6> target = {cd(0), cd(es.lambda0), es.lambda_plus, es.lambda_plus,
                                      es.lambda_minus, es.lambda_minus};
    const double scale = a.norm();
    auto rel = [&](int ti, cd val) {
      const double denom = ti == 0 ? scale : std::abs(target[ti]);
      return std::abs(val - target[ti]) / denom;
    };

    std::iota(perm.begin(), perm.end(), 0);
    std::array<int, 6> best = perm;
    double best_err = 1e300;
    do {
      double err = 0;
      for (int i = 0; i < 6 && err < best_err; ++i) err = std::max(err, rel(i, ev(perm[i])));
      if (err < best_err) {
        best_err = err;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    rep.max_spurious_zero = std::max(rep.max_spurious_zero, rel(0, ev(best[0])));
    rep.max_rel_error_lambda0 = std::max(rep.max_rel_error_lambda0, rel(1, ev(best[1])));
    rep.max_rel_error_plus =
        std::max({rep.max_rel_error_plus, rel(2, ev(best[2])), rel(3, ev(best[3]))});
    rep.max_rel_error_minus =
        std::max({rep.max_rel_error_minus, rel(4, ev(best[4])), rel(5, ev(best[5]))});

    const double damping = p.damping_rate();
    rep.max_vieta_sum_error = std::max(
        rep.max_vieta_sum_error, std::abs(es.lambda_plus + es.lambda_minus + damping) / damping);
    const double prod = k * k / (p.gamma * p.gamma);
    rep.max_vieta_product_error = std::max(
        rep.max_vieta_product_error, std::abs(es.lambda_plus * es.lambda_minus - prod) / prod);
    ++rep.samples;
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

void MarginHistogram::add(double relative_margin, bool pass) {
  int bin;
  if (!pass) {
    bin = 0;
  } else if (relative_margin < 1e-14) {
    bin = 1;
  } else if (relative_margin < 1e-10) {
    bin = 2;
  } else if (relative_margin < 1e-6) {
    bin = 3;
  } else if (relative_margin < 1e-3) {
    bin = 4;
  } else if (relative_margin < 1e-1) {
    bin = 5;
  } else {
    bin = 6;
  }
  ++counts[static_cast<std::size_t>(bin)];
}

BoundScanReport eigen_bound_scan(int per_regime, const BoundScanGrid& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  BoundScanReport rep;
  std::mt19937_64 rng(20260417);

  auto record = [&](const Vec3& xi, const PhysParams& p) {
    const auto r = eigen_bound_check(xi, p);
    ++rep.wavevectors;
    for (const auto& c : r.checks) {
      auto& st = rep.per_check[c.name];
      if (!c.applicable) {
        ++st.not_applicable;
        continue;
      }
      ++st.evaluated;
      ++rep.evaluations;
      const double scale = std::max(std::abs(c.value), std::abs(c.bound));
      const double relm = scale > 0 ? c.margin / scale : c.margin;
      st.min_relative_margin = std::min(st.min_relative_margin, relm);
      st.histogram.add(relm, c.pass);
      if (!c.pass) {
        ++st.violations;
        ++rep.violations;
      }
    }
  };

  for (double beta : grid.betas)
    for (double eta : grid.etas)
      for (double gamma : grid.gammas)
        for (double K : grid.ks) {
          PhysParams p;
          p.beta = beta;
          p.eta = eta;
          p.gamma = gamma;
          p.band_K = K;
          const double rr = p.resonance_radius();
          const Vec3 dir = random_direction(rng);
          const int n = std::max(per_regime, 2);
          for (int i = 0; i < n; ++i) {
            // (0, rr]: last point sits on the shell.
            const double ks = rr * std::pow(10.0, -4.0 + 4.0 * i / (n - 1));
            record(ks * dir, p);
            // (rr, 1e4 rr]
            const double kb = rr * std::pow(10.0, 4.0 * (i + 1) / n);
            record(kb * dir, p);
          }
          const double bh = p.resistivity();
          record(dir / (2.0 * K * bh * gamma), p);
          record(dir * (K / (2.0 * bh * gamma)), p);

          // Decay rate on the middle band.
          const double lo = 1.0 / (2.0 * K * bh * gamma);
          const double hi = K / (2.0 * bh * gamma);
          for (int i = 1; i <= 64; ++i) {
            const double k = lo + (hi - lo) * i / 64.0;
            const auto es = eigen_structure(Vec3(k, 0, 0), p);
            for (int j = 0; j < 48; ++j) {
              const double t = gamma * gamma * std::pow(10.0, -3.0 + 6.0 * j / 47.0);
              const double q = resonant_quotient(t, es);
              if (q <= 0) continue;
              rep.empirical_omega = std::min(rep.empirical_omega, -gamma * gamma * std::log(q) / t);
            }
          }
          rep.reference_omega =
              std::min(rep.reference_omega, (1.0 - std::sqrt(1.0 - 1.0 / (K * K))) / (2.0 * bh));
        }
  rep.seconds = seconds_since(t0);
  return rep;
}

}  // namespace hallmhd

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

#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "hallmhd/errors.hpp"
#include "hallmhd/spectral_maxwell.hpp"
#include "oracles.hpp"

using namespace hallmhd;

namespace {

PhysParams unit_params() { return PhysParams{.beta = 1, .eta = 1, .gamma = 1}; }

std::vector<cd> sorted_eigenvalues(const SymbolMatrix& a) {
  Eigen::ComplexEigenSolver<SymbolMatrix> es(a, false);
  std::vector<cd> v(es.eigenvalues().begin(), es.eigenvalues().end());
  std::sort(v.begin(), v.end(), [](cd x, cd y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
  return v;
}

}  // namespace

TEST(MaxwellSymbol, ZeroWavevectorIsBlockDiagonalDamping) {
  PhysParams p{.beta = 2, .eta = 0.5, .gamma = 0.3};
  const auto a = maxwell_symbol(Vec3::Zero(), p);
  SymbolMatrix expect = SymbolMatrix::Zero();
  expect.topLeftCorner<3, 3>().diagonal().setConstant(-p.damping_rate());
  EXPECT_LT((a - expect).norm(), 1e-15);
}

TEST(MaxwellSymbol, OffDiagonalBlocksAreCrossProduct) {
  const auto a = maxwell_symbol(Vec3(1, 0, 0), unit_params());
  Eigen::Matrix3cd cx;
  cx << 0, 0, 0, 0, 0, -1, 0, 1, 0;
  EXPECT_LT((a.topRightCorner<3, 3>() - cd(0, 1) * cx).norm(), 1e-15);
  EXPECT_LT((a.bottomLeftCorner<3, 3>() + cd(0, 1) * cx).norm(), 1e-15);
  EXPECT_LT((a - oracle::symbol(Vec3(1, 0, 0), unit_params())).norm(), 1e-15);
}

TEST(MaxwellSymbol, SpectrumAtPointThree) {
  const auto ev = sorted_eigenvalues(maxwell_symbol(Vec3(0.3, 0, 0), unit_params()));
  const double expect[6] = {-1, -0.9, -0.9, -0.1, -0.1, 0};
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(ev[i].real(), expect[i], 1e-12);
    EXPECT_NEAR(ev[i].imag(), 0, 1e-12);
  }
}

TEST(EigenStructure, SubResonantValues) {
  const auto es = eigen_structure(Vec3(0.3, 0, 0), unit_params());
  EXPECT_EQ(es.regime, Regime::sub_resonant);
  EXPECT_NEAR(es.lambda_plus.real(), -0.1, 1e-15);
  EXPECT_NEAR(es.lambda_minus.real(), -0.9, 1e-15);
  EXPECT_DOUBLE_EQ(es.lambda0, -1.0);
  ASSERT_TRUE(es.mixing_s.has_value());
  EXPECT_NEAR(std::abs(*es.mixing_s - cd(0.8 / 0.9)), 0, 1e-15);
}

TEST(EigenStructure, ResonantShell) {
  const auto es = eigen_structure(Vec3(0, 0.5, 0), unit_params());
  EXPECT_EQ(es.regime, Regime::resonant_shell);
  EXPECT_NEAR(std::abs(es.lambda_plus - cd(-0.5)), 0, 1e-15);
  EXPECT_NEAR(std::abs(es.lambda_minus - cd(-0.5)), 0, 1e-15);
  EXPECT_FALSE(es.mixing_s.has_value());
}

TEST(EigenStructure, SuperResonantModulus) {
  const auto es = eigen_structure(Vec3(0, 0, 1), unit_params());
  EXPECT_EQ(es.regime, Regime::super_resonant);
  EXPECT_NEAR(std::abs(es.lambda_plus), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(es.lambda_minus), 1.0, 1e-14);
  EXPECT_NEAR(es.lambda_plus.real(), -0.5, 1e-15);
  EXPECT_NEAR(es.lambda_minus.real(), -0.5, 1e-15);
}

TEST(EigenStructure, ZeroWavevectorThrows) {
  EXPECT_THROW(eigen_structure(Vec3::Zero(), unit_params()), ZeroWavevectorError);
}

TEST(EigenStructure, VietaIdentitiesAcrossRegimes) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lu(std::log(0.5), std::log(2.0)), lr(std::log(1e-3), std::log(1e3));
  for (int i = 0; i < 2000; ++i) {
    PhysParams p{.beta = std::exp(lu(rng)), .eta = std::exp(lu(rng)), .gamma = 0.05 + 0.95 * (i % 97) / 96.0};
    const Vec3 xi = oracle::random_direction(rng) * p.resonance_radius() * std::exp(lr(rng));
    const auto es = eigen_structure(xi, p);
    const double a = p.damping_rate();
    const double prod = xi.squaredNorm() / (p.gamma * p.gamma);
    EXPECT_LT(std::abs(es.lambda_plus + es.lambda_minus + a) / a, 1e-12);
    EXPECT_LT(std::abs(es.lambda_plus * es.lambda_minus - prod) / prod, 1e-12);
  }
}

TEST(EigenStructure, EigenvectorFamiliesAreEigenvectors) {
  std::mt19937_64 rng(11);
  for (double k : {0.1, 0.3, 0.7, 2.0}) {
    const Vec3 xi = oracle::random_direction(rng) * k;
    const auto es = eigen_structure(xi, unit_params());
    const auto a = oracle::symbol(xi, unit_params());
    const auto m = oracle::random_mode(rng, xi);
    CVec3 e = m.e_hat - xi.cast<cd>() * (xi.cast<cd>().dot(m.e_hat) / xi.squaredNorm());
    for (const auto& [v, lam] : {std::pair{es.plus_from_e(e), es.lambda_plus}, std::pair{es.plus_from_b(m.b_hat), es.lambda_plus},
                                 std::pair{es.minus_from_e(e), es.lambda_minus}, std::pair{es.minus_from_b(m.b_hat), es.lambda_minus}}) {
      const auto x = oracle::pack(v);
      EXPECT_LT((a * x - lam * x).norm(), 1e-12 * (1 + std::abs(lam)) * x.norm());
    }
  }
}

TEST(EigenBounds, LambdaPlusInterval) {
  PhysParams p = unit_params();
  p.band_K = 1.2;
  const auto rep = eigen_bound_check(Vec3(0.25, 0, 0), p);
  const auto es = eigen_structure(Vec3(0.25, 0, 0), p);
  EXPECT_NEAR(es.lambda_plus.real(), -0.0669872981077807, 1e-12);
  EXPECT_TRUE(rep.all_pass());
}

TEST(EigenBounds, RatioMinusAtInnerEdge) {
  PhysParams p = unit_params();
  p.band_K = 1.2;
  const double k = 1.0 / (2 * 1.2);
  const auto rep = eigen_bound_check(Vec3(0, k, 0), p);
  bool found = false;
  for (const auto& c : rep.checks)
    if (std::string(c.name) == "ratio_minus") {
      found = true;
      EXPECT_TRUE(c.applicable);
      EXPECT_NEAR(c.value, 1.405, 5e-4);
      EXPECT_NEAR(c.bound, 1.2 / std::sqrt(1.44 - 1), 1e-12);
      EXPECT_TRUE(c.pass);
    }
  EXPECT_TRUE(found);
}

TEST(EigenBounds, OuterEdgeAttainsBound) {
  PhysParams p = unit_params();
  p.band_K = 1.2;
  const auto rep = eigen_bound_check(Vec3(0, 0, 0.6), p);
  EXPECT_TRUE(rep.all_pass());
  for (const auto& c : rep.checks)
    if (std::string(c.name) == "ratio_plus_minus") {
      EXPECT_NEAR(c.margin, 0, 1e-12);
    }
}

TEST(EigenBounds, GapIsNotApplicable) {
  PhysParams p = unit_params();
  p.band_K = 1.1;
  const auto rep = eigen_bound_check(Vec3(0.5 * 1.02, 0, 0), p);
  for (const auto& c : rep.checks) {
    const std::string n = c.name;
    if (n.rfind("ratio", 0) == 0 || n == "inverse_gap") {
      EXPECT_FALSE(c.applicable) << n;
    }
  }
  EXPECT_TRUE(rep.all_pass());
}

TEST(Propagator, EigenvectorScales) {
  const Vec3 xi(0.3, 0, 0);
  const auto es = eigen_structure(xi, unit_params());
  const ModePair m = es.minus_from_e(CVec3(0, 1, 0));
  const auto out = propagate_mode(0.7, m, xi, unit_params());
  EXPECT_LT((out - std::exp(0.7 * es.lambda_minus) * m).norm(), 1e-14);
}

TEST(Propagator, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(3);
  const Vec3 xi(0.2, -1.1, 0.4);
  const auto m = oracle::random_mode(rng, xi);
  EXPECT_LT((propagate_mode(0.0, m, xi, unit_params()) - m).norm(), 1e-15);
}

TEST(Propagator, MatchesRungeKuttaAtPointThree) {
  const Vec3 xi(0.3, 0, 0);
  const ModePair m{CVec3(0, 1, 0), CVec3(0, 0, 1)};
  const auto ref = oracle::rk4(oracle::symbol(xi, unit_params()), oracle::pack(m), 1.0, 1e-5);
  EXPECT_LT((oracle::pack(propagate_mode(1.0, m, xi, unit_params())) - ref).norm(), 1e-10);
}

TEST(Propagator, ZeroWavevectorBranch) {
  PhysParams p{.beta = 1, .eta = 1, .gamma = 0.5};
  const ModePair m{CVec3(1, 2, 3), CVec3(0.5, 0, -1)};
  const auto out = propagate_mode(0.3, m, Vec3::Zero(), p);
  EXPECT_LT((out.e_hat - std::exp(-0.3 * 4.0) * m.e_hat).norm(), 1e-15);
  EXPECT_LT((out.b_hat - m.b_hat).norm(), 1e-15);
}

TEST(Propagator, NegativeTimeThrows) {
  EXPECT_THROW(propagate_mode(-1e-3, ModePair{}, Vec3(1, 0, 0), unit_params()), ParamError);
}

TEST(Propagator, SemigroupAndContraction) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u01(0, 1);
  for (int i = 0; i < 500; ++i) {
    PhysParams p{.beta = 0.5 + 1.5 * u01(rng), .eta = 0.5 + 1.5 * u01(rng), .gamma = 0.05 + 0.95 * u01(rng)};
    const Vec3 xi = oracle::random_direction(rng) * p.resonance_radius() * std::pow(10.0, 4 * u01(rng) - 2);
    const auto m = oracle::random_mode(rng, xi);
    const double t1 = u01(rng), t2 = u01(rng);
    const auto once = propagate_mode(t1 + t2, m, xi, p);
    const auto twice = propagate_mode(t1, propagate_mode(t2, m, xi, p), xi, p);
    EXPECT_LT((once - twice).norm(), 1e-10 * m.norm());
    EXPECT_LE(once.norm(), m.norm() * (1 + 1e-14));
  }
}

TEST(Propagator, ContinuousAcrossResonantShell) {
  for (double gamma : {0.1, 0.5, 1.0}) {
    PhysParams p{.beta = 1.3, .eta = 0.8, .gamma = gamma};
    const double r = p.resonance_radius();
    const Vec3 dir = Vec3(1, 2, -2).normalized();
    const ModePair m{CVec3(0.3, cd(0, 1), -0.2), CVec3(2, -1, 0).cast<cd>()};
    const double t = 2.0 / p.damping_rate();
    const auto shell = propagate_mode(t, m, dir * r, p);
    EXPECT_EQ(classify_regime(r, p), Regime::resonant_shell);
    for (double side : {-1.0, 1.0}) {
      double prev = 0;
      for (double rel : {1e-5, 1e-6, 1e-7, 1e-8}) {
        const Vec3 xi = dir * r * (1 + side * rel);
        EXPECT_NE(classify_regime(xi.norm(), p), Regime::resonant_shell);
        const double diff = (propagate_mode(t, m, xi, p) - shell).norm() / m.norm();
        if (prev > 0) { EXPECT_LT(diff, 0.2 * prev) << rel; }
        prev = diff;
      }
      EXPECT_LT(prev, 1e-6);
    }
  }
}

TEST(Decomposition, LongitudinalElectricField) {
  const Vec3 xi(0, 0.3, 0.2);
  const ModePair m{xi.cast<cd>() * cd(2, -1), CVec3::Zero()};
  const auto d = decompose_initial(m, xi, unit_params());
  EXPECT_LT((d.parallel - m).norm(), 1e-15);
  EXPECT_LT(d.b_part.norm(), 1e-15);
  EXPECT_LT(d.e_part.norm(), 1e-15);
}

TEST(Decomposition, PlusEigenspaceMember) {
  const Vec3 xi(0.3, 0, 0);
  const auto es = eigen_structure(xi, unit_params());
  const ModePair m = es.plus_from_b(CVec3(0, 1, cd(0, 2)));
  const auto d = decompose_initial(m, xi, unit_params());
  EXPECT_LT((d.b_part - m).norm(), 1e-14);
  EXPECT_LT(d.e_part.norm(), 1e-14);
  EXPECT_LT(d.parallel.norm(), 1e-15);
}

TEST(Decomposition, RecompositionAndEigenAction) {
  std::mt19937_64 rng(19);
  const Vec3 xi(0.3, 0, 0);
  const auto p = unit_params();
  const auto es = eigen_structure(xi, p);
  for (int i = 0; i < 50; ++i) {
    const auto m = oracle::random_mode(rng, xi);
    const auto d = decompose_initial(m, xi, p);
    EXPECT_LT((d.parallel + d.b_part + d.e_part - m).norm(), 1e-12 * m.norm());
    const double t = 0.9;
    EXPECT_LT((propagate_mode(t, d.parallel, xi, p) - std::exp(t * es.lambda0) * d.parallel).norm(), 1e-13);
    EXPECT_LT((propagate_mode(t, d.b_part, xi, p) - std::exp(t * es.lambda_plus) * d.b_part).norm(), 1e-13);
    EXPECT_LT((propagate_mode(t, d.e_part, xi, p) - std::exp(t * es.lambda_minus) * d.e_part).norm(), 1e-13);
    const double rhs = m.e_hat.norm() + m.b_hat.norm();
    EXPECT_LE(d.s_e.norm(), rhs);
    EXPECT_LE(d.s_b.norm(), rhs);
  }
}

TEST(Decomposition, Errors) {
  const auto p = unit_params();
  EXPECT_THROW(decompose_initial(ModePair{}, Vec3::Zero(), p), ZeroWavevectorError);
  EXPECT_THROW(decompose_initial(ModePair{CVec3(0, 1, 0), CVec3::Zero()}, Vec3(0.5, 0, 0), p), ResonantShellError);
  EXPECT_THROW(decompose_initial(ModePair{CVec3::Zero(), CVec3(1, 0, 0)}, Vec3(0.3, 0, 0), p), ParamError);
}

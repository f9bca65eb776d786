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

// Per-wavevector analysis of the damped Maxwell operator
//
//   A(xi) = [ -Id/(beta eta^2 gamma^2)    (i/gamma) xi x ]
//           [ -(i/gamma) xi x             0              ]
//
// acting on (e, b) in C^3 x C^3. Transverse modes have the eigenvalues
// lambda_+/- = (-1 +/- sqrt(1 - 4 beta^2 eta^4 gamma^2 |xi|^2)) / (2 beta eta^2 gamma^2),
// the longitudinal electric mode decays with lambda_0 = -1/(beta eta^2 gamma^2)
// and the longitudinal magnetic direction (excluded by div B = 0) carries 0.

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hallmhd/params.hpp"

namespace hallmhd {

using cd = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using SymbolMatrix = Eigen::Matrix<cd, 6, 6>;

/// |1 - 4 beta^2 eta^4 gamma^2 |xi|^2| below this selects the Jordan branch.
inline constexpr double kResonanceTolerance = 1e-8;

struct ModePair {
  CVec3 e_hat = CVec3::Zero();
  CVec3 b_hat = CVec3::Zero();

  double norm() const { return std::sqrt(e_hat.squaredNorm() + b_hat.squaredNorm()); }

  ModePair& operator+=(const ModePair& o) {
    e_hat += o.e_hat;
    b_hat += o.b_hat;
    return *this;
  }
  friend ModePair operator+(ModePair a, const ModePair& b) { return a += b; }
  friend ModePair operator-(const ModePair& a, const ModePair& b) {
    return {a.e_hat - b.e_hat, a.b_hat - b.b_hat};
  }
  friend ModePair operator*(cd s, const ModePair& a) { return {s * a.e_hat, s * a.b_hat}; }
};

enum class Regime { sub_resonant, resonant_shell, super_resonant };

std::string_view to_string(Regime r);

/// 1 - 4 beta^2 eta^4 gamma^2 |xi|^2, evaluated as (1 - q)(1 + q) so that it
/// stays accurate near the shell.
double discriminant(double xi_norm, const PhysParams& p);

Regime classify_regime(double xi_norm, const PhysParams& p);

/// The 6x6 Fourier symbol in (e, b) coordinates.
SymbolMatrix maxwell_symbol(const Vec3& xi, const PhysParams& p);

/// Closed-form spectral data at one nonzero wavevector.
struct EigenStructure {
  double lambda0 = 0;
  cd lambda_plus;
  cd lambda_minus;
  /// (lambda_- - lambda_+) / lambda_-; empty on the resonant shell.
  std::optional<cd> mixing_s;
  Regime regime = Regime::sub_resonant;
  Vec3 xi = Vec3::Zero();
  double gamma = 1;

  // Eigenvector families. E_+ = {(e, -(i/(gamma l+)) xi x e)} = {(-(i/(gamma l-)) xi x b, b)}
  // and symmetrically for E_-. Inputs are expected transverse to xi.
  ModePair plus_from_e(const CVec3& e) const;
  ModePair plus_from_b(const CVec3& b) const;
  ModePair minus_from_e(const CVec3& e) const;
  ModePair minus_from_b(const CVec3& b) const;
};

/// Throws ZeroWavevectorError at xi = 0.
EigenStructure eigen_structure(const Vec3& xi, const PhysParams& p);

// ---------------------------------------------------------------------------
// Semigroup

/// Scalars describing exp(t A(xi)) for one |xi|:
///   longitudinal e  -> parallel_decay * e
///   longitudinal b  -> b
///   transverse v    -> c0 v + c1 A(xi) v
/// c0 and c1 are real in every regime.
struct PropagatorCoefficients {
  double parallel_decay = 1;
  double c0 = 1;
  double c1 = 0;
};

PropagatorCoefficients propagator_coefficients(double t, double xi_norm, const PhysParams& p);

/// Applies exp(t A(xi)) in place. `xi2` is |xi|^2 and `damping` is
/// 1/(beta eta^2 gamma^2). Shared by propagate_mode and the field solvers.
inline void apply_maxwell_propagator(const PropagatorCoefficients& c, const double* xi, double xi2,
                                     double gamma, double damping, cd* e, cd* b) {
  if (xi2 == 0.0) {
    for (int k = 0; k < 3; ++k) e[k] *= c.parallel_decay;
    return;
  }
  const cd xe = xi[0] * e[0] + xi[1] * e[1] + xi[2] * e[2];
  const cd xb = xi[0] * b[0] + xi[1] * b[1] + xi[2] * b[2];
  cd ep[3], bp[3], epar[3], bpar[3];
  for (int k = 0; k < 3; ++k) {
    epar[k] = xi[k] * xe / xi2;
    bpar[k] = xi[k] * xb / xi2;
    ep[k] = e[k] - epar[k];
    bp[k] = b[k] - bpar[k];
  }
  const cd xcb[3] = {xi[1] * bp[2] - xi[2] * bp[1], xi[2] * bp[0] - xi[0] * bp[2],
                     xi[0] * bp[1] - xi[1] * bp[0]};
  const cd xce[3] = {xi[1] * ep[2] - xi[2] * ep[1], xi[2] * ep[0] - xi[0] * ep[2],
                     xi[0] * ep[1] - xi[1] * ep[0]};
  const cd ig(0.0, 1.0 / gamma);
  for (int k = 0; k < 3; ++k) {
    e[k] = c.parallel_decay * epar[k] + c.c0 * ep[k] + c.c1 * (-damping * ep[k] + ig * xcb[k]);
    b[k] = bpar[k] + c.c0 * bp[k] - c.c1 * ig * xce[k];
  }
}

/// exp(t A(xi)) (e, b). Throws ParamError for t < 0.
ModePair propagate_mode(double t, const ModePair& mode, const Vec3& xi, const PhysParams& p);

// ---------------------------------------------------------------------------
// Eigenbasis decomposition of a mode in E(xi)

struct ModeDecomposition {
  ModePair parallel;  ///< (xi (xi.e)/|xi|^2, 0), evolves with lambda_0
  ModePair b_part;    ///< in E_+, evolves with lambda_+
  ModePair e_part;    ///< in E_-, evolves with lambda_-
  CVec3 s_e;          ///< s * e = e_perp + (i/(gamma l-)) xi x b
  CVec3 s_b;          ///< s * b = b + (i/(gamma l-)) xi x e
  cd mixing_s;
};

/// Splits (e, b) with xi.b = 0 into its three eigen-components. Throws
/// ZeroWavevectorError at xi = 0, ResonantShellError on the shell and
/// ParamError when b has a component along xi.
ModeDecomposition decompose_initial(const ModePair& mode, const Vec3& xi, const PhysParams& p);

// ---------------------------------------------------------------------------
// Eigenvalue estimates

struct BoundCheck {
  const char* name = "";
  bool applicable = false;
  double value = 0;   ///< left-hand side
  double bound = 0;   ///< right-hand side
  double margin = 0;  ///< signed slack, >= 0 when the inequality holds
  bool pass = true;
};

struct BoundReport {
  double xi_norm = 0;
  Regime regime = Regime::sub_resonant;
  std::vector<BoundCheck> checks;

  bool all_pass() const;
};

/// Explicit constant C in |lambda_+ / (lambda_- - lambda_+)| <= C gamma^2 |xi|^2
/// on |xi| <= 1/(2 K beta eta^2 gamma).
double small_ratio_constant(const PhysParams& p);

/// Evaluates every eigenvalue estimate applicable at xi. The K-dependent
/// bounds are reported as not applicable in the gap
/// (1/(2 K beta eta^2 gamma), K/(2 beta eta^2 gamma)).
BoundReport eigen_bound_check(const Vec3& xi, const PhysParams& p);

}  // namespace hallmhd

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

#include "hallmhd/spectral_maxwell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

// Round-off allowance for the inequality checks, relative to the larger side.
constexpr double kBoundSlack = 1e-12;

CVec3 cross(const Vec3& xi, const CVec3& v) {
  return CVec3(xi(1) * v(2) - xi(2) * v(1), xi(2) * v(0) - xi(0) * v(2),
               xi(0) * v(1) - xi(1) * v(0));
}

BoundCheck check_le(const char* name, double value, double bound) {
  BoundCheck c;
  c.name = name;
  c.applicable = true;
  c.value = value;
  c.bound = bound;
  c.margin = bound - value;
  c.pass = c.margin >= -kBoundSlack * std::max(std::abs(value), std::abs(bound));
  return c;
}

BoundCheck check_eq(const char* name, double value, double target) {
  BoundCheck c;
  c.name = name;
  c.applicable = true;
  c.value = value;
  c.bound = target;
  const double tol = kBoundSlack * std::max(std::abs(value), std::abs(target));
  c.margin = tol - std::abs(value - target);
  c.pass = c.margin >= 0;
  return c;
}

BoundCheck not_applicable(const char* name) {
  BoundCheck c;
  c.name = name;
  c.applicable = false;
  return c;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::sub_resonant:
      return "sub_resonant";
    case Regime::resonant_shell:
      return "resonant_shell";
    case Regime::super_resonant:
      return "super_resonant";
  }
  return "unknown";
}

double discriminant(double xi_norm, const PhysParams& p) {
  const double q = 2.0 * p.resistivity() * p.gamma * xi_norm;
  return (1.0 - q) * (1.0 + q);
}

Regime classify_regime(double xi_norm, const PhysParams& p) {
  const double d = discriminant(xi_norm, p);
  if (std::abs(d) < kResonanceTolerance) return Regime::resonant_shell;
  return d > 0 ? Regime::sub_resonant : Regime::super_resonant;
}

SymbolMatrix maxwell_symbol(const Vec3& xi, const PhysParams& p) {
  SymbolMatrix m = SymbolMatrix::Zero();
  Eigen::Matrix3d cx;
  cx << 0, -xi(2), xi(1), xi(2), 0, -xi(0), -xi(1), xi(0), 0;
  const cd ig(0.0, 1.0 / p.gamma);
  m.topLeftCorner<3, 3>() = -p.damping_rate() * Eigen::Matrix3cd::Identity();
  m.topRightCorner<3, 3>() = ig * cx.cast<cd>();
  m.bottomLeftCorner<3, 3>() = -ig * cx.cast<cd>();
  return m;
}

ModePair EigenStructure::plus_from_e(const CVec3& e) const {
  return {e, cd(0, -1.0 / gamma) / lambda_plus * cross(xi, e)};
}
ModePair EigenStructure::plus_from_b(const CVec3& b) const {
  return {cd(0, -1.0 / gamma) / lambda_minus * cross(xi, b), b};
}
ModePair EigenStructure::minus_from_e(const CVec3& e) const {
  return {e, cd(0, -1.0 / gamma) / lambda_minus * cross(xi, e)};
}
ModePair EigenStructure::minus_from_b(const CVec3& b) const {
  return {cd(0, -1.0 / gamma) / lambda_plus * cross(xi, b), b};
}

EigenStructure eigen_structure(const Vec3& xi, const PhysParams& p) {
  const double k = xi.norm();
  if (k == 0.0) throw ZeroWavevectorError("eigen_structure: xi = 0 has no transverse modes");
  EigenStructure es;
  es.xi = xi;
  es.gamma = p.gamma;
  const double a = p.damping_rate();
  es.lambda0 = -a;
  const double d = discriminant(k, p);
  es.regime = classify_regime(k, p);
  switch (es.regime) {
    case Regime::sub_resonant: {
      const double sq = std::sqrt(d);
      // Rationalized form; the textbook difference cancels for gamma |xi| << 1.
      es.lambda_plus = -2.0 * p.resistivity() * k * k / (1.0 + sq);
      es.lambda_minus = -0.5 * a * (1.0 + sq);
      es.mixing_s = cd(-sq * a) / es.lambda_minus;
      break;
    }
    case Regime::super_resonant: {
      const double w = std::sqrt(-d);
      es.lambda_plus = 0.5 * a * cd(-1.0, w);
      es.lambda_minus = 0.5 * a * cd(-1.0, -w);
      es.mixing_s = cd(0.0, -w * a) / es.lambda_minus;
      break;
    }
    case Regime::resonant_shell:
      es.lambda_plus = es.lambda_minus = -0.5 * a;
      break;
  }
  return es;
}

PropagatorCoefficients propagator_coefficients(double t, double xi_norm, const PhysParams& p) {
  const double a = p.damping_rate();
  PropagatorCoefficients c;
  c.parallel_decay = std::exp(-a * t);
  if (xi_norm == 0.0) return c;
  const double d = discriminant(xi_norm, p);
  if (std::abs(d) < kResonanceTolerance) {
    // Jordan block: exp(t l1) (I + t (A - l1 I)).
    const double l1 = -0.5 * a;
    const double el = std::exp(t * l1);
    c.c1 = t * el;
    c.c0 = el * (1.0 - l1 * t);
  } else if (d > 0) {
    // exp(tA) = exp(t l+) P+ + exp(t l-) P-, P+/- = +/-(A - l-/+)/(l+ - l-).
    const double sq = std::sqrt(d);
    const double lp = -2.0 * p.resistivity() * xi_norm * xi_norm / (1.0 + sq);
    const double gap = sq * a;  // l+ - l- > 0
    const double ep = std::exp(t * lp);
    c.c1 = ep * (-std::expm1(-t * gap)) / gap;
    c.c0 = ep - lp * c.c1;
  } else {
    // l+/- = sigma +/- i omega.
    const double sigma = -0.5 * a;
    const double omega = 0.5 * a * std::sqrt(-d);
    const double es = std::exp(t * sigma);
    const double sn = std::sin(omega * t) / omega;
    c.c1 = es * sn;
    c.c0 = es * (std::cos(omega * t) - sigma * sn);
  }
  return c;
}

ModePair propagate_mode(double t, const ModePair& mode, const Vec3& xi, const PhysParams& p) {
  if (!(t >= 0.0)) throw ParamError("propagate_mode: t must be nonnegative, got " + std::to_string(t));
  const double k2 = xi.squaredNorm();
  const auto c = propagator_coefficients(t, std::sqrt(k2), p);
  ModePair out = mode;
  apply_maxwell_propagator(c, xi.data(), k2, p.gamma, p.damping_rate(), out.e_hat.data(),
                           out.b_hat.data());
  return out;
}

ModeDecomposition decompose_initial(const ModePair& mode, const Vec3& xi, const PhysParams& p) {
  const double k2 = xi.squaredNorm();
  if (k2 == 0.0) throw ZeroWavevectorError("decompose_initial: xi = 0");
  const auto es = eigen_structure(xi, p);
  if (es.regime == Regime::resonant_shell)
    throw ResonantShellError("decompose_initial: symbol is not diagonalizable on the resonant shell");
  const Vec3 unit = xi / std::sqrt(k2);
  const cd b_long = unit.cast<cd>().dot(mode.b_hat);
  if (std::abs(b_long) > 1e-12 * (mode.b_hat.norm() + 1e-300))
    throw ParamError("decompose_initial: b has a component along xi (div b != 0)");

  const CVec3 e_par = xi.cast<cd>() * (xi.cast<cd>().dot(mode.e_hat) / k2);
  const CVec3 e_perp = mode.e_hat - e_par;
  const cd k = cd(0, 1.0 / p.gamma) / es.lambda_minus;

  ModeDecomposition out;
  out.mixing_s = *es.mixing_s;
  out.s_e = e_perp + k * cross(xi, mode.b_hat);
  out.s_b = mode.b_hat + k * cross(xi, e_perp);
  const CVec3 e = out.s_e / out.mixing_s;
  const CVec3 b = out.s_b / out.mixing_s;
  out.parallel = {e_par, CVec3::Zero()};
  out.b_part = {-k * cross(xi, b), b};
  out.e_part = {e, -k * cross(xi, e)};
  return out;
}

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

double small_ratio_constant(const PhysParams& p) {
  const double r = std::sqrt(1.0 - 1.0 / (p.band_K * p.band_K));
  const double bh = p.resistivity();
  return 4.0 * bh * bh / (r * (1.0 + r));
}

BoundReport eigen_bound_check(const Vec3& xi, const PhysParams& p) {
  const double k = xi.norm();
  if (k == 0.0) throw ZeroWavevectorError("eigen_bound_check: xi = 0");
  const auto es = eigen_structure(xi, p);
  const double bh = p.resistivity();
  const double a = p.damping_rate();
  const double g = p.gamma;
  const double K = p.band_K;
  const double kk = std::sqrt(K * K - 1.0);
  const double d = discriminant(k, p);

  BoundReport rep;
  rep.xi_norm = k;
  rep.regime = es.regime;
  rep.checks.reserve(7);

  if (k <= p.resonance_radius() || es.regime == Regime::resonant_shell) {
    const double lp = es.lambda_plus.real();
    const double lm = es.lambda_minus.real();
    rep.checks.push_back(check_le("lambda_plus_lower", -2.0 * bh * k * k, lp));
    rep.checks.push_back(check_le("lambda_plus_upper", lp, -bh * k * k));
    rep.checks.push_back(check_le("lambda_minus_lower", -a, lm));
    rep.checks.push_back(check_le("lambda_minus_upper", lm, -0.5 * a));
    if (k <= 1.0 / (2.0 * K * bh * g)) {
      // lambda_- - lambda_+ = -sqrt(D) / (beta eta^2 gamma^2).
      const double sq = std::sqrt(std::max(d, 0.0));
      const double gap = sq * a;
      rep.checks.push_back(check_le("ratio_minus", std::abs(lm) / gap, K / kk));
      rep.checks.push_back(
          check_le("ratio_plus", std::abs(lp) / gap, small_ratio_constant(p) * g * g * k * k));
    } else {
      rep.checks.push_back(not_applicable("ratio_minus"));
      rep.checks.push_back(not_applicable("ratio_plus"));
    }
  } else {
    rep.checks.push_back(check_eq("modulus_plus", std::abs(es.lambda_plus), k / g));
    rep.checks.push_back(check_eq("modulus_minus", std::abs(es.lambda_minus), k / g));
    rep.checks.push_back(check_eq("real_part_plus", es.lambda_plus.real(), -0.5 * a));
    rep.checks.push_back(check_eq("real_part_minus", es.lambda_minus.real(), -0.5 * a));
    if (k >= K / (2.0 * bh * g)) {
      const double gap = std::sqrt(-d) * a;  // |lambda_- - lambda_+|
      const double rb = K / (2.0 * kk);
      rep.checks.push_back(check_le("ratio_plus_minus", std::abs(es.lambda_plus) / gap, rb));
      rep.checks.push_back(check_le("ratio_minus_minus", std::abs(es.lambda_minus) / gap, rb));
      rep.checks.push_back(check_le("inverse_gap", 1.0 / gap, rb * g / k));
    } else {
      rep.checks.push_back(not_applicable("ratio_plus_minus"));
      rep.checks.push_back(not_applicable("ratio_minus_minus"));
      rep.checks.push_back(not_applicable("inverse_gap"));
    }
  }
  return rep;
}

}  // namespace hallmhd

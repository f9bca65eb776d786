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

#include "hallmhd/ohm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

double max_magnitude(const PhysicalVector& v) {
  double mx = 0;
  for (std::size_t i = 0; i < v[0].size(); ++i)
    mx = std::max(mx, std::sqrt(v[0][i] * v[0][i] + v[1][i] * v[1][i] + v[2][i] * v[2][i]));
  return mx;
}

// P mask(j x B) with B already in physical space.
SpectralField projected_lorentz(const SpectralField& j, const PhysicalVector& b_phys) {
  return leray_project(dealiased_cross(j.grid_ptr(), to_physical(j), b_phys));
}

}  // namespace

OhmSolveReport solve_ohm(const SpectralField& u, const SpectralField& B, const SpectralField& E,
                         const PhysParams& p, const OhmOptions& opt,
                         const std::optional<SpectralField>& initial_guess) {
  p.validate();
  if (opt.tol <= 0 || opt.max_iter < 1) throw ParamError("solve_ohm: tol > 0 and max_iter >= 1 required");
  const GridPtr& grid = B.grid_ptr();
  const double be = p.beta * p.eta;

  const PhysicalVector b_phys = to_physical(B);
  SpectralField rhs = leray_project(E + dealiased_cross(grid, to_physical(u), b_phys));
  rhs *= 1.0 / p.eta;
  if (opt.remove_mean) rhs = remove_mean(rhs);

  OhmSolveReport rep(SpectralField{grid});
  rep.contraction_estimate = max_magnitude(b_phys) / be;

  SpectralField j = initial_guess ? leray_project(*initial_guess) : (1.0 / be) * rhs;
  if (opt.remove_mean) j = remove_mean(j);

  bool converged = false;
  for (int k = 0; k < opt.max_iter; ++k) {
    SpectralField next = rhs - projected_lorentz(j, b_phys);
    next *= 1.0 / be;
    if (opt.remove_mean) next = remove_mean(next);
    if (!all_finite(next)) throw NumericalError("solve_ohm: non-finite iterate");
    const double inc = l2_norm(next - j);
    rep.increments.push_back(inc);
    rep.iterations = k + 1;
    j = std::move(next);
    if (inc < opt.tol * (1.0 + l2_norm(j))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << "solve_ohm: no convergence in " << opt.max_iter
       << " iterations (contraction estimate " << rep.contraction_estimate << ")";
    throw ConvergenceError(os.str(), rep.contraction_estimate);
  }

  const double jn = l2_norm(j);
  const double floor = 1e-13 * (1.0 + jn);
  for (std::size_t k = 1; k < rep.increments.size(); ++k)
    if (rep.increments[k - 1] > floor && rep.increments[k] > floor)
      rep.observed_ratio = std::max(rep.observed_ratio, rep.increments[k] / rep.increments[k - 1]);

  SpectralField res = be * j + projected_lorentz(j, b_phys);
  res -= rhs;
  if (opt.remove_mean) res = remove_mean(res);
  rep.residual = l2_norm(res);
  j.set_div_free(true);
  rep.j = std::move(j);
  return rep;
}

ScalarSpectralField electron_pressure(const SpectralField& u, const SpectralField& B,
                                      const SpectralField& E, const SpectralField& j,
                                      const PhysParams& p) {
  const GridPtr& grid = B.grid_ptr();
  const PhysicalVector b_phys = to_physical(B);
  SpectralField r = E + dealiased_cross(grid, to_physical(u), b_phys);
  r *= 1.0 / p.eta;
  r.axpy(-p.beta * p.eta, j);
  r -= dealiased_cross(grid, to_physical(j), b_phys);
  // r = -grad p_e + (solenoidal part), so p_e = i xi.r / |xi|^2.
  ScalarSpectralField pe(grid);
  const Grid& g = *grid;
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const double k2 = g.xi2(m);
    if (k2 == 0.0) continue;
    const auto& k = g.xi(m);
    const cd dot = k[0] * r.component(0)[m] + k[1] * r.component(1)[m] + k[2] * r.component(2)[m];
    pe.coeffs()[m] = cd(0, 1) * dot / k2;
  }
  return pe;
}

SpectralField electric_field_closure(const SpectralField& u, const SpectralField& B,
                                     const SpectralField& j, const PhysParams& p) {
  const GridPtr& grid = B.grid_ptr();
  const PhysicalVector b_phys = to_physical(B);
  SpectralField e = dealiased_cross(grid, to_physical(j), b_phys);
  e *= p.eta;
  e -= dealiased_cross(grid, to_physical(u), b_phys);
  e.axpy(p.resistivity(), j);
  return leray_project(e);
}

}  // namespace hallmhd

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

#include "hallmhd/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

void require_same_grid(const Grid& a, const Grid& b, const char* op) {
  if (&a != &b && (a.n() != b.n() || a.dealias_fraction() != b.dealias_fraction()))
    throw GridMismatchError(std::string(op) + ": fields live on different grids");
}

constexpr cd kI(0.0, 1.0);

}  // namespace

ScalarSpectralField::ScalarSpectralField(GridPtr grid)
    : grid_(std::move(grid)), c_(grid_->mode_count()) {}

SpectralField::SpectralField(GridPtr grid) : grid_(std::move(grid)) {
  for (auto& c : c_) c.assign(grid_->mode_count(), cd(0));
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(*grid_, *o.grid_, "operator+=");
  for (int c = 0; c < 3; ++c) {
    auto& a = c_[c];
    const auto& b = o.c_[c];
    for (std::size_t m = 0; m < a.size(); ++m) a[m] += b[m];
  }
  div_free_ = div_free_ && o.div_free_;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(*grid_, *o.grid_, "operator-=");
  for (int c = 0; c < 3; ++c) {
    auto& a = c_[c];
    const auto& b = o.c_[c];
    for (std::size_t m = 0; m < a.size(); ++m) a[m] -= b[m];
  }
  div_free_ = div_free_ && o.div_free_;
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& comp : c_)
    for (auto& v : comp) v *= s;
  return *this;
}

SpectralField& SpectralField::axpy(double s, const SpectralField& o) {
  require_same_grid(*grid_, *o.grid_, "axpy");
  for (int c = 0; c < 3; ++c) {
    auto& a = c_[c];
    const auto& b = o.c_[c];
    for (std::size_t m = 0; m < a.size(); ++m) a[m] += s * b[m];
  }
  div_free_ = div_free_ && o.div_free_;
  return *this;
}

PhysicalVector to_physical(const SpectralField& f) {
  PhysicalVector out;
  for (int c = 0; c < 3; ++c) {
    out[c].resize(f.grid().real_size());
    f.grid().inverse(f.component(c), out[c]);
  }
  return out;
}

PhysicalScalar to_physical(const ScalarSpectralField& f) {
  PhysicalScalar out(f.grid().real_size());
  f.grid().inverse(f.coeffs(), out);
  return out;
}

SpectralField from_physical(const GridPtr& grid, const PhysicalVector& v) {
  SpectralField out(grid);
  for (int c = 0; c < 3; ++c) grid->forward(v[c], out.component(c));
  return out;
}

ScalarSpectralField from_physical(const GridPtr& grid, const PhysicalScalar& v) {
  ScalarSpectralField out(grid);
  grid->forward(v, out.coeffs());
  return out;
}

double grid_coordinate(const Grid& g, int i) { return 2.0 * std::numbers::pi * i / g.n(); }

SpectralField leray_project(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out = f;
  auto& x = out.component(0);
  auto& y = out.component(1);
  auto& z = out.component(2);
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const double k2 = g.xi2(m);
    if (k2 == 0.0) continue;
    const auto& k = g.xi(m);
    const cd dot = (k[0] * x[m] + k[1] * y[m] + k[2] * z[m]) / k2;
    x[m] -= k[0] * dot;
    y[m] -= k[1] * dot;
    z[m] -= k[2] * dot;
  }
  out.set_div_free(true);
  return out;
}

SpectralField curl(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out(f.grid_ptr());
  const auto& x = f.component(0);
  const auto& y = f.component(1);
  const auto& z = f.component(2);
  auto& ox = out.component(0);
  auto& oy = out.component(1);
  auto& oz = out.component(2);
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const auto& k = g.xi(m);
    ox[m] = kI * (k[1] * z[m] - k[2] * y[m]);
    oy[m] = kI * (k[2] * x[m] - k[0] * z[m]);
    oz[m] = kI * (k[0] * y[m] - k[1] * x[m]);
  }
  out.set_div_free(true);
  return out;
}

ScalarSpectralField divergence(const SpectralField& f) {
  const Grid& g = f.grid();
  ScalarSpectralField out(f.grid_ptr());
  auto& o = out.coeffs();
  const auto& x = f.component(0);
  const auto& y = f.component(1);
  const auto& z = f.component(2);
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const auto& k = g.xi(m);
    o[m] = kI * (k[0] * x[m] + k[1] * y[m] + k[2] * z[m]);
  }
  return out;
}

SpectralField gradient(const ScalarSpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out(f.grid_ptr());
  const auto& s = f.coeffs();
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const auto& k = g.xi(m);
    for (int c = 0; c < 3; ++c) out.component(c)[m] = kI * k[c] * s[m];
  }
  return out;
}

SpectralField dealias(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out = f;
  for (int c = 0; c < 3; ++c) {
    auto& v = out.component(c);
    for (std::size_t m = 0; m < g.mode_count(); ++m)
      if (!g.keep(m)) v[m] = 0;
  }
  return out;
}

SpectralField remove_mean(const SpectralField& f) {
  SpectralField out = f;
  for (int c = 0; c < 3; ++c) out.component(c)[0] = 0;
  return out;
}

SpectralField resample(const SpectralField& f, const GridPtr& target) {
  const Grid& src = f.grid();
  SpectralField out(target);
  const int ns = src.n(), nt = target->n();
  const double scale = std::pow(static_cast<double>(nt) / ns, 3);
  const int lim = std::min(ns, nt) / 2;  // strictly below both Nyquists
  for (std::size_t m = 0; m < src.mode_count(); ++m) {
    const auto l = src.lattice(m);
    if (std::abs(l[0]) >= lim || std::abs(l[1]) >= lim || l[2] >= lim) continue;
    const std::size_t mt = target->mode_index(l[0], l[1], l[2]);
    for (int c = 0; c < 3; ++c) out.component(c)[mt] = scale * f.component(c)[m];
  }
  out.set_div_free(f.div_free());
  return out;
}

SpectralField dealiased_cross(const GridPtr& grid, const PhysicalVector& a, const PhysicalVector& b) {
  const std::size_t n = grid->real_size();
  PhysicalVector p;
  for (auto& c : p) c.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[0][i] = a[1][i] * b[2][i] - a[2][i] * b[1][i];
    p[1][i] = a[2][i] * b[0][i] - a[0][i] * b[2][i];
    p[2][i] = a[0][i] * b[1][i] - a[1][i] * b[0][i];
  }
  return dealias(from_physical(grid, p));
}

SpectralField dealiased_cross(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "dealiased_cross");
  return dealiased_cross(a.grid_ptr(), to_physical(a), to_physical(b));
}

std::array<ScalarSpectralField, 6> dealiased_outer(const SpectralField& a) {
  const GridPtr& grid = a.grid_ptr();
  const auto p = to_physical(a);
  static constexpr int kPairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
  std::array<ScalarSpectralField, 6> out{ScalarSpectralField(grid), ScalarSpectralField(grid),
                                         ScalarSpectralField(grid), ScalarSpectralField(grid),
                                         ScalarSpectralField(grid), ScalarSpectralField(grid)};
  PhysicalScalar prod(grid->real_size());
  for (int q = 0; q < 6; ++q) {
    const auto& x = p[kPairs[q][0]];
    const auto& y = p[kPairs[q][1]];
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = x[i] * y[i];
    grid->forward(prod, out[q].coeffs());
    auto& c = out[q].coeffs();
    for (std::size_t m = 0; m < c.size(); ++m)
      if (!grid->keep(m)) c[m] = 0;
  }
  return out;
}

SpectralField divergence_of_outer(const SpectralField& a) {
  const Grid& g = a.grid();
  const auto t = dealiased_outer(a);
  // Symmetric index map (i, j) -> component of t.
  static constexpr int kIdx[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
  SpectralField out(a.grid_ptr());
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const auto& k = g.xi(m);
    for (int i = 0; i < 3; ++i) {
      cd s = 0;
      for (int j = 0; j < 3; ++j) s += k[j] * t[kIdx[i][j]].coeffs()[m];
      out.component(i)[m] = kI * s;
    }
  }
  return out;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

namespace {

template <class Weight>
double weighted_sum(const SpectralField& f, const SpectralField& g, Weight w) {
  const Grid& grid = f.grid();
  std::vector<double> terms(grid.mode_count());
  for (std::size_t m = 0; m < grid.mode_count(); ++m) {
    double s = 0;
    for (int c = 0; c < 3; ++c) s += std::real(std::conj(f.component(c)[m]) * g.component(c)[m]);
    terms[m] = grid.weight(m) * w(m) * s;
  }
  return grid.parseval_factor() * pairwise_sum(terms);
}

}  // namespace

double inner_product(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  return weighted_sum(f, g, [](std::size_t) { return 1.0; });
}

double l2_norm_squared(const SpectralField& f) { return inner_product(f, f); }

double l2_norm(const SpectralField& f) { return std::sqrt(l2_norm_squared(f)); }

double l2_norm(const ScalarSpectralField& f) {
  const Grid& g = f.grid();
  std::vector<double> terms(g.mode_count());
  for (std::size_t m = 0; m < g.mode_count(); ++m) terms[m] = g.weight(m) * std::norm(f.coeffs()[m]);
  return std::sqrt(g.parseval_factor() * pairwise_sum(terms));
}

double hdot_norm_squared(const SpectralField& f, double sigma) {
  const Grid& g = f.grid();
  return weighted_sum(f, f, [&](std::size_t m) {
    const double k2 = g.xi2(m);
    return k2 == 0.0 ? 0.0 : std::pow(k2, sigma);
  });
}

double linf_norm(const SpectralField& f) {
  const auto p = to_physical(f);
  double mx = 0;
  for (std::size_t i = 0; i < p[0].size(); ++i)
    mx = std::max(mx, std::sqrt(p[0][i] * p[0][i] + p[1][i] * p[1][i] + p[2][i] * p[2][i]));
  return mx;
}

double max_divergence(const SpectralField& f) {
  const auto d = to_physical(divergence(f));
  double mx = 0;
  for (double v : d) mx = std::max(mx, std::abs(v));
  return mx;
}

double max_relative_divergence(const SpectralField& f) {
  const Grid& g = f.grid();
  constexpr double eps = 2.220446049250313e-16;
  double mx = 0;
  for (std::size_t m = 0; m < g.mode_count(); ++m) {
    const double k2 = g.xi2(m);
    if (k2 == 0.0) continue;
    const auto& k = g.xi(m);
    cd dot = 0;
    double n2 = 0;
    for (int c = 0; c < 3; ++c) {
      dot += k[c] * f.component(c)[m];
      n2 += std::norm(f.component(c)[m]);
    }
    mx = std::max(mx, std::abs(dot) / (std::sqrt(k2 * n2) + eps));
  }
  return mx;
}

bool all_finite(const SpectralField& f) {
  for (int c = 0; c < 3; ++c)
    for (const auto& v : f.component(c))
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

FieldNorms norms(const SpectralField& f, double sobolev_s) {
  FieldNorms n;
  n.l2 = l2_norm(f);
  n.h1 = std::sqrt(hdot_norm_squared(f, 1.0));
  n.h1s = std::sqrt(hdot_norm_squared(f, 1.0 + sobolev_s));
  n.linf = linf_norm(f);
  return n;
}

double energy(const SpectralField& u, const SpectralField& B, const SpectralField& E, double gamma) {
  return 0.5 * (l2_norm_squared(u) + l2_norm_squared(B) + gamma * gamma * l2_norm_squared(E));
}

}  // namespace hallmhd

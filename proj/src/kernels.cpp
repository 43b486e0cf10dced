// Copyright 2026 The entosc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entosc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entosc/oscillator_basis.hpp"

namespace entosc::kernels {
namespace {

// Tables chi_0..chi_{len-1} at every x node and every y node.
std::vector<double> chi_columns(int count, double origin, double h, int len) {
  std::vector<double> t(std::size_t(count) * len);
  for (int i = 0; i < count; ++i) chi_table(origin + i * h, std::span<double>(&t[std::size_t(i) * len], len));
  return t;
}

template <class T>
T series_node(const SchmidtSeries& s, const double* cx, const double* cy, T phase) {
  T sum = 0.0, w = 1.0;
  for (int k = 0; k <= s.cutoff; ++k) {
    sum += w * (s.coeffs[k] * cx[s.n + k] * cy[k]);
    w *= phase;
  }
  return sum;
}

template <class T>
T series_node_ref(const SchmidtSeries& s, double x, double y, T phase) {
  T sum = 0.0, w = 1.0;
  for (int k = 0; k <= s.cutoff; ++k) {
    sum += w * (s.coeffs[k] * chi(s.n + k, x) * chi(k, y));
    w *= phase;
  }
  return sum;
}

template <class T>
BasicGrid<T> grid_serial(const SchmidtSeries& s, const GridSpec& g, T phase) {
  BasicGrid<T> out(g);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) out.at(i, j) = series_node_ref(s, g.x(i), g.y(j), phase);
  return out;
}

template <class T>
BasicGrid<T> grid_omp(const SchmidtSeries& s, const GridSpec& g, T phase) {
  const int lx = s.n + s.cutoff + 1, ly = s.cutoff + 1;
  const std::vector<double> tx = chi_columns(g.nx, g.x0, g.hx, lx);
  const std::vector<double> ty = chi_columns(g.ny, g.y0, g.hy, ly);
  BasicGrid<T> out(g);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      out.at(i, j) = series_node(s, &tx[std::size_t(i) * lx], &ty[std::size_t(j) * ly], phase);
    }
  return out;
}

double second_derivative(const GridFunction2D& f, int i, int j, int di, int dj, double h,
                         StencilOrder order) {
  const auto v = [&](int s) { return f.at(i + s * di, j + s * dj); };
  if (order == StencilOrder::second) return (v(-1) - 2.0 * v(0) + v(1)) / (h * h);
  return (-v(-2) + 16.0 * v(-1) - 30.0 * v(0) + 16.0 * v(1) - v(2)) / (12.0 * h * h);
}

double residual_at(const GridFunction2D& psi, int i, int j, double lambda, StencilOrder order) {
  const GridSpec& g = psi.spec;
  const double x = g.x(i), y = g.y(j), f = psi.at(i, j);
  const double fxx = second_derivative(psi, i, j, 1, 0, g.hx, order);
  const double fyy = second_derivative(psi, i, j, 0, 1, g.hy, order);
  const double d = 0.5 * ((x * x * f - fxx) - (y * y * f - fyy));
  return std::abs(d - lambda * f);
}

// Trapezoid-weighted e^{-2i k a h} for a = -reach .. reach.
std::vector<std::complex<double>> phases(double k, double h, int reach) {
  std::vector<std::complex<double>> e(2 * reach + 1);
  for (int a = -reach; a <= reach; ++a) {
    const double w = (a == -reach || a == reach) ? 0.5 : 1.0;
    e[a + reach] = w * std::polar(1.0, -2.0 * k * a * h);
  }
  return e;
}

std::complex<double> wigner_site(const ComplexGrid2D& psi, const WignerSite& s, int rx, int ry) {
  const double hx = psi.spec.hx, hy = psi.spec.hy;
  const auto ex = phases(s.p, hx, rx);
  const auto ey = phases(s.q, hy, ry);
  std::complex<double> sum = 0.0;
  for (int a = -rx; a <= rx; ++a) {
    std::complex<double> row = 0.0;
    for (int b = -ry; b <= ry; ++b) {
      row += ey[b + ry] * std::conj(psi.at(s.i + a, s.j + b)) * psi.at(s.i - a, s.j - b);
    }
    sum += ex[a + rx] * row;
  }
  return sum * (hx * hy / (std::numbers::pi * std::numbers::pi));
}

}  // namespace

GridFunction2D series_grid_serial(const SchmidtSeries& s, const GridSpec& grid) {
  return grid_serial<double>(s, grid, 1.0);
}
GridFunction2D series_grid_omp(const SchmidtSeries& s, const GridSpec& grid) {
  return grid_omp<double>(s, grid, 1.0);
}
ComplexGrid2D series_grid_serial(const SchmidtSeries& s, const GridSpec& grid,
                                 std::complex<double> phase) {
  return grid_serial(s, grid, phase);
}
ComplexGrid2D series_grid_omp(const SchmidtSeries& s, const GridSpec& grid,
                              std::complex<double> phase) {
  return grid_omp(s, grid, phase);
}

double fd_residual_serial(const GridFunction2D& psi, double lambda, StencilOrder order) {
  const int b = order == StencilOrder::fourth ? 2 : 1;
  double worst = 0.0;
  for (int i = b; i < psi.spec.nx - b; ++i)
    for (int j = b; j < psi.spec.ny - b; ++j) worst = std::max(worst, residual_at(psi, i, j, lambda, order));
  return worst;
}

double fd_residual_omp(const GridFunction2D& psi, double lambda, StencilOrder order) {
  const int b = order == StencilOrder::fourth ? 2 : 1;
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (int i = b; i < psi.spec.nx - b; ++i)
    for (int j = b; j < psi.spec.ny - b; ++j) worst = std::max(worst, residual_at(psi, i, j, lambda, order));
  return worst;
}

std::vector<std::complex<double>> wigner_serial(const ComplexGrid2D& psi,
                                                std::span<const WignerSite> sites, int rx, int ry) {
  std::vector<std::complex<double>> out(sites.size());
  for (std::size_t k = 0; k < sites.size(); ++k) out[k] = wigner_site(psi, sites[k], rx, ry);
  return out;
}

std::vector<std::complex<double>> wigner_omp(const ComplexGrid2D& psi,
                                             std::span<const WignerSite> sites, int rx, int ry) {
  std::vector<std::complex<double>> out(sites.size());
  const long count = static_cast<long>(sites.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) out[k] = wigner_site(psi, sites[k], rx, ry);
  return out;
}

}  // namespace entosc::kernels

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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "entosc/entangled_series.hpp"
#include "entosc/grid.hpp"

// Grid kernels in two flavours. The serial versions are the reference; the
// omp versions must return bitwise identical results.
namespace entosc::kernels {

/// Schmidt series at every node. The serial version calls chi() per term.
GridFunction2D series_grid_serial(const SchmidtSeries& s, const GridSpec& grid);
GridFunction2D series_grid_omp(const SchmidtSeries& s, const GridSpec& grid);

ComplexGrid2D series_grid_serial(const SchmidtSeries& s, const GridSpec& grid,
                                 std::complex<double> phase);
ComplexGrid2D series_grid_omp(const SchmidtSeries& s, const GridSpec& grid,
                              std::complex<double> phase);

/// max over interior nodes of |1/2[(x^2 - d_xx) - (y^2 - d_yy)] psi - lambda psi|.
/// Border width is 1 for the second-order stencil and 2 for the fourth-order one.
double fd_residual_serial(const GridFunction2D& psi, double lambda, StencilOrder order);
double fd_residual_omp(const GridFunction2D& psi, double lambda, StencilOrder order);

/// Phase-space point whose position is the grid node (i, j).
struct WignerSite {
  int i = 0;
  int j = 0;
  double p = 0.0;
  double q = 0.0;
};

/// (h_x h_y / pi^2) sum_{|a| <= rx, |b| <= ry} w_a w_b e^{-2i(p a hx + q b hy)}
///   conj(psi[i+a, j+b]) psi[i-a, j-b]
/// with trapezoid end weights 1/2. Callers check that every site has
/// rx (ry) nodes on each side.
std::vector<std::complex<double>> wigner_serial(const ComplexGrid2D& psi,
                                                std::span<const WignerSite> sites, int rx, int ry);
std::vector<std::complex<double>> wigner_omp(const ComplexGrid2D& psi,
                                             std::span<const WignerSite> sites, int rx, int ry);

}  // namespace entosc::kernels

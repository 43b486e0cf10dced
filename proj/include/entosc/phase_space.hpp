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
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "entosc/grid.hpp"

namespace entosc {

struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  double q = 0.0;
};

struct WignerOptions {
  double half_width = 6.0;  // of the x', y' window
  double spacing = 0.05;    // callable overload only; the grid overload uses the grid spacing
  double min_reach = 4.0;   // smallest accepted half-width
  double imag_tol = 1e-9;
};

using Wavefunction = std::function<std::complex<double>(double, double)>;

/// W(x,y,p,q) = (1/pi^2) int e^{-2i(p x' + q y')} conj(psi(x+x', y+y')) psi(x-x', y-y') dx' dy'
/// by the trapezoid rule. Throws DomainError if the window is below min_reach and
/// NumericFailure if |Im W| > imag_tol.
double wigner_transform(const Wavefunction& psi, const PhasePoint& at,
                        const WignerOptions& opt = {});

/// Same transform on a sampled state. (at.x, at.y) must be grid nodes and the
/// window (half_width rounded to whole steps) must fit inside the grid.
double wigner_transform(const ComplexGrid2D& psi, const PhasePoint& at,
                        const WignerOptions& opt = {});
std::vector<double> wigner_transform(const ComplexGrid2D& psi, std::span<const PhasePoint> at,
                                     const WignerOptions& opt = {});

/// (1/pi^2) exp(-(x^2 + p^2 + y^2 + q^2)).
double wigner_ground_closed(const PhasePoint& at);

/// chi_0(x) chi_0(y).
double ground_wavefunction(double x, double y);

enum class Flow { Q3, K3, Shear };

std::string_view name(Flow f);
std::optional<Flow> parse_flow(std::string_view s);

/// exp(2 eta A) on (x, y, p, q) for A = A_Q3, A_K3 or A_Q3 - A_L2.
Eigen::Matrix4d flow_matrix(Flow f, double eta);

/// The ground state carried along the flow, sampled on grid:
///   Q3: psi0(boost(eta) v);  shear: psi0(shear(eta)^{-1} v);
///   K3: sum_k i^k tanh^k(eta) / cosh(eta) chi_k(x) chi_k(y).
ComplexGrid2D flow_state(Flow f, double eta, const GridSpec& grid);

struct FlowCheck {
  Eigen::Matrix4d flow;
  std::vector<double> numeric;   // Wigner transform of flow_state
  std::vector<double> expected;  // wigner_ground_closed(flow^{-1} v)
  double max_deviation = 0.0;
};

/// Positions of the sample points must be multiples of opt.spacing.
FlowCheck flow_covariance_check(Flow f, double eta, std::span<const PhasePoint> points,
                                const WignerOptions& opt = {});

/// 16 points with coordinates in [-2, 2] on the 0.05 lattice, from a fixed seed.
std::vector<PhasePoint> sample_cloud(int count = 16, unsigned seed = 20260101u);

}  // namespace entosc

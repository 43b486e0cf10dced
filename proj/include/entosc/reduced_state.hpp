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

#include <iosfwd>
#include <span>
#include <vector>

#include "entosc/entangled_series.hpp"

namespace entosc {

/// Reduced state of the first mode after tracing out the second:
/// rho(x, r) = sum_k p_k chi_{n+k}(x) chi_{n+k}(r).
struct ReducedDensity {
  int n = 0;
  double eta = 0.0;
  std::vector<double> probs;  // p_k = A_k(n)^2
  int cutoff = 0;
  double tail_bound = 0.0;  // bound on sum_{k>cutoff} p_k

  /// rho(x, r) from the truncated spectrum. Throws IndexOutOfRange if
  /// n + cutoff > kMaxIndex.
  double kernel(double x, double r) const;
};

/// Throws DomainError unless tol > 0.
ReducedDensity reduced_density(int n, const SqueezeParam& eta, double tol = 1e-17);

/// sum_k p_k^2.
double purity(int n, const SqueezeParam& eta);

/// 1 / cosh(2 eta).
double purity_closed(const SqueezeParam& eta);

/// -sum_k p_k ln p_k in nats, with 0 ln 0 = 0.
double entropy(int n, const SqueezeParam& eta);

/// 2[cosh^2 ln cosh - sinh^2 ln sinh].
double entropy_closed_ground(const SqueezeParam& eta);

/// 2(n+1)[cosh^2 ln cosh - sinh^2 ln sinh] - sum_k p_k ln C(n+k, k).
/// The remaining sum has no elementary closed form and is summed directly.
double entropy_closed(int n, const SqueezeParam& eta);

/// Ground-state rho(x, r) in closed form.
double position_density(const SqueezeParam& eta, double x, double r);

/// sqrt(cosh 2 eta).
double width(const SqueezeParam& eta);

/// -1 / ln(tanh^2 eta); 0 at eta = 0.
double temperature(const SqueezeParam& eta);

/// atanh(exp(-1 / (2T))) for T > 0, 0 for T = 0. Throws DomainError for T < 0
/// or when the rapidity would exceed kMaxRapidity.
double eta_for_temperature(double t);

struct ThermoPoint {
  double beta_sq = 0.0;
  double entropy = 0.0;
  double temperature = 0.0;
};

/// Ground-state entropy and temperature at each beta^2 = tanh^2 eta.
/// Throws DomainError for values outside [0, 1).
std::vector<ThermoPoint> thermo_curve(std::span<const double> beta_sq_grid);

/// steps evenly spaced values from lo to hi inclusive (steps >= 2), or {lo} for steps == 1.
std::vector<double> linear_grid(double lo, double hi, int steps);

/// Index of the interior point with the largest |d^2 T / d(beta^2)^2| (central
/// differences on the given points). Needs at least three points.
std::size_t max_curvature_index(std::span<const ThermoPoint> curve);

/// Header beta_sq,entropy_nats,temperature.
void write_csv(std::span<const ThermoPoint> curve, std::ostream& out);

}  // namespace entosc

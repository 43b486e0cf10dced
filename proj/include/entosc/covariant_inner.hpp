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

#include "entosc/entangled_series.hpp"

namespace entosc {

/// Oscillator state boosted with rapidity eta, in the longitudinal (z) and
/// time (t) separations. The time-like mode is always in its ground state.
struct CovariantState {
  int n = 0;
  double eta = 0.0;
};

/// chi_n(z') chi_0(t') with z' = cosh(eta) z - sinh(eta) t, t' = cosh(eta) t - sinh(eta) z.
double boosted_wavefunction(const CovariantState& state, double z, double t);

inline constexpr int kMaxInnerProductIndex = 12;

struct InnerProduct {
  double quadrature = 0.0;
  double closed_form = 0.0;  // cosh(eta1 - eta2)^{-(n+1)} delta_{nm}
  double deviation = 0.0;
};

/// Overlap of two boosted states by Gauss-Hermite quadrature in the
/// light-cone coordinates, next to the closed form. Throws DomainError for
/// n or m outside [0, 12].
InnerProduct inner_product(int n, const SqueezeParam& eta1, int m, const SqueezeParam& eta2,
                           int order = kDefaultQuadratureOrder);

/// sqrt(1 - beta^2)^{n+1}. Throws DomainError unless |beta| < 1.
double contraction_factor(int n, double beta);

/// Integral of |psi|^2 by the same quadrature; 1 for every eta.
double boosted_norm(const CovariantState& state, int order = kDefaultQuadratureOrder);

}  // namespace entosc

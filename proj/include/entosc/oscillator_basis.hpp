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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace entosc {

/// Largest excitation number any basis routine accepts.
inline constexpr int kMaxIndex = 256;

/// Default Gauss-Hermite order used by the quadrature-based oracles.
inline constexpr int kDefaultQuadratureOrder = 64;

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
/// Overflows to inf for large n and |x|; use chi() for normalized values.
double hermite(int n, double x);

/// Normalized oscillator eigenfunction
///   chi_n(x) = (sqrt(pi) 2^n n!)^{-1/2} H_n(x) exp(-x^2/2).
/// The recurrence runs on chi directly, so nothing overflows for n <= kMaxIndex.
double chi(int n, double x);

/// Fills out[k] = chi_k(x) for k = 0 .. out.size()-1.
void chi_table(double x, std::span<double> out);

/// exp(-r^2 + 2 r z), the generating function sum_m r^m H_m(z) / m!.
double generating_function(double r, double z);

/// Gauss-Hermite rule for the weight exp(-x^2).
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
  int order = 0;

  /// Sum of w_i f(x_i); approximates the integral of exp(-x^2) f(x).
  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }

  /// Approximates the unweighted integral of g(x), assuming g decays like exp(-x^2).
  template <class G>
  double integrate_plain(G&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double x = nodes[i];
      sum += weights[i] * std::exp(x * x) * g(x);
    }
    return sum;
  }
};

/// Gauss-Hermite rule of the given order (Newton iteration on the
/// normalized recurrence). Exact for polynomial * exp(-x^2) up to degree
/// 2*order - 1. Cached per order; the returned reference stays valid.
const QuadratureRule& quadrature(int order = kDefaultQuadratureOrder);

}  // namespace entosc

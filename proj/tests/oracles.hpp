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

// Reference computations for the tests. None of these call into the library
// numerics they are used to check.

#include <functional>

#include <Eigen/Dense>

namespace oracle {

/// H_n(x) from the explicit sum n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
long double hermite_explicit(int n, long double x);

/// (sqrt(pi) 2^n n!)^{-1/2} H_n(x) e^{-x^2/2} with exact factorials (n <= 60).
long double chi_direct(int n, long double x);

/// sum_{m<=M} r^m H_m(z) / m!.
long double generating_partial_sum(long double r, long double z, int M);

/// C(n+k, k) by the product formula.
long double binomial(int n, int k);

/// cosh^{-(n+1)} sqrt(C(n+k,k)) tanh^k in long double.
long double coefficient(int n, int k, long double eta);

/// -sum_k p_k ln p_k with p_k = coefficient^2, summed until p_k < 1e-30.
long double schmidt_entropy(int n, long double eta);

/// sum_k p_k^2.
long double schmidt_purity(int n, long double eta);

/// Trapezoid rule on [-L, L] with step h.
double trapezoid(const std::function<double(double)>& f, double L, double h);

/// Trapezoid rule on [-L, L]^2 with step h.
double trapezoid2(const std::function<double(double, double)>& f, double L, double h);

/// Wigner function of the normalized real Gaussian c exp(-v^T A v / 2), det A = 1:
/// (1/pi^2) exp(-v^T A v - k^T A^{-1} k).
double wigner_real_gaussian(const Eigen::Matrix2d& A, double x, double y, double p, double q);

/// Central second derivative of f at x by Richardson-extrapolated differences.
double second_derivative(const std::function<double(double)>& f, double x);

}  // namespace oracle

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
#include <string>
#include <vector>

#include "entosc/grid.hpp"
#include "entosc/oscillator_basis.hpp"

namespace entosc {

inline constexpr double kMaxRapidity = 25.0;

/// Rapidity eta with tanh/cosh/sinh cached.
class SqueezeParam {
 public:
  /// Throws DomainError unless eta is finite with |eta| <= kMaxRapidity.
  explicit SqueezeParam(double eta);

  double eta() const { return eta_; }
  double tanh_eta() const { return tanh_; }
  double cosh_eta() const { return cosh_; }
  double sinh_eta() const { return sinh_; }

 private:
  double eta_;
  double tanh_;
  double cosh_;
  double sinh_;
};

/// chi_n(x') chi_m(y') with x' = cosh(eta) x - sinh(eta) y, y' = cosh(eta) y - sinh(eta) x.
double squeezed_wavefunction(int n, int m, const SqueezeParam& eta, double x, double y);

inline double squeezed_wavefunction(int n, const SqueezeParam& eta, double x, double y) {
  return squeezed_wavefunction(n, 0, eta, x, y);
}

/// A_k(n) = cosh^{-(n+1)} sqrt(C(n+k, k)) tanh^k, evaluated in log space.
/// Negative eta flips the sign of odd k.
double coefficient(int n, int k, const SqueezeParam& eta);

/// The same coefficient as the overlap of chi_{n+k}(x) chi_k(y) with the
/// squeezed state, by tensor Gauss-Hermite quadrature in the normal
/// coordinates. Throws DomainError for n + k > 40.
double coefficient_by_quadrature(int n, int k, const SqueezeParam& eta,
                                 int order = kDefaultQuadratureOrder);

/// Truncated Schmidt series sum_{k<=cutoff} A_k chi_{n+k}(x) chi_k(y).
struct SchmidtSeries {
  int n = 0;
  double eta = 0.0;
  std::vector<double> coeffs;
  int cutoff = 0;
  /// For series from schmidt_series(): bound on sum_{k>cutoff} A_k^2.
  /// For series from pointwise_series(): bound on the pointwise truncation error.
  double tail_bound = 0.0;
};

/// Coefficients until the squared tail is below tol. Not limited by kMaxIndex;
/// throws CutoffError past 10^6 terms.
SchmidtSeries schmidt_series(int n, const SqueezeParam& eta, double tol = 1e-17);

/// Coefficients until sup_{x,y} of the neglected terms is below tol, using
/// |chi_k| <= 1.086435 pi^{-1/4}. The starting guess is
/// max(ceil(ln(tol (1 - t^2)) / (2 ln t)), 8). Throws CutoffError if
/// n + cutoff would pass kMaxIndex.
SchmidtSeries pointwise_series(int n, const SqueezeParam& eta, double tol);

double series_sum(const SchmidtSeries& s, double x, double y);

/// sum_k A_k phase^k chi_{n+k}(x) chi_k(y).
std::complex<double> series_sum(const SchmidtSeries& s, double x, double y,
                                std::complex<double> phase);

/// Throws DomainError unless tol > 0.
double series_sum(int n, const SqueezeParam& eta, double x, double y, double tol);

/// sum_k A_k(n)^2.
double normalization_check(int n, const SqueezeParam& eta);

/// L2 norm of sum_k tanh^k chi_k(x) chi_k(y), computed from the coefficients.
double unnormalized_series_ratio(const SqueezeParam& eta);

enum class StencilOrder { second = 2, fourth = 4 };

struct ResidualReport {
  double residual = 0.0;    // max |D psi - (n - m) psi| over interior nodes
  double eigenvalue = 0.0;  // n - m
  bool coarse_grid = false;
  std::string warning;
};

/// Applies D = 1/2[(x^2 - d_xx) - (y^2 - d_yy)] to the squeezed state by
/// central differences. Throws DomainError if the grid has no interior nodes
/// for the stencil.
ResidualReport eigenvalue_residual(int n, int m, const SqueezeParam& eta, const GridSpec& grid,
                                   StencilOrder order = StencilOrder::fourth);

}  // namespace entosc

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

#include "entosc/entangled_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "entosc/errors.hpp"
#include "entosc/kernels.hpp"

namespace entosc {
namespace {

constexpr long kMaxCoefficientTerms = 1'000'000;

// sup |chi_k| <= kCramer * pi^{-1/4}
constexpr double kCramer = 1.086435;

void check_nonnegative(int v, const char* what) {
  if (v < 0) throw DomainError(std::string(what) + " must be >= 0, got " + std::to_string(v));
}

// ln C(n + k, k); exact below 20!.
double log_binomial(int n, int k) {
  if (n == 0 || k == 0) return 0.0;
  if (n + k <= 20) {
    std::uint64_t c = 1;
    const int small = std::min(n, k);
    for (int i = 1; i <= small; ++i) c = c * std::uint64_t(n + k - small + i) / std::uint64_t(i);
    return std::log(double(c));
  }
  return std::lgamma(n + k + 1.0) - std::lgamma(n + 1.0) - std::lgamma(k + 1.0);
}

// A_{k+1} / A_k for eta > 0.
double ratio(int n, int k, double t) { return t * std::sqrt(double(n + k + 1) / double(k + 1)); }

}  // namespace

SqueezeParam::SqueezeParam(double eta) : eta_(eta) {
  if (!std::isfinite(eta) || std::abs(eta) > kMaxRapidity) {
    throw DomainError("rapidity must be finite with |eta| <= 25");
  }
  tanh_ = std::tanh(eta);
  cosh_ = std::cosh(eta);
  sinh_ = std::sinh(eta);
}

double squeezed_wavefunction(int n, int m, const SqueezeParam& eta, double x, double y) {
  const double c = eta.cosh_eta(), s = eta.sinh_eta();
  return chi(n, c * x - s * y) * chi(m, c * y - s * x);
}

double coefficient(int n, int k, const SqueezeParam& eta) {
  check_nonnegative(n, "n");
  check_nonnegative(k, "k");
  const double t = eta.tanh_eta();
  if (k == 0) return std::exp(-(n + 1) * std::log(eta.cosh_eta()));
  if (t == 0.0) return 0.0;
  const double log_a =
      -(n + 1) * std::log(eta.cosh_eta()) + 0.5 * log_binomial(n, k) + k * std::log(std::abs(t));
  const double a = std::exp(log_a);
  return (t < 0.0 && k % 2 == 1) ? -a : a;
}

double coefficient_by_quadrature(int n, int k, const SqueezeParam& eta, int order) {
  check_nonnegative(n, "n");
  check_nonnegative(k, "k");
  if (n + k > 40) throw DomainError("coefficient_by_quadrature needs n + k <= 40");
  const QuadratureRule& rule = quadrature(order);
  const double e = std::exp(-2.0 * eta.eta());
  // exponent of the integrand is -1/2 (1 + e) u^2 - 1/2 (1 + 1/e) v^2
  const double au = 0.5 * (1.0 + e), av = 0.5 * (1.0 + 1.0 / e);
  const double su = 1.0 / std::sqrt(au), sv = 1.0 / std::sqrt(av);
  const double r2 = std::numbers::sqrt2 / 2.0;
  double sum = 0.0;
  for (int a = 0; a < rule.order; ++a) {
    const double u = su * rule.nodes[a];
    double row = 0.0;
    for (int b = 0; b < rule.order; ++b) {
      const double v = sv * rule.nodes[b];
      const double x = r2 * (u + v), y = r2 * (u - v);
      const double f = chi(n + k, x) * chi(k, y) * squeezed_wavefunction(n, eta, x, y);
      row += rule.weights[b] * f * std::exp(au * u * u + av * v * v);
    }
    sum += rule.weights[a] * row;
  }
  return su * sv * sum;
}

SchmidtSeries schmidt_series(int n, const SqueezeParam& eta, double tol) {
  check_nonnegative(n, "n");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  SchmidtSeries s;
  s.n = n;
  s.eta = eta.eta();
  const double t = std::abs(eta.tanh_eta());
  for (int k = 0;; ++k) {
    if (k >= kMaxCoefficientTerms) {
      throw CutoffError("Schmidt series needs more than 10^6 terms at eta = " +
                        std::to_string(eta.eta()));
    }
    s.coeffs.push_back(coefficient(n, k, eta));
    if (t == 0.0) break;
    // sum_{j>k} A_j^2 <= A_{k+1}^2 / (1 - r_{k+1}^2) once r_{k+1} < 1
    const double r = ratio(n, k + 1, t);
    if (r < 1.0) {
      const double next = coefficient(n, k + 1, eta);
      const double tail = next * next / (1.0 - r * r);
      if (tail <= tol) {
        s.tail_bound = tail;
        break;
      }
    }
  }
  s.cutoff = static_cast<int>(s.coeffs.size()) - 1;
  return s;
}

SchmidtSeries pointwise_series(int n, const SqueezeParam& eta, double tol) {
  check_nonnegative(n, "n");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  SchmidtSeries s;
  s.n = n;
  s.eta = eta.eta();
  const double t = std::abs(eta.tanh_eta());
  if (t == 0.0) {
    s.coeffs = {1.0};
    return s;
  }
  const double sup2 = kCramer * kCramer / std::sqrt(std::numbers::pi);
  const auto tail_after = [&](int k) {
    // bound on sum_{j>k} |A_j| sup|chi_{n+j} chi_j|
    const double r = ratio(n, k + 1, t);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return sup2 * std::abs(coefficient(n, k + 1, eta)) / (1.0 - r);
  };
  const double guess = std::ceil(std::log(tol * (1.0 - t * t)) / (2.0 * std::log(t)));
  int k = static_cast<int>(std::clamp(guess, 8.0, double(kMaxIndex + 1)));
  while (n + k <= kMaxIndex && tail_after(k) > tol) ++k;
  if (n + k > kMaxIndex) {
    throw CutoffError("series at eta = " + std::to_string(eta.eta()) + ", n = " + std::to_string(n) +
                      " needs more than " + std::to_string(kMaxIndex - n) + " terms for tol " +
                      std::to_string(tol));
  }
  s.cutoff = k;
  s.tail_bound = tail_after(k);
  s.coeffs.resize(k + 1);
  for (int j = 0; j <= k; ++j) s.coeffs[j] = coefficient(n, j, eta);
  return s;
}

double series_sum(const SchmidtSeries& s, double x, double y) {
  std::vector<double> cx(s.n + s.cutoff + 1), cy(s.cutoff + 1);
  chi_table(x, cx);
  chi_table(y, cy);
  double sum = 0.0;
  for (int k = 0; k <= s.cutoff; ++k) sum += s.coeffs[k] * cx[s.n + k] * cy[k];
  return sum;
}

std::complex<double> series_sum(const SchmidtSeries& s, double x, double y,
                                std::complex<double> phase) {
  std::vector<double> cx(s.n + s.cutoff + 1), cy(s.cutoff + 1);
  chi_table(x, cx);
  chi_table(y, cy);
  std::complex<double> sum = 0.0, w = 1.0;
  for (int k = 0; k <= s.cutoff; ++k) {
    sum += w * (s.coeffs[k] * cx[s.n + k] * cy[k]);
    w *= phase;
  }
  return sum;
}

double series_sum(int n, const SqueezeParam& eta, double x, double y, double tol) {
  return series_sum(pointwise_series(n, eta, tol), x, y);
}

double normalization_check(int n, const SqueezeParam& eta) {
  const SchmidtSeries s = schmidt_series(n, eta);
  double sum = 0.0;
  for (double a : s.coeffs) sum += a * a;
  return sum;
}

double unnormalized_series_ratio(const SqueezeParam& eta) {
  const double t2 = eta.tanh_eta() * eta.tanh_eta();
  double sum = 0.0, term = 1.0;
  for (long k = 0; term > 1e-18 * sum || k == 0; ++k) {
    if (k >= kMaxCoefficientTerms) throw CutoffError("unnormalized series needs more than 10^6 terms");
    sum += term;
    term *= t2;
  }
  return std::sqrt(sum);
}

ResidualReport eigenvalue_residual(int n, int m, const SqueezeParam& eta, const GridSpec& grid,
                                   StencilOrder order) {
  check_nonnegative(n, "n");
  check_nonnegative(m, "m");
  grid.validate();
  const int border = order == StencilOrder::fourth ? 2 : 1;
  if (grid.nx <= 2 * border || grid.ny <= 2 * border) {
    throw DomainError("grid has no interior nodes for the stencil");
  }
  const GridFunction2D psi =
      sample(grid, [&](double x, double y) { return squeezed_wavefunction(n, m, eta, x, y); });

  ResidualReport r;
  r.eigenvalue = double(n - m);
  r.residual = kernels::fd_residual_omp(psi, r.eigenvalue, order);

  // Shortest length scale of the state, from the squeeze and the node count.
  const double scale = std::exp(-std::abs(eta.eta())) / std::sqrt(1.0 + std::max(n, m));
  const double h = std::max(grid.hx, grid.hy);
  const double limit = (order == StencilOrder::fourth ? 0.2 : 0.05) * scale;
  if (h > limit) {
    r.coarse_grid = true;
    r.warning = "grid spacing " + format_number(h) + " is coarse for this state (suggest <= " +
                format_number(limit) + ")";
  }
  return r;
}

}  // namespace entosc

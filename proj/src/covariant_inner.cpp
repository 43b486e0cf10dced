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

#include "entosc/covariant_inner.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entosc/errors.hpp"

namespace entosc {
namespace {

void check_budget(int n) {
  if (n < 0 || n > kMaxInnerProductIndex) {
    throw DomainError("inner products need 0 <= n <= 12, got " + std::to_string(n));
  }
}

// Integral of f(z, t) exp(-a u^2 - b v^2) over the plane, u = (z + t)/sqrt2, v = (z - t)/sqrt2,
// where f times the Gaussian is passed as g and a, b describe its decay.
template <class G>
double light_cone_integral(G&& g, double a, double b, int order) {
  const QuadratureRule& rule = quadrature(order);
  const double su = 1.0 / std::sqrt(a), sv = 1.0 / std::sqrt(b);
  const double r2 = std::numbers::sqrt2 / 2.0;
  double sum = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double u = su * rule.nodes[i];
    double row = 0.0;
    for (int j = 0; j < rule.order; ++j) {
      const double v = sv * rule.nodes[j];
      row += rule.weights[j] * g(r2 * (u + v), r2 * (u - v)) * std::exp(a * u * u + b * v * v);
    }
    sum += rule.weights[i] * row;
  }
  return su * sv * sum;
}

}  // namespace

double boosted_wavefunction(const CovariantState& state, double z, double t) {
  return squeezed_wavefunction(state.n, SqueezeParam(state.eta), z, t);
}

InnerProduct inner_product(int n, const SqueezeParam& eta1, int m, const SqueezeParam& eta2,
                           int order) {
  check_budget(n);
  check_budget(m);
  // |psi_eta|^2 decays as exp(-e^{-2 eta} u^2 - e^{2 eta} v^2)
  const double a = 0.5 * (std::exp(-2.0 * eta1.eta()) + std::exp(-2.0 * eta2.eta()));
  const double b = 0.5 * (std::exp(2.0 * eta1.eta()) + std::exp(2.0 * eta2.eta()));
  InnerProduct r;
  r.quadrature = light_cone_integral(
      [&](double z, double t) {
        return squeezed_wavefunction(n, eta1, z, t) * squeezed_wavefunction(m, eta2, z, t);
      },
      a, b, order);
  r.closed_form = n == m ? std::pow(1.0 / std::cosh(eta1.eta() - eta2.eta()), n + 1) : 0.0;
  r.deviation = std::abs(r.quadrature - r.closed_form);
  return r;
}

double contraction_factor(int n, double beta) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (!(std::abs(beta) < 1.0)) throw DomainError("contraction factor needs |beta| < 1");
  return std::pow(std::sqrt(1.0 - beta * beta), n + 1);
}

double boosted_norm(const CovariantState& state, int order) {
  const SqueezeParam eta(state.eta);
  const double a = std::exp(-2.0 * eta.eta()), b = std::exp(2.0 * eta.eta());
  return light_cone_integral(
      [&](double z, double t) {
        const double f = squeezed_wavefunction(state.n, eta, z, t);
        return f * f;
      },
      a, b, order);
}

}  // namespace entosc

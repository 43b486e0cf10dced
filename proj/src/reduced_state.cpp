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

#include "entosc/reduced_state.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "entosc/errors.hpp"

namespace entosc {
namespace {

ReducedDensity from_series(const SchmidtSeries& s) {
  ReducedDensity rho;
  rho.n = s.n;
  rho.eta = s.eta;
  rho.cutoff = s.cutoff;
  rho.tail_bound = s.tail_bound;
  rho.probs.reserve(s.coeffs.size());
  for (double a : s.coeffs) rho.probs.push_back(a * a);
  return rho;
}

double ground_entropy_part(const SqueezeParam& eta) {
  const double c = eta.cosh_eta(), s = std::abs(eta.sinh_eta());
  const double s_term = s == 0.0 ? 0.0 : s * s * std::log(s);
  return c * c * std::log(c) - s_term;
}

}  // namespace

double ReducedDensity::kernel(double x, double r) const {
  std::vector<double> cx(n + cutoff + 1), cr(n + cutoff + 1);
  chi_table(x, cx);
  chi_table(r, cr);
  double sum = 0.0;
  for (int k = 0; k <= cutoff; ++k) sum += probs[k] * cx[n + k] * cr[n + k];
  return sum;
}

ReducedDensity reduced_density(int n, const SqueezeParam& eta, double tol) {
  return from_series(schmidt_series(n, eta, tol));
}

double purity(int n, const SqueezeParam& eta) {
  const ReducedDensity rho = reduced_density(n, eta);
  double sum = 0.0;
  for (double p : rho.probs) sum += p * p;
  return sum;
}

double purity_closed(const SqueezeParam& eta) { return 1.0 / std::cosh(2.0 * eta.eta()); }

double entropy(int n, const SqueezeParam& eta) {
  const ReducedDensity rho = reduced_density(n, eta);
  double s = 0.0;
  for (double p : rho.probs)
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

double entropy_closed_ground(const SqueezeParam& eta) { return 2.0 * ground_entropy_part(eta); }

double entropy_closed(int n, const SqueezeParam& eta) {
  if (n < 0) throw DomainError("n must be >= 0");
  double s = 2.0 * (n + 1) * ground_entropy_part(eta);
  if (n == 0) return s;
  const ReducedDensity rho = reduced_density(n, eta);
  for (int k = 1; k <= rho.cutoff; ++k) {
    const double lc = std::lgamma(n + k + 1.0) - std::lgamma(n + 1.0) - std::lgamma(k + 1.0);
    s -= rho.probs[k] * lc;
  }
  return s;
}

double position_density(const SqueezeParam& eta, double x, double r) {
  const double c2 = std::cosh(2.0 * eta.eta());
  const double e = 0.25 * ((x + r) * (x + r) / c2 + (x - r) * (x - r) * c2);
  return std::exp(-e) / std::sqrt(std::numbers::pi * c2);
}

double width(const SqueezeParam& eta) { return std::sqrt(std::cosh(2.0 * eta.eta())); }

double temperature(const SqueezeParam& eta) {
  const double t = std::abs(eta.tanh_eta());
  if (t == 0.0) return 0.0;
  if (t == 1.0) return std::numeric_limits<double>::infinity();
  // ln(tanh^2) = 2 ln(1 - (1 - t)) with 1 - t = 2 / (e^{2|eta|} + 1), kept accurate near t = 1
  const double one_minus_t = 2.0 / (std::exp(2.0 * std::abs(eta.eta())) + 1.0);
  return -1.0 / (2.0 * std::log1p(-one_minus_t));
}

double eta_for_temperature(double t) {
  if (!(t >= 0.0) || std::isnan(t)) throw DomainError("temperature must be >= 0");
  if (t == 0.0) return 0.0;
  const double eta = std::atanh(std::exp(-1.0 / (2.0 * t)));
  if (!(eta <= kMaxRapidity)) throw DomainError("temperature too high for a representable rapidity");
  return eta;
}

std::vector<ThermoPoint> thermo_curve(std::span<const double> beta_sq_grid) {
  std::vector<ThermoPoint> out;
  out.reserve(beta_sq_grid.size());
  for (double b2 : beta_sq_grid) {
    if (!(b2 >= 0.0 && b2 < 1.0)) {
      throw DomainError("beta^2 must lie in [0, 1), got " + format_number(b2));
    }
    const SqueezeParam eta(std::atanh(std::sqrt(b2)));
    out.push_back({b2, entropy(0, eta), temperature(eta)});
  }
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("steps must be >= 1");
  if (steps == 1) return {lo};
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = lo + (hi - lo) * i / (steps - 1);
  g.back() = hi;
  return g;
}

std::size_t max_curvature_index(std::span<const ThermoPoint> c) {
  if (c.size() < 3) throw DomainError("curvature needs at least three points");
  std::size_t best = 1;
  double best_val = -1.0;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    const double h1 = c[i].beta_sq - c[i - 1].beta_sq, h2 = c[i + 1].beta_sq - c[i].beta_sq;
    const double d2 = 2.0 *
                      ((c[i + 1].temperature - c[i].temperature) / h2 -
                       (c[i].temperature - c[i - 1].temperature) / h1) /
                      (h1 + h2);
    if (std::abs(d2) > best_val) {
      best_val = std::abs(d2);
      best = i;
    }
  }
  return best;
}

void write_csv(std::span<const ThermoPoint> curve, std::ostream& out) {
  out << "beta_sq,entropy_nats,temperature\n";
  for (const auto& p : curve) {
    out << format_number(p.beta_sq) << ',' << format_number(p.entropy) << ','
        << format_number(p.temperature) << '\n';
  }
}

}  // namespace entosc

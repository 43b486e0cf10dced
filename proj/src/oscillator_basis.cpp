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

#include "entosc/oscillator_basis.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "entosc/errors.hpp"

namespace entosc {
namespace {

void check_index(int n) {
  if (n < 0 || n > kMaxIndex) {
    throw IndexOutOfRange("oscillator index " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxIndex) + "]");
  }
}

// pi^{-1/4}
const double kChi0Norm = std::pow(std::numbers::pi, -0.25);

}  // namespace

double hermite(int n, double x) {
  check_index(n);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chi(int n, double x) {
  check_index(n);
  double prev = kChi0Norm * std::exp(-0.5 * x * x);
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * x * prev;
  for (int k = 1; k < n; ++k) {
    // chi_{k+1} = sqrt(2/(k+1)) x chi_k - sqrt(k/(k+1)) chi_{k-1}
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void chi_table(double x, std::span<double> out) {
  if (out.empty()) return;
  check_index(static_cast<int>(out.size()) - 1);
  out[0] = kChi0Norm * std::exp(-0.5 * x * x);
  if (out.size() == 1) return;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    out[k + 1] = std::sqrt(2.0 / double(k + 1)) * x * out[k] -
                 std::sqrt(double(k) / double(k + 1)) * out[k - 1];
  }
}

double generating_function(double r, double z) { return std::exp(-r * r + 2.0 * r * z); }

namespace {

QuadratureRule build_rule(int order) {
  if (order < 2) throw DomainError("quadrature order must be >= 2");
  const int n = order;
  std::vector<double> x(n), w(n);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses for the largest roots first (Numerical Recipes, gauher).
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(double(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    bool converged = false;
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = kChi0Norm;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged || !std::isfinite(z)) {
      throw NumericFailure("Gauss-Hermite node " + std::to_string(i) + " of order " +
                           std::to_string(n) + " did not converge");
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(x.rbegin(), x.rend());
  rule.weights.assign(w.rbegin(), w.rend());
  for (int i = 1; i < n; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw NumericFailure("Gauss-Hermite nodes of order " + std::to_string(n) +
                           " are not strictly increasing");
    }
  }
  return rule;
}

}  // namespace

const QuadratureRule& quadrature(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, std::make_unique<QuadratureRule>(build_rule(order))).first;
  }
  return *it->second;
}

}  // namespace entosc

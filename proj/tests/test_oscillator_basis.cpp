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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "entosc/errors.hpp"
#include "entosc/oscillator_basis.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace entosc;

TEST(Hermite, LowOrders) {
  EXPECT_EQ(hermite(0, 1.7), 1.0);
  EXPECT_EQ(hermite(1, 0.5), 1.0);
}

TEST(Hermite, FourthOrderMatchesPolynomial) {
  const double x = 1.0;
  EXPECT_NEAR(hermite(4, x), 16 * std::pow(x, 4) - 48 * x * x + 12, 1e-12);
  EXPECT_NEAR(hermite(4, x), double(oracle::hermite_explicit(4, x)), 1e-12);
}

TEST(Hermite, MatchesExplicitSum) {
  for (int n = 0; n <= 20; ++n)
    for (double x : {-2.3, -0.4, 0.0, 0.9, 3.1}) {
      const double ref = double(oracle::hermite_explicit(n, x));
      EXPECT_NEAR(hermite(n, x), ref, 1e-12 * std::max(1.0, std::abs(ref))) << n << " " << x;
    }
}

TEST(Hermite, IndexOutOfRange) {
  EXPECT_THROW(hermite(-1, 0.0), IndexOutOfRange);
  EXPECT_THROW(hermite(kMaxIndex + 1, 0.0), IndexOutOfRange);
  EXPECT_NO_THROW(hermite(kMaxIndex, 0.1));
}

TEST(Hermite, RecurrenceProperty) {
  testing_support::Gen g(11);
  for (int c = 0; c < testing_support::kCases; ++c) {
    const int n = g.integer(1, 49);
    const double x = g.uniform(-5.0, 5.0);
    const double hp = hermite(n + 1, x), h = hermite(n, x), hm = hermite(n - 1, x);
    const double scale = std::max({std::abs(hp), std::abs(2 * x * h), std::abs(2 * n * hm), 1.0});
    EXPECT_LE(std::abs(hp - 2 * x * h + 2 * n * hm) / scale, 1e-9) << n << " " << x;
  }
}

TEST(Chi, GroundAtOrigin) { EXPECT_NEAR(chi(0, 0.0), std::pow(std::numbers::pi, -0.25), 1e-16); }

TEST(Chi, OddAtOrigin) { EXPECT_EQ(chi(1, 0.0), 0.0); }

TEST(Chi, MatchesExactFactorialFormula) {
  EXPECT_NEAR(chi(3, 0.8), double(oracle::chi_direct(3, 0.8L)), 1e-15);
  for (int n = 0; n <= 40; ++n)
    for (double x : {-3.0, -1.1, 0.2, 2.5}) {
      EXPECT_NEAR(chi(n, x), double(oracle::chi_direct(n, x)), 1e-12) << n << " " << x;
    }
}

TEST(Chi, NoOverflowAtHighIndex) {
  for (int n : {170, 200, 256})
    for (double x : {0.0, 1.0, 10.0, 25.0}) {
      const double v = chi(n, x);
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_LE(std::abs(v), 1.086435 * std::pow(std::numbers::pi, -0.25));
    }
}

TEST(Chi, TableMatchesPointwise) {
  std::vector<double> t(60);
  chi_table(1.3, t);
  for (int n = 0; n < 60; ++n) EXPECT_EQ(t[n], chi(n, 1.3));
  std::vector<double> big(kMaxIndex + 2);
  EXPECT_THROW(chi_table(0.0, big), IndexOutOfRange);
}

TEST(Chi, ParityProperty) {
  testing_support::Gen g(12);
  for (int c = 0; c < testing_support::kCases; ++c) {
    const int n = g.integer(0, 60);
    const double x = g.uniform(-6.0, 6.0);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(chi(n, -x), sign * chi(n, x), 1e-15);
  }
}

TEST(GeneratingFunction, Basics) {
  EXPECT_EQ(generating_function(0.0, 2.2), 1.0);
  EXPECT_DOUBLE_EQ(generating_function(0.3, 0.0), std::exp(-0.09));
}

TEST(GeneratingFunction, PartialSumsConverge) {
  const double partial = double(oracle::generating_partial_sum(0.4L, 1.1L, 40));
  EXPECT_NEAR(partial, generating_function(0.4, 1.1), 1e-12);
}

TEST(Quadrature, RuleShape) {
  for (int order : {2, 10, 20, 64, 100}) {
    const QuadratureRule& r = quadrature(order);
    ASSERT_EQ(static_cast<int>(r.nodes.size()), order);
    EXPECT_EQ(r.order, order);
    for (int i = 1; i < order; ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    for (double w : r.weights) EXPECT_GT(w, 0.0);
  }
  EXPECT_THROW(quadrature(1), DomainError);
}

TEST(Quadrature, GaussianMass) {
  for (int order : {20, 40, 64}) {
    EXPECT_NEAR(quadrature(order).integrate_plain([](double x) { return std::exp(-x * x); }),
                std::sqrt(std::numbers::pi), 1e-12);
  }
}

TEST(Quadrature, SecondMoment) {
  EXPECT_NEAR(quadrature(10).integrate([](double x) { return x * x; }), std::sqrt(std::numbers::pi) / 2,
              1e-13);
}

TEST(Quadrature, PolynomialExactness) {
  const QuadratureRule& r = quadrature(12);
  // int x^{2j} e^{-x^2} = Gamma(j + 1/2)
  for (int j = 0; 2 * j <= 2 * 12 - 1; ++j) {
    const double exact = std::tgamma(j + 0.5);
    EXPECT_NEAR(r.integrate([j](double x) { return std::pow(x, 2 * j); }), exact, 1e-12 * exact) << j;
  }
}

TEST(Quadrature, ChiNormsAndOverlaps) {
  const QuadratureRule& r = quadrature(64);
  EXPECT_NEAR(r.integrate_plain([](double x) { return chi(2, x) * chi(2, x); }), 1.0, 1e-12);
  EXPECT_NEAR(r.integrate_plain([](double x) { return chi(2, x) * chi(4, x); }), 0.0, 1e-12);
}

TEST(Quadrature, OrthonormalityInvariant) {
  const QuadratureRule& r = quadrature(40);
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= 12; ++m) {
      const double v = r.integrate_plain([&](double x) { return chi(n, x) * chi(m, x); });
      EXPECT_NEAR(v, n == m ? 1.0 : 0.0, 1e-10) << n << " " << m;
    }
}

TEST(Quadrature, CachedReferenceIsStable) { EXPECT_EQ(&quadrature(33), &quadrature(33)); }

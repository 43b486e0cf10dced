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

#include <gtest/gtest.h>

#include "entosc/covariant_inner.hpp"
#include "entosc/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace entosc;

TEST(BoostedWavefunction, MatchesSqueezedState) {
  testing_support::Gen g(61);
  for (int c = 0; c < testing_support::kCases; ++c) {
    const int n = g.integer(0, 6);
    const double eta = g.uniform(-1.5, 1.5), z = g.uniform(-3, 3), t = g.uniform(-3, 3);
    EXPECT_DOUBLE_EQ(boosted_wavefunction({n, eta}, z, t), squeezed_wavefunction(n, SqueezeParam(eta), z, t));
  }
}

TEST(InnerProduct, Examples) {
  const InnerProduct a = inner_product(0, SqueezeParam(0.0), 0, SqueezeParam(std::log(2.0)));
  EXPECT_NEAR(a.quadrature, 0.8, 1e-10);
  EXPECT_NEAR(a.closed_form, 0.8, 1e-15);
  const InnerProduct b = inner_product(1, SqueezeParam(0.3), 1, SqueezeParam(0.3));
  EXPECT_NEAR(b.quadrature, 1.0, 1e-10);
  const InnerProduct c = inner_product(1, SqueezeParam(0.0), 2, SqueezeParam(0.5));
  EXPECT_EQ(c.closed_form, 0.0);
  EXPECT_NEAR(c.quadrature, 0.0, 1e-10);
}

TEST(InnerProduct, DirectTrapezoidOracle) {
  const double e1 = 0.2, e2 = 0.9;
  const double ref = oracle::trapezoid2(
      [&](double z, double t) { return boosted_wavefunction({2, e1}, z, t) * boosted_wavefunction({2, e2}, z, t); }, 14.0,
      0.05);
  const InnerProduct ip = inner_product(2, SqueezeParam(e1), 2, SqueezeParam(e2));
  EXPECT_NEAR(ip.quadrature, ref, 1e-10);
  EXPECT_NEAR(ip.closed_form, std::pow(std::cosh(0.7), -3), 1e-15);
}

TEST(InnerProduct, FrameCovariance) {
  testing_support::Gen g(62);
  for (int c = 0; c < 40; ++c) {
    const int n = g.integer(0, 5);
    const double e1 = g.uniform(-1.0, 1.0), e2 = g.uniform(-1.0, 1.0), shift = g.uniform(-0.8, 0.8);
    const double a = inner_product(n, SqueezeParam(e1), n, SqueezeParam(e2)).quadrature;
    const double b = inner_product(n, SqueezeParam(e1 + shift), n, SqueezeParam(e2 + shift)).quadrature;
    EXPECT_NEAR(a, b, 1e-10);
  }
}

TEST(InnerProduct, Orthogonality) {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      const InnerProduct ip = inner_product(n, SqueezeParam(0.4), m, SqueezeParam(-0.3));
      EXPECT_LE(ip.deviation, 1e-10) << n << " " << m;
      if (n != m) {
        EXPECT_NEAR(ip.quadrature, 0.0, 1e-10);
      }
    }
}

TEST(InnerProduct, ContractionProperty) {
  testing_support::Gen g(63);
  for (int c = 0; c < 60; ++c) {
    const int n = g.integer(0, kMaxInnerProductIndex);
    const double beta = g.uniform(-0.9, 0.9);
    const InnerProduct ip = inner_product(n, SqueezeParam(0.0), n, SqueezeParam(std::atanh(beta)));
    EXPECT_NEAR(ip.closed_form, contraction_factor(n, beta), 1e-13);
    EXPECT_LE(ip.deviation, 1e-9);
  }
}

TEST(InnerProduct, Budget) {
  EXPECT_THROW(inner_product(13, SqueezeParam(0.0), 0, SqueezeParam(0.0)), DomainError);
  EXPECT_THROW(inner_product(0, SqueezeParam(0.0), -1, SqueezeParam(0.0)), DomainError);
}

TEST(ContractionFactor, Values) {
  EXPECT_EQ(contraction_factor(0, 0.0), 1.0);
  EXPECT_NEAR(contraction_factor(0, 0.6), 0.8, 1e-15);
  EXPECT_NEAR(contraction_factor(2, 0.6), 0.512, 1e-15);
  EXPECT_THROW(contraction_factor(0, 1.0), DomainError);
  EXPECT_THROW(contraction_factor(0, -1.2), DomainError);
}

TEST(BoostedNorm, IsOne) {
  EXPECT_NEAR(boosted_norm({2, 0.8}), 1.0, 1e-12);
  testing_support::Gen g(64);
  for (int c = 0; c < 30; ++c)
    EXPECT_NEAR(boosted_norm({g.integer(0, 12), g.uniform(-2, 2)}), 1.0, 1e-11);
}

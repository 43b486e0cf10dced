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

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "entosc/errors.hpp"
#include "entosc/planar_transforms.hpp"
#include "support.hpp"

using namespace entosc;

namespace {

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Rotation, Basics) {
  EXPECT_EQ(max_abs(rotation(0.0) - Mat2::Identity()), 0.0);
  Mat2 quarter;
  quarter << 0, -1, 1, 0;
  EXPECT_LT(max_abs(rotation(std::numbers::pi / 2) - quarter), 1e-16);
  EXPECT_LT(max_abs(rotation(0.3) * rotation(0.5) - rotation(0.8)), 1e-14);
}

TEST(SqueezeAxis, Basics) {
  EXPECT_EQ(max_abs(squeeze_axis(0.0) - Mat2::Identity()), 0.0);
  const Mat2 s = squeeze_axis(std::log(2.0));
  EXPECT_NEAR(s(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(s(1, 1), 0.5, 1e-15);
  EXPECT_EQ(s(0, 1), 0.0);
  EXPECT_NEAR(squeeze_axis(1.3).determinant(), 1.0, 1e-15);
}

TEST(Boost, Basics) {
  EXPECT_EQ(max_abs(boost(0.0) - Mat2::Identity()), 0.0);
  const double eta = 0.7;
  Mat2 d;
  d << std::exp(-eta), 0, 0, std::exp(eta);
  EXPECT_LT(max_abs(rotation(-std::numbers::pi / 4) * boost(eta) * rotation(std::numbers::pi / 4) - d), 1e-13);
  EXPECT_LT(max_abs(boost(0.2) * boost(0.9) - boost(1.1)), 1e-13);
}

TEST(Shear, GroupLawAndNilpotency) {
  EXPECT_EQ(max_abs(shear(0.0) - Mat2::Identity()), 0.0);
  EXPECT_EQ(max_abs(shear(0.4) * shear(0.1) - shear(0.5)), 0.0);
  const Mat2 n = shear(0.6) - Mat2::Identity();
  EXPECT_EQ(max_abs(n * n), 0.0);
}

TEST(Bargmann, IdentityShear) {
  const BargmannFactors f = bargmann_decompose(0.0);
  EXPECT_EQ(f.eta, 0.0);
  EXPECT_NEAR(f.theta, std::numbers::pi / 4, 1e-16);
  EXPECT_NEAR(f.theta_prime, 0.0, 1e-16);
}

TEST(Bargmann, UnitShear) {
  const BargmannFactors f = bargmann_decompose(1.0);
  EXPECT_NEAR(f.eta, std::asinh(1.0), 1e-15);
  EXPECT_NEAR(f.theta, std::numbers::pi / 8, 1e-15);
  // sinh eta = cosh eta cos 2 theta
  EXPECT_NEAR(std::sinh(f.eta), std::cosh(f.eta) * std::cos(2 * f.theta), 1e-15);
  EXPECT_LT(max_abs(f.reconstruct() - shear(1.0)), 1e-12);
}

TEST(Bargmann, LowerLeftVanishes) {
  EXPECT_NEAR(bargmann_decompose(2.5).reconstruct()(1, 0), 0.0, 1e-13);
}

TEST(Bargmann, ReconstructionInvariant) {
  for (double a : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const BargmannFactors f = bargmann_decompose(a);
    EXPECT_LT(max_abs(f.reconstruct() - shear(a)), 1e-11) << a;
    EXPECT_GT(f.theta, 0.0);
    EXPECT_LE(f.theta, std::numbers::pi / 4);
    EXPECT_NEAR(std::cos(2 * f.theta), std::tanh(f.eta), 1e-14);
  }
}

TEST(Bargmann, RejectsNegative) { EXPECT_THROW(bargmann_decompose(-0.1), DomainError); }

TEST(Bargmann, NegativeShearByConjugation) {
  // shear(-a) = R(pi/2) shear(a)^T R(-pi/2); the transpose of a Bargmann product
  // is again one, so negative shears reduce to positive ones at the call site.
  const double a = 0.7;
  const Mat2 r = rotation(std::numbers::pi / 2);
  const Mat2 rebuilt = r * bargmann_decompose(a).reconstruct().transpose() * r.transpose();
  EXPECT_LT(max_abs(rebuilt - shear(-a)), 1e-12);
}

TEST(SqueezedRotation, MatchesClosedForm) {
  for (double a : {0.2, 1.0})
    for (double lambda : {2.0, 4.0, 8.0}) {
      const double omega = wigner_decompose_angle(a, lambda);
      EXPECT_LT(max_abs(squeezed_rotation(lambda, omega) - wigner_decompose(a, lambda)), 1e-11);
    }
}

TEST(WignerDecompose, ZeroShear) {
  EXPECT_LT(max_abs(wigner_decompose(0.0, 3.0) - Mat2::Identity()), 1e-16);
}

TEST(WignerDecompose, LargeLambda) {
  const Mat2 m = wigner_decompose(0.5, 6.0);
  EXPECT_NEAR(m(1, 0), -2 * 0.5 * std::exp(-12.0), 1e-20);
  EXPECT_LT(max_abs(m - shear(0.5)), 1e-5);
}

TEST(WignerDecompose, Unimodular) { EXPECT_NEAR(wigner_decompose(0.5, 2.0).determinant(), 1.0, 1e-13); }

TEST(WignerDecompose, OutOfRange) {
  EXPECT_THROW(wigner_decompose(1.0, 0.0), DomainError);
  EXPECT_THROW(wigner_decompose_angle(3.0, 1.0), DomainError);
}

TEST(WignerDecompose, SingularLimitRate) {
  for (double a : {0.2, 1.0})
    for (double lambda : {2.0, 4.0, 8.0}) {
      const double omega = std::asin(2 * a * std::exp(-lambda));
      const double bound = 2 * a * std::exp(-2 * lambda) + (1 - std::cos(omega));
      EXPECT_LE(max_abs(wigner_decompose(a, lambda) - shear(a)), bound * (1 + 1e-12)) << a << " " << lambda;
    }
}

TEST(RotatedSqueeze, SmallShearLimit) {
  const RotatedSqueeze r = shear_as_rotated_squeeze(1e-9);
  EXPECT_NEAR(r.theta, std::numbers::pi / 4, 1e-8);
  EXPECT_NEAR(r.eta, 0.0, 1e-8);
}

TEST(RotatedSqueeze, UnitShear) {
  const RotatedSqueeze r = shear_as_rotated_squeeze(1.0);
  EXPECT_NEAR(std::exp(2 * r.eta), 3 + 2 * std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(std::tan(2 * r.theta), 1.0, 1e-14);
  // cross-check by diagonalising the sheared form
  const QuadraticForm2 q = transform_quadratic_form(QuadraticForm2{}, shear(1.0));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q.Q);
  EXPECT_NEAR(es.eigenvalues()(1), 3 + 2 * std::sqrt(2.0), 1e-12);
}

TEST(RotatedSqueeze, ProductIdentity) {
  const double a = 0.8;
  const double up = 1 + 2 * a * a + 2 * a * std::sqrt(a * a + 1);
  const double down = 1 + 2 * a * a - 2 * a * std::sqrt(a * a + 1);
  EXPECT_NEAR(up * down, 1.0, 1e-13);
  EXPECT_NEAR(std::exp(-2 * shear_as_rotated_squeeze(a).eta), down, 1e-13);
}

TEST(RotatedSqueeze, FormMatchesShearedGaussian) {
  for (double a : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const QuadraticForm2 sheared = transform_quadratic_form(QuadraticForm2{}, shear(a));
    EXPECT_LT(max_abs(shear_as_rotated_squeeze(a).quadratic_form().Q - sheared.Q), 1e-12 * (1 + 4 * a * a))
        << a;
  }
}

TEST(RotatedSqueeze, RejectsNonPositive) {
  EXPECT_THROW(shear_as_rotated_squeeze(0.0), DomainError);
  EXPECT_THROW(shear_as_rotated_squeeze(-1.0), DomainError);
}

TEST(QuadraticForm, Identity) {
  EXPECT_EQ(max_abs(transform_quadratic_form(QuadraticForm2{}, Mat2::Identity()).Q - Mat2::Identity()), 0.0);
}

TEST(QuadraticForm, ShearedGaussian) {
  const double a = 0.35;
  const QuadraticForm2 q = transform_quadratic_form(QuadraticForm2{}, shear(a));
  Mat2 expected;
  expected << 1, -2 * a, -2 * a, 1 + 4 * a * a;
  EXPECT_LT(max_abs(q.Q - expected), 1e-15);
  const double x = 0.3, y = -1.2;
  EXPECT_NEAR(q.exponent(x, y), -0.5 * ((x - 2 * a * y) * (x - 2 * a * y) + y * y), 1e-15);
}

TEST(QuadraticForm, SqueezedGaussianIsInverseBoost) {
  // The squeezed Gaussian exp{-1/4[e^{-2eta}(x+y)^2 + e^{2eta}(x-y)^2]} is the
  // ground state pushed forward by boost(-eta), i.e. evaluated at boost(eta) v.
  const double eta = 0.6;
  const QuadraticForm2 q = transform_quadratic_form(QuadraticForm2{}, boost(-eta));
  for (double x : {-1.0, 0.4})
    for (double y : {-0.7, 1.5}) {
      const double ref =
          -0.25 * (std::exp(-2 * eta) * (x + y) * (x + y) + std::exp(2 * eta) * (x - y) * (x - y));
      EXPECT_NEAR(q.exponent(x, y), ref, 1e-13);
    }
  // boost(eta) itself gives the mirror image, with the roles of x+y and x-y swapped.
  const QuadraticForm2 mirror = transform_quadratic_form(QuadraticForm2{}, boost(eta));
  EXPECT_NEAR(mirror.exponent(1.0, 1.0), -0.25 * std::exp(2 * eta) * 4, 1e-13);
}

TEST(QuadraticForm, Singular) {
  Mat2 m;
  m << 1, 2, 2, 4;
  EXPECT_THROW(transform_quadratic_form(QuadraticForm2{}, m), DomainError);
}

TEST(QuadraticForm, DeterminantOneProperty) {
  testing_support::Gen g(21);
  for (int c = 0; c < testing_support::kCases; ++c) {
    const Mat2 m = rotation(g.uniform(-3, 3)) * boost(g.uniform(-2, 2)) * shear(g.uniform(-2, 2)) *
                   squeeze_axis(g.uniform(-1, 1));
    EXPECT_NEAR(m.determinant(), 1.0, 1e-12);
    const QuadraticForm2 q = transform_quadratic_form(QuadraticForm2{}, m);
    EXPECT_NEAR(q.Q.determinant(), 1.0, 1e-9 * q.Q.cwiseAbs().maxCoeff() * q.Q.cwiseAbs().maxCoeff());
    EXPECT_EQ(q.Q(0, 1), q.Q(1, 0));
  }
}

TEST(QuadraticForm, EigenvaluesMatchRotatedSqueeze) {
  for (double a : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const QuadraticForm2 q = transform_quadratic_form(QuadraticForm2{}, shear(a));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q.Q);
    const double eta = shear_as_rotated_squeeze(a).eta;
    EXPECT_NEAR(es.eigenvalues()(0), std::exp(-2 * eta), 1e-11);
    EXPECT_NEAR(es.eigenvalues()(1), std::exp(2 * eta), 1e-11 * std::exp(2 * eta));
  }
}

TEST(Transforms, UnimodularProperty) {
  testing_support::Gen g(22);
  for (int c = 0; c < testing_support::kCases; ++c) {
    const double t = g.uniform(-5, 5);
    EXPECT_NEAR(rotation(t).determinant(), 1.0, 1e-12);
    EXPECT_NEAR(boost(g.uniform(-3, 3)).determinant(), 1.0, 1e-12);
    EXPECT_NEAR(squeeze_axis(g.uniform(-3, 3)).determinant(), 1.0, 1e-12);
    EXPECT_EQ(shear(t).determinant(), 1.0);
    EXPECT_NEAR(bargmann_decompose(g.uniform(0, 5)).reconstruct().determinant(), 1.0, 1e-12);
  }
}

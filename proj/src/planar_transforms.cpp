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

#include "entosc/planar_transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entosc/errors.hpp"

namespace entosc {

Mat2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

Mat2 squeeze_axis(double eta) {
  Mat2 m;
  m << std::exp(eta), 0.0, 0.0, std::exp(-eta);
  return m;
}

Mat2 boost(double eta) {
  const double c = std::cosh(eta), s = std::sinh(eta);
  Mat2 m;
  m << c, -s, -s, c;
  return m;
}

Mat2 shear(double alpha) {
  Mat2 m;
  m << 1.0, 2.0 * alpha, 0.0, 1.0;
  return m;
}

Mat2 BargmannFactors::reconstruct() const {
  Mat2 b;
  b << std::cosh(eta), std::sinh(eta), std::sinh(eta), std::cosh(eta);
  return rotation(theta_prime) * b * rotation(theta_prime);
}

BargmannFactors bargmann_decompose(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("bargmann_decompose needs a finite alpha >= 0, got " + std::to_string(alpha));
  }
  BargmannFactors f;
  f.eta = std::asinh(alpha);
  // cos 2theta = tanh eta; equivalently tan 2theta = 1/alpha, which keeps
  // full precision as alpha -> 0.
  f.theta = 0.5 * std::atan2(1.0, alpha);
  f.theta_prime = f.theta - std::numbers::pi / 4.0;
  return f;
}

Mat2 squeezed_rotation(double lambda, double omega) {
  Mat2 left, right, rot;
  left << std::exp(lambda / 2), 0.0, 0.0, std::exp(-lambda / 2);
  right << std::exp(-lambda / 2), 0.0, 0.0, std::exp(lambda / 2);
  rot << std::cos(omega), std::sin(omega), -std::sin(omega), std::cos(omega);
  return left * rot * right;
}

double wigner_decompose_angle(double alpha, double lambda) {
  const double s = 2.0 * alpha * std::exp(-lambda);
  if (!(std::abs(s) <= 1.0)) {
    throw DomainError("wigner_decompose: 2 alpha e^-lambda = " + std::to_string(s) +
                      " is outside [-1, 1]");
  }
  return std::asin(s);
}

Mat2 wigner_decompose(double alpha, double lambda) {
  const double omega = wigner_decompose_angle(alpha, lambda);
  Mat2 m;
  m << std::cos(omega), 2.0 * alpha, -2.0 * alpha * std::exp(-2.0 * lambda), std::cos(omega);
  return m;
}

QuadraticForm2 RotatedSqueeze::quadratic_form() const {
  const Eigen::Vector2d u(std::cos(theta), std::sin(theta));
  const Eigen::Vector2d w(std::sin(theta), -std::cos(theta));
  QuadraticForm2 f;
  f.Q = std::exp(-2.0 * eta) * u * u.transpose() + std::exp(2.0 * eta) * w * w.transpose();
  return f;
}

RotatedSqueeze shear_as_rotated_squeeze(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("shear_as_rotated_squeeze needs alpha > 0, got " + std::to_string(alpha));
  }
  RotatedSqueeze r;
  r.theta = 0.5 * std::atan2(1.0, alpha);
  // e^{2 eta} = 1 + 2a^2 + 2a sqrt(a^2+1) = (a + sqrt(a^2+1))^2
  r.eta = std::asinh(alpha);
  return r;
}

QuadraticForm2 transform_quadratic_form(const QuadraticForm2& form, const Mat2& M) {
  const double det = M.determinant();
  if (!(std::abs(det) > 1e-14 * M.cwiseAbs().maxCoeff() * M.cwiseAbs().maxCoeff())) {
    throw DomainError("transform_quadratic_form: singular transformation");
  }
  const Mat2 inv = M.inverse();
  QuadraticForm2 out;
  out.Q = inv.transpose() * form.Q * inv;
  out.Q = 0.5 * (out.Q + out.Q.transpose()).eval();
  return out;
}

}  // namespace entosc

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

#include <Eigen/Dense>

namespace entosc {

/// Element of SL(2,R) acting on column vectors (x, y).
using Mat2 = Eigen::Matrix2d;

/// Centered Gaussian exp(-v^T Q v / 2) in the plane. Q is symmetric
/// positive definite.
struct QuadraticForm2 {
  Eigen::Matrix2d Q = Eigen::Matrix2d::Identity();

  double exponent(double x, double y) const {
    const Eigen::Vector2d v(x, y);
    return -0.5 * v.dot(Q * v);
  }
};

Mat2 rotation(double theta);

/// diag(e^eta, e^-eta).
Mat2 squeeze_axis(double eta);

/// [[cosh, -sinh], [-sinh, cosh]]: the squeeze along the 45-degree axes,
/// which is the Lorentz boost once (x, y) are read as (z, t).
Mat2 boost(double eta);

/// [[1, 2 alpha], [0, 1]]. The factor 2 is the convention used throughout.
Mat2 shear(double alpha);

/// Factors of shear(alpha) = R(theta') B(eta) R(theta'), with
/// B = [[cosh, sinh], [sinh, cosh]] and theta' = theta - pi/4.
struct BargmannFactors {
  double theta = 0.0;        // in (0, pi/4]; cos(2 theta) = tanh(eta)
  double theta_prime = 0.0;  // theta - pi/4
  double eta = 0.0;          // asinh(alpha)

  Mat2 reconstruct() const;
};

/// Requires alpha >= 0. Negative shears are handled by conjugating with
/// rotation(pi/2) at the call site.
BargmannFactors bargmann_decompose(double alpha);

/// The squeezed rotation diag(e^{l/2}, e^{-l/2}) R(-omega) diag(e^{-l/2}, e^{l/2}),
/// evaluated as a product of the three factors.
Mat2 squeezed_rotation(double lambda, double omega);

/// [[cos w, 2 alpha], [-2 alpha e^{-2 lambda}, cos w]] with sin w = 2 alpha e^{-lambda}.
/// Tends to shear(alpha) as lambda grows. Throws DomainError if |2 alpha e^{-lambda}| > 1.
Mat2 wigner_decompose(double alpha, double lambda);

/// The rotation angle omega used by wigner_decompose.
double wigner_decompose_angle(double alpha, double lambda);

/// Rotated squeeze whose Gaussian equals the sheared Gaussian:
/// tan(2 theta) = 1/alpha and e^{2 eta} = 1 + 2 alpha^2 + 2 alpha sqrt(alpha^2 + 1).
struct RotatedSqueeze {
  double theta = 0.0;
  double eta = 0.0;

  /// Q of exp(-1/2 [e^{-2eta}(x cos + y sin)^2 + e^{2eta}(x sin - y cos)^2]).
  QuadraticForm2 quadratic_form() const;
};

/// Requires alpha > 0.
RotatedSqueeze shear_as_rotated_squeeze(double alpha);

/// Form of g(v) = f(M^{-1} v) when f has form Q: Q' = M^{-T} Q M^{-1}.
/// Throws DomainError for a singular M.
QuadraticForm2 transform_quadratic_form(const QuadraticForm2& form, const Mat2& M);

}  // namespace entosc

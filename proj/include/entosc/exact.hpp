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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entosc {

/// Reduced fraction over int64. Only used for generator matrices whose
/// entries are small multiples of 1/2 and i/2, so overflow is not a concern.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational with zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  double to_double() const { return double(num_) / double(den_); }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  constexpr Rational operator-() const { return {-num_, den_}; }
  friend constexpr bool operator==(Rational a, Rational b) = default;

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Gaussian rational re + i im.
struct ExactComplex {
  Rational re;
  Rational im;

  static constexpr ExactComplex i() { return {Rational(0), Rational(1)}; }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  constexpr bool is_zero() const { return re.num() == 0 && im.num() == 0; }

  friend constexpr ExactComplex operator+(ExactComplex a, ExactComplex b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr ExactComplex operator-(ExactComplex a, ExactComplex b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr ExactComplex operator*(ExactComplex a, ExactComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(ExactComplex a, ExactComplex b) = default;
};

/// Dense N x N matrix over ExactComplex, row-major.
template <std::size_t N>
struct ExactMatrix {
  std::array<ExactComplex, N * N> a{};

  static constexpr std::size_t size() { return N; }
  constexpr ExactComplex& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  constexpr const ExactComplex& operator()(std::size_t r, std::size_t c) const {
    return a[r * N + c];
  }

  friend constexpr ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.a[k] = x.a[k] + y.a[k];
    return out;
  }
  friend constexpr ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.a[k] = x.a[k] - y.a[k];
    return out;
  }
  friend constexpr ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        if (x(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) = out(r, c) + x(r, k) * y(k, c);
      }
    return out;
  }
  friend constexpr ExactMatrix operator*(ExactComplex s, const ExactMatrix& x) {
    ExactMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.a[k] = s * x.a[k];
    return out;
  }
  friend constexpr bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  constexpr ExactMatrix transpose() const {
    ExactMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = (*this)(r, c);
    return out;
  }
  constexpr bool is_zero() const {
    for (const auto& e : a)
      if (!e.is_zero()) return false;
    return true;
  }
  /// Largest |entry| as a double; zero iff the matrix is exactly zero.
  double max_abs() const {
    double m = 0.0;
    for (const auto& e : a) m = std::max(m, std::abs(e.to_complex()));
    return m;
  }
};

}  // namespace entosc

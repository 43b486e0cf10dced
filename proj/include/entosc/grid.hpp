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

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "entosc/format.hpp"

namespace entosc {

/// Uniform nx x ny grid; node (i, j) sits at (x0 + i hx, y0 + j hy).
struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 1.0;
  double hy = 1.0;
  int nx = 1;
  int ny = 1;

  double x(int i) const { return x0 + i * hx; }
  double y(int j) const { return y0 + j * hy; }
  std::size_t size() const { return std::size_t(nx) * std::size_t(ny); }

  /// [-half_width, half_width]^2 with spacing h. half_width / h is rounded to
  /// the nearest integer so the origin is always a node.
  static GridSpec square(double half_width, double h);

  /// Throws DomainError unless nx, ny >= 1, hx, hy > 0 and everything is finite.
  void validate() const;
};

/// Sampled function on a GridSpec. values[i * ny + j] holds node (i, j).
template <class T>
struct BasicGrid {
  GridSpec spec;
  std::vector<T> values;
  std::string x_label = "x";
  std::string y_label = "y";

  BasicGrid() = default;
  explicit BasicGrid(const GridSpec& s) : spec(s), values(s.size()) {}

  T& at(int i, int j) { return values[std::size_t(i) * spec.ny + j]; }
  const T& at(int i, int j) const { return values[std::size_t(i) * spec.ny + j]; }
};

using GridFunction2D = BasicGrid<double>;
using ComplexGrid2D = BasicGrid<std::complex<double>>;

template <class F>
GridFunction2D sample(const GridSpec& spec, F&& f) {
  GridFunction2D g(spec);
  for (int i = 0; i < spec.nx; ++i)
    for (int j = 0; j < spec.ny; ++j) g.at(i, j) = f(spec.x(i), spec.y(j));
  return g;
}

template <class F>
ComplexGrid2D sample_complex(const GridSpec& spec, F&& f) {
  ComplexGrid2D g(spec);
  for (int i = 0; i < spec.nx; ++i)
    for (int j = 0; j < spec.ny; ++j) g.at(i, j) = f(spec.x(i), spec.y(j));
  return g;
}

ComplexGrid2D to_complex(const GridFunction2D& g);

/// Header "<x_label>,<y_label>,value" then one row per node, x outer.
void write_csv(const GridFunction2D& g, std::ostream& out);

}  // namespace entosc

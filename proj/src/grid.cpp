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

#include "entosc/grid.hpp"

#include <cmath>
#include <ostream>

#include "entosc/errors.hpp"

namespace entosc {

GridSpec GridSpec::square(double half_width, double h) {
  if (!(h > 0.0) || !(half_width >= 0.0) || !std::isfinite(half_width)) {
    throw DomainError("square grid needs h > 0 and a finite half-width >= 0");
  }
  const int half = static_cast<int>(std::lround(half_width / h));
  GridSpec s;
  s.hx = s.hy = h;
  s.nx = s.ny = 2 * half + 1;
  s.x0 = s.y0 = -half * h;
  return s;
}

void GridSpec::validate() const {
  if (nx < 1 || ny < 1) throw DomainError("grid needs at least one node per axis");
  if (!(hx > 0.0) || !(hy > 0.0)) throw DomainError("grid spacing must be positive");
  if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(hx) || !std::isfinite(hy)) {
    throw DomainError("grid metadata must be finite");
  }
}

ComplexGrid2D to_complex(const GridFunction2D& g) {
  ComplexGrid2D c(g.spec);
  for (std::size_t k = 0; k < g.values.size(); ++k) c.values[k] = g.values[k];
  c.x_label = g.x_label;
  c.y_label = g.y_label;
  return c;
}

void write_csv(const GridFunction2D& g, std::ostream& out) {
  out << g.x_label << ',' << g.y_label << ",value\n";
  for (int i = 0; i < g.spec.nx; ++i)
    for (int j = 0; j < g.spec.ny; ++j) {
      out << format_number(g.spec.x(i)) << ',' << format_number(g.spec.y(j)) << ','
          << format_number(g.at(i, j)) << '\n';
    }
}

}  // namespace entosc

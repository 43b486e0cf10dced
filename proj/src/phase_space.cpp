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

#include "entosc/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "entosc/dirac_algebra.hpp"
#include "entosc/entangled_series.hpp"
#include "entosc/errors.hpp"
#include "entosc/kernels.hpp"
#include "entosc/planar_transforms.hpp"

namespace entosc {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void check_window(const WignerOptions& opt) {
  if (!(opt.half_width >= opt.min_reach)) {
    throw DomainError("Wigner window half-width " + format_number(opt.half_width) +
                      " is below the minimum reach " + format_number(opt.min_reach));
  }
}

double real_part(std::complex<double> w, const WignerOptions& opt) {
  if (std::abs(w.imag()) > opt.imag_tol) {
    throw NumericFailure("Wigner transform has imaginary part " + format_number(w.imag()));
  }
  return w.real();
}

// Index of the node at coordinate c, or -1 if c is not a node.
int node_index(double c, double origin, double h, int count) {
  const double f = (c - origin) / h;
  const long i = std::lround(f);
  if (std::abs(f - double(i)) > 1e-6 || i < 0 || i >= count) return -1;
  return static_cast<int>(i);
}

}  // namespace

double wigner_transform(const Wavefunction& psi, const PhasePoint& at, const WignerOptions& opt) {
  check_window(opt);
  if (!(opt.spacing > 0.0)) throw DomainError("Wigner spacing must be positive");
  const int r = static_cast<int>(std::lround(opt.half_width / opt.spacing));
  const double h = opt.spacing;
  std::complex<double> sum = 0.0;
  for (int a = -r; a <= r; ++a) {
    const double wa = (a == -r || a == r) ? 0.5 : 1.0;
    std::complex<double> row = 0.0;
    for (int b = -r; b <= r; ++b) {
      const double wb = (b == -r || b == r) ? 0.5 : 1.0;
      const double xs = a * h, ys = b * h;
      row += wb * std::polar(1.0, -2.0 * at.q * ys) * std::conj(psi(at.x + xs, at.y + ys)) *
             psi(at.x - xs, at.y - ys);
    }
    sum += wa * std::polar(1.0, -2.0 * at.p * a * h) * row;
  }
  return real_part(sum * (h * h / kPi2), opt);
}

std::vector<double> wigner_transform(const ComplexGrid2D& psi, std::span<const PhasePoint> at,
                                     const WignerOptions& opt) {
  check_window(opt);
  const GridSpec& g = psi.spec;
  g.validate();
  const int rx = static_cast<int>(std::lround(opt.half_width / g.hx));
  const int ry = static_cast<int>(std::lround(opt.half_width / g.hy));
  std::vector<kernels::WignerSite> sites;
  sites.reserve(at.size());
  for (const PhasePoint& pt : at) {
    const int i = node_index(pt.x, g.x0, g.hx, g.nx);
    const int j = node_index(pt.y, g.y0, g.hy, g.ny);
    if (i < 0 || j < 0) {
      throw DomainError("Wigner point (" + format_number(pt.x) + ", " + format_number(pt.y) +
                        ") is not a grid node");
    }
    if (i - rx < 0 || i + rx >= g.nx || j - ry < 0 || j + ry >= g.ny) {
      throw DomainError("grid does not extend " + format_number(opt.half_width) +
                        " past Wigner point (" + format_number(pt.x) + ", " + format_number(pt.y) + ")");
    }
    sites.push_back({i, j, pt.p, pt.q});
  }
  const auto w = kernels::wigner_omp(psi, sites, rx, ry);
  std::vector<double> out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = real_part(w[k], opt);
  return out;
}

double wigner_transform(const ComplexGrid2D& psi, const PhasePoint& at, const WignerOptions& opt) {
  return wigner_transform(psi, std::span<const PhasePoint>(&at, 1), opt).front();
}

double wigner_ground_closed(const PhasePoint& v) {
  return std::exp(-(v.x * v.x + v.p * v.p + v.y * v.y + v.q * v.q)) / kPi2;
}

double ground_wavefunction(double x, double y) { return chi(0, x) * chi(0, y); }

std::string_view name(Flow f) {
  switch (f) {
    case Flow::Q3: return "Q3";
    case Flow::K3: return "K3";
    case Flow::Shear: return "shear";
  }
  return "?";
}

std::optional<Flow> parse_flow(std::string_view s) {
  for (Flow f : {Flow::Q3, Flow::K3, Flow::Shear})
    if (name(f) == s) return f;
  return std::nullopt;
}

Eigen::Matrix4d flow_matrix(Flow f, double eta) {
  const auto g = sp4_generators();
  switch (f) {
    case Flow::Q3: return sp4_flow(g[static_cast<int>(Generator::Q3)], eta);
    case Flow::K3: return sp4_flow(g[static_cast<int>(Generator::K3)], eta);
    case Flow::Shear: return sp4_flow(shear_flow_generator(), eta);
  }
  throw DomainError("unknown flow");
}

ComplexGrid2D flow_state(Flow f, double eta, const GridSpec& grid) {
  switch (f) {
    case Flow::Q3: {
      const Mat2 m = boost(eta);
      return sample_complex(grid, [&](double x, double y) {
        const Eigen::Vector2d w = m * Eigen::Vector2d(x, y);
        return std::complex<double>(ground_wavefunction(w.x(), w.y()));
      });
    }
    case Flow::Shear: {
      const Mat2 m = shear(eta).inverse();
      return sample_complex(grid, [&](double x, double y) {
        const Eigen::Vector2d w = m * Eigen::Vector2d(x, y);
        return std::complex<double>(ground_wavefunction(w.x(), w.y()));
      });
    }
    case Flow::K3: {
      const SchmidtSeries s = pointwise_series(0, SqueezeParam(eta), 1e-14);
      return kernels::series_grid_omp(s, grid, std::complex<double>(0.0, 1.0));
    }
  }
  throw DomainError("unknown flow");
}

FlowCheck flow_covariance_check(Flow f, double eta, std::span<const PhasePoint> points,
                                const WignerOptions& opt) {
  FlowCheck out;
  out.flow = flow_matrix(f, eta);
  double reach = 0.0;
  for (const auto& p : points) reach = std::max({reach, std::abs(p.x), std::abs(p.y)});
  const GridSpec grid = GridSpec::square(reach + opt.half_width + opt.spacing, opt.spacing);
  const ComplexGrid2D psi = flow_state(f, eta, grid);
  out.numeric = wigner_transform(psi, points, opt);

  const Eigen::Matrix4d inv = out.flow.inverse();
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Eigen::Vector4d v(points[k].x, points[k].y, points[k].p, points[k].q);
    const Eigen::Vector4d w = inv * v;
    out.expected.push_back(wigner_ground_closed({w[0], w[1], w[2], w[3]}));
    out.max_deviation = std::max(out.max_deviation, std::abs(out.numeric[k] - out.expected[k]));
  }
  return out;
}

std::vector<PhasePoint> sample_cloud(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> lattice(-40, 40);  // multiples of 0.05 in [-2, 2]
  std::vector<PhasePoint> pts(count);
  for (auto& p : pts) {
    p.x = 0.05 * lattice(rng);
    p.y = 0.05 * lattice(rng);
    p.p = 0.05 * lattice(rng);
    p.q = 0.05 * lattice(rng);
  }
  return pts;
}

}  // namespace entosc

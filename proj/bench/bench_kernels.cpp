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

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "entosc/entangled_series.hpp"
#include "entosc/kernels.hpp"
#include "entosc/phase_space.hpp"

using namespace entosc;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const char* label, double serial, double omp) {
  std::printf("%-28s serial %9.4f s   omp %9.4f s   speedup %5.2fx\n", label, serial, omp,
              serial / omp);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  const SchmidtSeries s = pointwise_series(0, SqueezeParam(1.2), 1e-10);
  const GridSpec g = GridSpec::square(4.0, 0.05);
  report("series grid (161^2, K=130)", seconds([&] { kernels::series_grid_serial(s, g); }, 1),
         seconds([&] { kernels::series_grid_omp(s, g); }, 1));

  const GridFunction2D psi = sample(GridSpec::square(5.0, 0.01), [](double x, double y) {
    return squeezed_wavefunction(2, SqueezeParam(0.7), x, y);
  });
  report("fd residual (1001^2)", seconds([&] { kernels::fd_residual_serial(psi, 2.0, StencilOrder::fourth); }, 3),
         seconds([&] { kernels::fd_residual_omp(psi, 2.0, StencilOrder::fourth); }, 3));

  const ComplexGrid2D state = flow_state(Flow::K3, 0.5, GridSpec::square(8.05, 0.05));
  std::vector<kernels::WignerSite> sites;
  for (const PhasePoint& p : sample_cloud(64)) {
    sites.push_back({static_cast<int>(std::lround((p.x + 8.05) / 0.05)),
                     static_cast<int>(std::lround((p.y + 8.05) / 0.05)), p.p, p.q});
  }
  report("wigner (64 points)", seconds([&] { kernels::wigner_serial(state, sites, 120, 120); }, 1),
         seconds([&] { kernels::wigner_omp(state, sites, 120, 120); }, 1));
  return 0;
}

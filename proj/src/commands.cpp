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

#include "entosc/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entosc/covariant_inner.hpp"
#include "entosc/dirac_algebra.hpp"
#include "entosc/entangled_series.hpp"
#include "entosc/errors.hpp"
#include "entosc/kernels.hpp"
#include "entosc/phase_space.hpp"
#include "entosc/planar_transforms.hpp"
#include "entosc/reduced_state.hpp"
#include "entosc/run_config.hpp"

namespace entosc {
namespace {

using json = nlohmann::ordered_json;

constexpr double kInnerProductTol = 1e-6;

// Writes text to cfg.output_path, or to out when no path is set.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw IoError("cannot open " + cfg.output_path + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to " + cfg.output_path + " failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

double max_abs(const Eigen::Matrix2d& m) { return m.cwiseAbs().maxCoeff(); }

// Flat key,value CSV for scalar reports.
std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string s = "key,value\n";
  for (const auto& [k, v] : rows) s += k + "," + v + "\n";
  return s;
}

struct IdentityArgs {
  int n = 0;
  double eta = 0.5;
  double half_width = 4.0;
  double spacing = 0.25;
};

int cmd_identity_check(const IdentityArgs& a, const RunConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  const SqueezeParam eta(a.eta);
  const GridSpec grid = GridSpec::square(a.half_width, a.spacing);
  grid.validate();
  const SchmidtSeries s = pointwise_series(a.n, eta, 0.01 * cfg.identity_tol);
  if (s.cutoff > cfg.series_kmax) {
    err << "series needs " << s.cutoff << " terms, above series_Kmax = " << cfg.series_kmax << "\n";
    return kExitTolerance;
  }
  const GridFunction2D sum = kernels::series_grid_omp(s, grid);
  double worst = 0.0;
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.ny; ++j) {
      const double exact = squeezed_wavefunction(a.n, eta, grid.x(i), grid.y(j));
      worst = std::max(worst, std::abs(sum.at(i, j) - exact));
    }
  const bool pass = worst <= cfg.identity_tol;
  if (cfg.format_or(OutputFormat::json) == OutputFormat::json) {
    json j;
    j["n"] = a.n;
    j["eta"] = round12(a.eta);
    j["cutoff"] = s.cutoff;
    j["grid"] = {{"half_width", round12(a.half_width)}, {"spacing", round12(a.spacing)}, {"nodes", grid.size()}};
    j["max_deviation"] = round12(worst);
    j["tolerance"] = round12(cfg.identity_tol);
    j["pass"] = pass;
    emit(cfg, out, dump(j));
  } else {
    emit(cfg, out,
         "n,eta,cutoff,max_deviation,tolerance,pass\n" + std::to_string(a.n) + "," + format_number(a.eta) +
             "," + std::to_string(s.cutoff) + "," + format_number(worst) + "," +
             format_number(cfg.identity_tol) + "," + (pass ? "true" : "false") + "\n");
  }
  return pass ? kExitOk : kExitTolerance;
}

struct AlgebraArgs {
  std::string rep = "matrix5";
  std::optional<int> cutoff;
  bool printed_signs = false;
};

int cmd_algebra_check(const AlgebraArgs& a, const RunConfig& cfg, std::ostream& out) {
  const auto rep = parse_representation(a.rep);
  if (!rep) throw DomainError("unknown representation " + a.rep);
  std::optional<int> cutoff = a.cutoff;
  if (*rep == Representation::fock && !cutoff) cutoff = cfg.fock_cutoff;
  const AlgebraReport r =
      check_algebra(*rep, cutoff, a.printed_signs ? FockSigns::as_printed : FockSigns::table_consistent);
  if (cfg.format_or(OutputFormat::json) == OutputFormat::json) {
    emit(cfg, out, r.to_json(2) + "\n");
  } else {
    std::string s = "left,right,expected,deviation\n";
    for (const auto& p : r.pairs) {
      s += std::string(name(p.left)) + "," + std::string(name(p.right)) + "," + p.expected + "," +
           format_number(p.deviation) + "\n";
    }
    emit(cfg, out, s);
  }
  return r.max_deviation <= cfg.algebra_tol ? kExitOk : kExitTolerance;
}

struct ThermoArgs {
  double lo = 0.0;
  double hi = 0.99;
  int steps = 200;
};

int cmd_thermo_curve(const ThermoArgs& a, const RunConfig& cfg, std::ostream& out,
                     std::ostream& err) {
  if (!(a.lo >= 0.0 && a.hi < 1.0 && a.lo <= a.hi)) {
    throw DomainError("need 0 <= beta-sq-min <= beta-sq-max < 1");
  }
  const auto grid = linear_grid(a.lo, a.hi, a.steps);
  const auto curve = thermo_curve(grid);
  std::ostringstream s;
  if (cfg.format_or(OutputFormat::csv) == OutputFormat::json) {
    json j = json::array();
    for (const auto& p : curve) {
      j.push_back({{"beta_sq", round12(p.beta_sq)},
                   {"entropy_nats", round12(p.entropy)},
                   {"temperature", round12(p.temperature)}});
    }
    s << j.dump(2) << "\n";
  } else {
    write_csv(curve, s);
  }
  emit(cfg, out, s.str());
  if (curve.size() >= 3) {
    err << "max curvature of T at beta_sq = "
        << format_number(curve[max_curvature_index(curve)].beta_sq) << "\n";
  }
  return kExitOk;
}

struct ShearArgs {
  double alpha = 1.0;
  double lambda = 10.0;
};

int cmd_decompose_shear(const ShearArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (!(a.alpha > 0.0)) throw DomainError("alpha must be > 0");
  const Mat2 target = shear(a.alpha);

  const BargmannFactors b = bargmann_decompose(a.alpha);
  const double b_res = max_abs(b.reconstruct() - target);

  const double omega = wigner_decompose_angle(a.alpha, a.lambda);
  const double w_res = max_abs(wigner_decompose(a.alpha, a.lambda) - target);
  const double w_bound = 2.0 * a.alpha * std::exp(-2.0 * a.lambda) + (1.0 - std::cos(omega));

  const RotatedSqueeze rs = shear_as_rotated_squeeze(a.alpha);
  const QuadraticForm2 sheared = transform_quadratic_form(QuadraticForm2{}, target);
  const double rs_res = max_abs(rs.quadratic_form().Q - sheared.Q);

  if (cfg.format_or(OutputFormat::json) == OutputFormat::json) {
    json j;
    j["alpha"] = round12(a.alpha);
    j["bargmann"] = {{"theta", round12(b.theta)},
                     {"theta_prime", round12(b.theta_prime)},
                     {"eta", round12(b.eta)},
                     {"residual", round12(b_res)}};
    j["wigner"] = {{"lambda", round12(a.lambda)},
                   {"omega", round12(omega)},
                   {"residual", round12(w_res)},
                   {"bound", round12(w_bound)}};
    j["rotated_squeeze"] = {{"theta", round12(rs.theta)},
                            {"eta", round12(rs.eta)},
                            {"exp_2eta", round12(std::exp(2.0 * rs.eta))},
                            {"form_residual", round12(rs_res)}};
    emit(cfg, out, dump(j));
  } else {
    emit(cfg, out,
         key_value_csv({{"alpha", format_number(a.alpha)},
                        {"bargmann.theta", format_number(b.theta)},
                        {"bargmann.theta_prime", format_number(b.theta_prime)},
                        {"bargmann.eta", format_number(b.eta)},
                        {"bargmann.residual", format_number(b_res)},
                        {"wigner.lambda", format_number(a.lambda)},
                        {"wigner.omega", format_number(omega)},
                        {"wigner.residual", format_number(w_res)},
                        {"wigner.bound", format_number(w_bound)},
                        {"rotated_squeeze.theta", format_number(rs.theta)},
                        {"rotated_squeeze.eta", format_number(rs.eta)},
                        {"rotated_squeeze.exp_2eta", format_number(std::exp(2.0 * rs.eta))},
                        {"rotated_squeeze.form_residual", format_number(rs_res)}}));
  }
  return kExitOk;
}

struct InnerArgs {
  int n = 0;
  double eta1 = 0.0;
  int m = 0;
  double eta2 = 0.0;
};

int cmd_inner_product(const InnerArgs& a, const RunConfig& cfg, std::ostream& out) {
  const InnerProduct r =
      inner_product(a.n, SqueezeParam(a.eta1), a.m, SqueezeParam(a.eta2), cfg.quadrature_order);
  const bool pass = r.deviation <= kInnerProductTol;
  if (cfg.format_or(OutputFormat::json) == OutputFormat::json) {
    json j;
    j["n"] = a.n;
    j["eta1"] = round12(a.eta1);
    j["m"] = a.m;
    j["eta2"] = round12(a.eta2);
    j["quadrature"] = round12(r.quadrature);
    j["closed_form"] = round12(r.closed_form);
    j["deviation"] = round12(r.deviation);
    j["pass"] = pass;
    emit(cfg, out, dump(j));
  } else {
    emit(cfg, out,
         "n,eta1,m,eta2,quadrature,closed_form,deviation\n" + std::to_string(a.n) + "," +
             format_number(a.eta1) + "," + std::to_string(a.m) + "," + format_number(a.eta2) + "," +
             format_number(r.quadrature) + "," + format_number(r.closed_form) + "," +
             format_number(r.deviation) + "\n");
  }
  return pass ? kExitOk : kExitTolerance;
}

struct WignerGridArgs {
  std::string state = "ground";
  double eta = 0.5;
  std::string plane = "xy";
  double half_width = 2.0;
  double step = 0.1;
};

int cmd_wigner_grid(const WignerGridArgs& a, const RunConfig& cfg, std::ostream& out) {
  const WignerOptions opt;
  std::optional<Flow> flow;
  if (a.state == "squeezed") {
    flow = Flow::Q3;
  } else if (a.state == "entangled") {
    flow = Flow::K3;
  } else if (a.state == "sheared") {
    flow = Flow::Shear;
  } else if (a.state != "ground") {
    throw DomainError("state must be ground, squeezed, entangled or sheared");
  }
  if (a.plane != "xy" && a.plane != "pq") throw DomainError("plane must be xy or pq");
  const double ratio = a.step / opt.spacing;
  if (!(a.step > 0.0) || std::abs(ratio - std::round(ratio)) > 1e-9) {
    throw DomainError("step must be a positive multiple of " + format_number(opt.spacing));
  }

  const GridSpec out_grid = GridSpec::square(a.half_width, a.step);
  const double reach = a.plane == "xy" ? std::abs(out_grid.x0) : 0.0;
  const GridSpec psi_grid = GridSpec::square(reach + opt.half_width + opt.spacing, opt.spacing);
  const ComplexGrid2D psi =
      flow ? flow_state(*flow, a.eta, psi_grid)
           : sample_complex(psi_grid, [](double x, double y) {
               return std::complex<double>(ground_wavefunction(x, y));
             });

  std::vector<PhasePoint> pts;
  pts.reserve(out_grid.size());
  for (int i = 0; i < out_grid.nx; ++i)
    for (int j = 0; j < out_grid.ny; ++j) {
      const double u = out_grid.x(i), v = out_grid.y(j);
      pts.push_back(a.plane == "xy" ? PhasePoint{u, v, 0.0, 0.0} : PhasePoint{0.0, 0.0, u, v});
    }
  const std::vector<double> w = wigner_transform(psi, pts, opt);

  GridFunction2D g(out_grid);
  g.values = w;
  if (a.plane == "pq") {
    g.x_label = "p";
    g.y_label = "q";
  }
  if (cfg.format_or(OutputFormat::csv) == OutputFormat::json) {
    json j;
    j["state"] = a.state;
    j["eta"] = round12(flow ? a.eta : 0.0);
    j["plane"] = a.plane;
    j["grid"] = {{"origin", {round12(out_grid.x0), round12(out_grid.y0)}},
                 {"spacing", {round12(out_grid.hx), round12(out_grid.hy)}},
                 {"shape", {out_grid.nx, out_grid.ny}}};
    json rows = json::array();
    for (int i = 0; i < out_grid.nx; ++i) {
      json row = json::array();
      for (int jj = 0; jj < out_grid.ny; ++jj) row.push_back(round12(g.at(i, jj)));
      rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    emit(cfg, out, dump(j));
  } else {
    std::ostringstream s;
    write_csv(g, s);
    emit(cfg, out, s.str());
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entangled oscillator numerics", "entosc"};
  app.require_subcommand(1);

  std::string config_path, format, out_path;
  double identity_tol = 0.0, algebra_tol = 0.0;
  int quadrature_order = 0, fock_cutoff = 0, series_kmax = 0;
  app.add_option("--config", config_path, "key=value file with defaults");
  auto* o_format =
      app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* o_itol = app.add_option("--identity-tol", identity_tol);
  auto* o_atol = app.add_option("--algebra-tol", algebra_tol);
  auto* o_quad = app.add_option("--quadrature-order", quadrature_order);
  auto* o_fock = app.add_option("--fock-cutoff", fock_cutoff);
  auto* o_kmax = app.add_option("--series-kmax", series_kmax);
  app.fallthrough();

  std::function<int(const RunConfig&)> action;

  IdentityArgs ia;
  auto* id = app.add_subcommand("identity-check", "series vs squeezed Gaussian on a grid");
  id->add_option("--n", ia.n)->check(CLI::NonNegativeNumber);
  id->add_option("--eta", ia.eta);
  id->add_option("--half-width", ia.half_width);
  id->add_option("--spacing", ia.spacing);
  id->add_option("--out", out_path);
  id->callback([&] { action = [&](const RunConfig& c) { return cmd_identity_check(ia, c, out, err); }; });

  AlgebraArgs aa;
  int cutoff = 0;
  auto* alg = app.add_subcommand("algebra-check", "commutator table in one representation");
  alg->add_option("--rep", aa.rep)->check(CLI::IsMember({"fock", "matrix5", "sp4"}));
  auto* o_cut = alg->add_option("--cutoff", cutoff);
  alg->add_flag("--printed-signs", aa.printed_signs, "fock: use the K signs as printed");
  alg->add_option("--out", out_path);
  alg->callback([&] {
    if (o_cut->count()) aa.cutoff = cutoff;
    action = [&](const RunConfig& c) { return cmd_algebra_check(aa, c, out); };
  });

  ThermoArgs ta;
  auto* th = app.add_subcommand("thermo-curve", "entropy and temperature against beta^2");
  th->add_option("--beta-sq-min", ta.lo);
  th->add_option("--beta-sq-max", ta.hi);
  th->add_option("--steps", ta.steps)->check(CLI::PositiveNumber);
  th->add_option("--out", out_path);
  th->callback([&] { action = [&](const RunConfig& c) { return cmd_thermo_curve(ta, c, out, err); }; });

  ShearArgs sa;
  auto* sh = app.add_subcommand("decompose-shear", "Bargmann, Wigner and rotated-squeeze forms");
  sh->add_option("--alpha", sa.alpha);
  sh->add_option("--lambda", sa.lambda);
  sh->add_option("--out", out_path);
  sh->callback([&] { action = [&](const RunConfig& c) { return cmd_decompose_shear(sa, c, out); }; });

  InnerArgs na;
  auto* ip = app.add_subcommand("inner-product", "overlap of two boosted oscillator states");
  ip->add_option("--n", na.n);
  ip->add_option("--eta1", na.eta1);
  ip->add_option("--m", na.m);
  ip->add_option("--eta2", na.eta2);
  ip->add_option("--out", out_path);
  ip->callback([&] { action = [&](const RunConfig& c) { return cmd_inner_product(na, c, out); }; });

  WignerGridArgs wa;
  auto* wg = app.add_subcommand("wigner-grid", "Wigner function on a plane through the origin");
  wg->add_option("--state", wa.state)->check(CLI::IsMember({"ground", "squeezed", "entangled", "sheared"}));
  wg->add_option("--eta", wa.eta, "rapidity, or alpha for the sheared state");
  wg->add_option("--plane", wa.plane)->check(CLI::IsMember({"xy", "pq"}));
  wg->add_option("--half-width", wa.half_width);
  wg->add_option("--step", wa.step);
  wg->add_option("--out", out_path);
  wg->callback([&] { action = [&](const RunConfig& c) { return cmd_wigner_grid(wa, c, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (o_format->count()) cfg.set("format", format);
    if (o_itol->count()) cfg.identity_tol = identity_tol;
    if (o_atol->count()) cfg.algebra_tol = algebra_tol;
    if (o_quad->count()) cfg.quadrature_order = quadrature_order;
    if (o_fock->count()) cfg.fock_cutoff = fock_cutoff;
    if (o_kmax->count()) cfg.series_kmax = series_kmax;
    if (!out_path.empty()) cfg.output_path = out_path;
    cfg.validate();
    return action(cfg);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CutoffError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const NumericFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const std::logic_error& e) {
    // DomainError, IndexOutOfRange
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace entosc

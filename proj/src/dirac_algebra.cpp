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

#include "entosc/dirac_algebra.hpp"

#include <cmath>
#include <string>

#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "entosc/errors.hpp"
#include "entosc/format.hpp"

namespace entosc {
namespace {

constexpr std::array<StructureConstant, 45> kTable = {{
    {Generator::L1, Generator::L2, +1, Generator::L3},
    {Generator::L1, Generator::L3, -1, Generator::L2},
    {Generator::L1, Generator::S3, 0, Generator::L1},
    {Generator::L1, Generator::K1, 0, Generator::L1},
    {Generator::L1, Generator::K2, +1, Generator::K3},
    {Generator::L1, Generator::K3, -1, Generator::K2},
    {Generator::L1, Generator::Q1, 0, Generator::L1},
    {Generator::L1, Generator::Q2, +1, Generator::Q3},
    {Generator::L1, Generator::Q3, -1, Generator::Q2},
    {Generator::L2, Generator::L3, +1, Generator::L1},
    {Generator::L2, Generator::S3, 0, Generator::L2},
    {Generator::L2, Generator::K1, -1, Generator::K3},
    {Generator::L2, Generator::K2, 0, Generator::L2},
    {Generator::L2, Generator::K3, +1, Generator::K1},
    {Generator::L2, Generator::Q1, -1, Generator::Q3},
    {Generator::L2, Generator::Q2, 0, Generator::L2},
    {Generator::L2, Generator::Q3, +1, Generator::Q1},
    {Generator::L3, Generator::S3, 0, Generator::L3},
    {Generator::L3, Generator::K1, +1, Generator::K2},
    {Generator::L3, Generator::K2, -1, Generator::K1},
    {Generator::L3, Generator::K3, 0, Generator::L3},
    {Generator::L3, Generator::Q1, +1, Generator::Q2},
    {Generator::L3, Generator::Q2, -1, Generator::Q1},
    {Generator::L3, Generator::Q3, 0, Generator::L3},
    {Generator::S3, Generator::K1, +1, Generator::Q1},
    {Generator::S3, Generator::K2, +1, Generator::Q2},
    {Generator::S3, Generator::K3, +1, Generator::Q3},
    {Generator::S3, Generator::Q1, -1, Generator::K1},
    {Generator::S3, Generator::Q2, -1, Generator::K2},
    {Generator::S3, Generator::Q3, -1, Generator::K3},
    {Generator::K1, Generator::K2, -1, Generator::L3},
    {Generator::K1, Generator::K3, +1, Generator::L2},
    {Generator::K1, Generator::Q1, -1, Generator::S3},
    {Generator::K1, Generator::Q2, 0, Generator::K1},
    {Generator::K1, Generator::Q3, 0, Generator::K1},
    {Generator::K2, Generator::K3, -1, Generator::L1},
    {Generator::K2, Generator::Q1, 0, Generator::K2},
    {Generator::K2, Generator::Q2, -1, Generator::S3},
    {Generator::K2, Generator::Q3, 0, Generator::K2},
    {Generator::K3, Generator::Q1, 0, Generator::K3},
    {Generator::K3, Generator::Q2, 0, Generator::K3},
    {Generator::K3, Generator::Q3, -1, Generator::S3},
    {Generator::Q1, Generator::Q2, -1, Generator::L3},
    {Generator::Q1, Generator::Q3, +1, Generator::L2},
    {Generator::Q2, Generator::Q3, -1, Generator::L1},
}};

constexpr std::array<std::string_view, 10> kNames = {"L1", "L2", "L3", "S3", "K1",
                                                      "K2", "K3", "Q1", "Q2", "Q3"};

int idx(Generator g) { return static_cast<int>(g); }

ExactComplex rat(std::int64_t num, std::int64_t den = 1) { return {Rational(num, den), Rational(0)}; }
ExactComplex imag(std::int64_t num, std::int64_t den = 1) { return {Rational(0), Rational(num, den)}; }

}  // namespace

std::string_view name(Generator g) { return kNames[idx(g)]; }

std::optional<Generator> parse_generator(std::string_view s) {
  for (Generator g : kAllGenerators)
    if (name(g) == s) return g;
  return std::nullopt;
}

std::span<const StructureConstant, 45> structure_constants() { return kTable; }

// ---------------------------------------------------------------------------
// Fock

namespace {

// A word of ladder operators, applied right to left: 'a' = a, 'A' = a^dagger,
// 'b' = b, 'B' = b^dagger.
Eigen::MatrixXcd ladder_word(int cutoff, std::string_view word) {
  const int d = cutoff + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int n = 0; n <= cutoff; ++n) {
    for (int k = 0; k <= cutoff; ++k) {
      double amp = 1.0;
      int na = n, nb = k;
      for (auto it = word.rbegin(); it != word.rend() && amp != 0.0; ++it) {
        switch (*it) {
          case 'a': amp *= std::sqrt(double(na)); --na; break;
          case 'A': ++na; amp *= std::sqrt(double(na)); break;
          case 'b': amp *= std::sqrt(double(nb)); --nb; break;
          case 'B': ++nb; amp *= std::sqrt(double(nb)); break;
        }
        if (na < 0 || nb < 0) amp = 0.0;
      }
      // Only the final state is projected; intermediate states may leave the box.
      if (amp != 0.0 && na <= cutoff && nb <= cutoff) m(na * d + nb, n * d + k) += amp;
    }
  }
  return m;
}

}  // namespace

FockGenerators fock_generators(int cutoff, FockSigns signs) {
  if (cutoff < 2 || cutoff > kMaxFockCutoff) {
    throw DomainError("Fock cutoff must be in [2, " + std::to_string(kMaxFockCutoff) + "], got " +
                      std::to_string(cutoff));
  }
  auto w = [cutoff](std::string_view word) { return ladder_word(cutoff, word); };
  const std::complex<double> i(0.0, 1.0);
  const auto AA = w("AA"), aa = w("aa"), BB = w("BB"), bb = w("bb");
  const auto Ab = w("Ab"), Ba = w("Ba"), AB = w("AB"), ab = w("ab");

  FockGenerators f;
  f.cutoff = cutoff;
  f.ops[idx(Generator::L1)] = 0.5 * (Ab + Ba);
  f.ops[idx(Generator::L2)] = (Ab - Ba) / (2.0 * i);
  f.ops[idx(Generator::L3)] = 0.5 * (w("Aa") - w("Bb"));
  f.ops[idx(Generator::S3)] = 0.5 * (w("Aa") + w("bB"));
  f.ops[idx(Generator::K1)] = -0.25 * (AA + aa - BB - bb);
  f.ops[idx(Generator::K2)] = (i / 4.0) * (AA - aa + BB - bb);
  f.ops[idx(Generator::K3)] = 0.5 * (AB + ab);
  f.ops[idx(Generator::Q1)] = (-i / 4.0) * (AA - aa - BB + bb);
  f.ops[idx(Generator::Q2)] = -0.25 * (AA + aa + BB + bb);
  f.ops[idx(Generator::Q3)] = (i / 2.0) * (AB - ab);
  if (signs == FockSigns::table_consistent) {
    for (Generator g : {Generator::K1, Generator::K2, Generator::K3}) f.ops[idx(g)] *= -1.0;
  }
  return f;
}

// ---------------------------------------------------------------------------
// O(3,2)

namespace {

enum Axis5 { kX = 0, kY, kZ, kT, kS };

Mat5 two_entries(int r1, int c1, ExactComplex v1, int r2, int c2, ExactComplex v2) {
  Mat5 m;
  m(r1, c1) = v1;
  m(r2, c2) = v2;
  return m;
}

}  // namespace

Mat5 metric5() {
  Mat5 g;
  g(kX, kX) = rat(1);
  g(kY, kY) = rat(1);
  g(kZ, kZ) = rat(1);
  g(kT, kT) = rat(-1);
  g(kS, kS) = rat(-1);
  return g;
}

std::array<Mat5, 10> matrix5_generators() {
  std::array<Mat5, 10> m;
  const auto i = imag(1), mi = imag(-1);
  m[idx(Generator::L1)] = two_entries(kY, kZ, mi, kZ, kY, i);
  m[idx(Generator::L2)] = two_entries(kZ, kX, mi, kX, kZ, i);
  m[idx(Generator::L3)] = two_entries(kX, kY, mi, kY, kX, i);
  m[idx(Generator::S3)] = two_entries(kT, kS, mi, kS, kT, i);
  const std::array<int, 3> space = {kX, kY, kZ};
  const std::array<Generator, 3> ks = {Generator::K1, Generator::K2, Generator::K3};
  const std::array<Generator, 3> qs = {Generator::Q1, Generator::Q2, Generator::Q3};
  for (int a = 0; a < 3; ++a) {
    m[idx(ks[a])] = two_entries(space[a], kT, i, kT, space[a], i);
    m[idx(qs[a])] = two_entries(space[a], kS, i, kS, space[a], i);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Sp(4)

namespace {

struct Entry {
  int row;
  int col;
  int twice;
};

// Real matrix with entries twice/2.
Mat4Flow halves(std::initializer_list<Entry> entries) {
  Mat4Flow a;
  for (const Entry& e : entries) a(e.row, e.col) = rat(e.twice, 2);
  return a;
}

}  // namespace

// Flow matrices of the first-order operators on (x, y, p, q), read off as
// op = -i (A v) . grad.
std::array<Mat4Flow, 10> sp4_generators() {
  std::array<Mat4Flow, 10> g;
  g[idx(Generator::L1)] = halves({{0, 3, +1}, {1, 2, +1}, {2, 1, -1}, {3, 0, -1}});
  g[idx(Generator::L2)] = halves({{0, 1, -1}, {1, 0, +1}, {2, 3, -1}, {3, 2, +1}});
  g[idx(Generator::L3)] = halves({{0, 2, +1}, {1, 3, -1}, {2, 0, -1}, {3, 1, +1}});
  g[idx(Generator::S3)] = halves({{0, 2, -1}, {1, 3, -1}, {2, 0, +1}, {3, 1, +1}});
  g[idx(Generator::K1)] = halves({{0, 2, +1}, {1, 3, -1}, {2, 0, +1}, {3, 1, -1}});
  g[idx(Generator::K2)] = halves({{0, 0, +1}, {1, 1, +1}, {2, 2, -1}, {3, 3, -1}});
  g[idx(Generator::K3)] = halves({{0, 3, -1}, {1, 2, -1}, {2, 1, -1}, {3, 0, -1}});
  g[idx(Generator::Q1)] = halves({{0, 0, -1}, {1, 1, +1}, {2, 2, +1}, {3, 3, -1}});
  g[idx(Generator::Q2)] = halves({{0, 2, +1}, {1, 3, +1}, {2, 0, +1}, {3, 1, +1}});
  g[idx(Generator::Q3)] = halves({{0, 1, +1}, {1, 0, +1}, {2, 3, -1}, {3, 2, -1}});
  return g;
}

namespace {

Mat4Flow bracket_unsigned(const Mat4Flow& a, const Mat4Flow& b) {
  return imag(1) * (a * b - b * a);
}

}  // namespace

int sp4_bracket_sign() {
  static const int sign = [] {
    const auto g = sp4_generators();
    const Mat4Flow lhs = bracket_unsigned(g[idx(Generator::L1)], g[idx(Generator::L2)]);
    const Mat4Flow target = imag(1) * g[idx(Generator::L3)];
    if (lhs == target) return 1;
    if (rat(-1) * lhs == target) return -1;
    throw NumericFailure("sp4 generators do not reproduce [L1, L2] = +-i L3");
  }();
  return sign;
}

Mat4Flow symplectic_form() {
  Mat4Flow j;
  j(0, 2) = rat(1);
  j(2, 0) = rat(-1);
  j(1, 3) = rat(1);
  j(3, 1) = rat(-1);
  return j;
}

Mat4Flow shear_flow_generator() {
  const auto g = sp4_generators();
  return g[idx(Generator::Q3)] - g[idx(Generator::L2)];
}

Eigen::Matrix4d to_real(const Mat4Flow& a) {
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (a(r, c).im.num() != 0) throw DomainError("flow matrix has an imaginary entry");
      m(r, c) = a(r, c).re.to_double();
    }
  return m;
}

Eigen::Matrix4d sp4_flow(const Mat4Flow& a, double t) {
  const Eigen::Matrix4d scaled = 2.0 * t * to_real(a);
  return scaled.exp();
}

PlanarGenerators planar_generators() {
  PlanarGenerators p;
  p.squeeze(0, 1) = imag(1);
  p.squeeze(1, 0) = imag(1);
  p.rotation(0, 1) = imag(-1);
  p.rotation(1, 0) = imag(1);
  return p;
}

// ---------------------------------------------------------------------------
// Table check

std::string_view name(Representation r) {
  switch (r) {
    case Representation::fock: return "fock";
    case Representation::matrix5: return "matrix5";
    case Representation::sp4: return "sp4";
  }
  return "?";
}

std::optional<Representation> parse_representation(std::string_view s) {
  for (auto r : {Representation::fock, Representation::matrix5, Representation::sp4})
    if (name(r) == s) return r;
  return std::nullopt;
}

namespace {

std::string expected_text(const StructureConstant& sc) {
  if (sc.coeff == 0) return "0";
  return std::string(sc.coeff > 0 ? "+i " : "-i ") + std::string(name(sc.result));
}

template <std::size_t N, class Bracket>
AlgebraReport check_exact(Representation rep, const std::array<ExactMatrix<N>, 10>& g,
                          Bracket bracket) {
  AlgebraReport report;
  report.rep = rep;
  report.exact = true;
  for (const auto& sc : kTable) {
    ExactMatrix<N> expected;
    if (sc.coeff != 0) expected = imag(sc.coeff) * g[idx(sc.result)];
    const ExactMatrix<N> diff = bracket(g[idx(sc.left)], g[idx(sc.right)]) - expected;
    PairRecord rec{sc.left, sc.right, expected_text(sc), diff.max_abs()};
    report.max_deviation = std::max(report.max_deviation, rec.deviation);
    report.pairs.push_back(std::move(rec));
  }
  return report;
}

AlgebraReport check_fock(int cutoff, FockSigns signs) {
  const FockGenerators f = fock_generators(cutoff, signs);
  std::vector<int> safe;
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; m <= cutoff; ++m)
      if (n + m <= cutoff - 2) safe.push_back(f.index(n, m));

  const std::complex<double> i(0.0, 1.0);
  AlgebraReport report;
  report.rep = Representation::fock;
  report.cutoff = cutoff;
  report.pairs.resize(kTable.size());
  // Pairs are independent; each writes only its own record.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < kTable.size(); ++k) {
    const auto& sc = kTable[k];
    const auto& A = f[sc.left];
    const auto& B = f[sc.right];
    Eigen::MatrixXcd diff = A * B - B * A;
    if (sc.coeff != 0) diff -= (double(sc.coeff) * i) * f[sc.result];
    double dev = 0.0;
    for (int col : safe) dev = std::max(dev, diff.col(col).cwiseAbs().maxCoeff());
    report.pairs[k] = PairRecord{sc.left, sc.right, expected_text(sc), dev};
  }
  for (const auto& p : report.pairs) report.max_deviation = std::max(report.max_deviation, p.deviation);
  return report;
}

}  // namespace

AlgebraReport check_algebra(Representation rep, std::optional<int> cutoff, FockSigns signs) {
  switch (rep) {
    case Representation::fock:
      if (!cutoff) throw DomainError("the fock representation needs a cutoff");
      return check_fock(*cutoff, signs);
    case Representation::matrix5:
      if (cutoff) throw DomainError("matrix5 takes no cutoff");
      return check_exact(rep, matrix5_generators(),
                         [](const Mat5& a, const Mat5& b) { return a * b - b * a; });
    case Representation::sp4: {
      if (cutoff) throw DomainError("sp4 takes no cutoff");
      const auto sign = rat(sp4_bracket_sign());
      return check_exact(rep, sp4_generators(), [sign](const Mat4Flow& a, const Mat4Flow& b) {
        return sign * bracket_unsigned(a, b);
      });
    }
  }
  throw DomainError("unknown representation");
}

std::string AlgebraReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["rep"] = std::string(name(rep));
  if (cutoff) j["cutoff"] = *cutoff;
  j["exact"] = exact;
  auto& arr = j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : pairs) {
    nlohmann::ordered_json e;
    e["pair"] = "[" + std::string(name(p.left)) + "," + std::string(name(p.right)) + "]";
    e["expected"] = p.expected;
    e["deviation"] = round12(p.deviation);
    arr.push_back(std::move(e));
  }
  j["max_deviation"] = round12(max_deviation);
  return j.dump(indent);
}

}  // namespace entosc

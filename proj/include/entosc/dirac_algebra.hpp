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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "entosc/exact.hpp"

namespace entosc {

/// Dirac's ten generators of the two-oscillator system.
enum class Generator { L1, L2, L3, S3, K1, K2, K3, Q1, Q2, Q3 };

inline constexpr std::array<Generator, 10> kAllGenerators = {
    Generator::L1, Generator::L2, Generator::L3, Generator::S3, Generator::K1,
    Generator::K2, Generator::K3, Generator::Q1, Generator::Q2, Generator::Q3};

std::string_view name(Generator g);
std::optional<Generator> parse_generator(std::string_view s);

/// One row of the commutator table: [left, right] = i * coeff * result.
/// coeff is -1, 0 or +1; result is meaningless when coeff == 0.
struct StructureConstant {
  Generator left;
  Generator right;
  int coeff;
  Generator result;
};

/// All 45 unordered pairs in kAllGenerators order.
std::span<const StructureConstant, 45> structure_constants();

// ---------------------------------------------------------------------------
// Fock representation

/// Which overall signs to use for the K generators.
///  table_consistent: K1, K2, K3 negated relative to the printed bilinears,
///    which makes the ten operators close on the commutator table.
///  as_printed: the bilinears exactly as printed; the S3 rows of the table
///    then come out with the opposite sign.
enum class FockSigns { table_consistent, as_printed };

inline constexpr int kMaxFockCutoff = 40;

/// Ten Hermitian operators on span{|n,m> : n, m <= cutoff}.
/// Basis index is n * (cutoff + 1) + m (mode a outer).
struct FockGenerators {
  int cutoff = 0;
  std::array<Eigen::MatrixXcd, 10> ops;

  const Eigen::MatrixXcd& operator[](Generator g) const { return ops[static_cast<int>(g)]; }
  int dim() const { return (cutoff + 1) * (cutoff + 1); }
  int index(int n, int m) const { return n * (cutoff + 1) + m; }
};

/// Builds the generators as compressions of the exact operators onto the
/// truncated space, so b b^dagger acts as b^dagger b + 1 on every kept state.
/// Throws DomainError for cutoff < 2 or cutoff > kMaxFockCutoff (dense storage).
FockGenerators fock_generators(int cutoff, FockSigns signs = FockSigns::table_consistent);

// ---------------------------------------------------------------------------
// O(3,2) defining representation on (x, y, z, t, s)

using Mat5 = ExactMatrix<5>;

/// diag(+1, +1, +1, -1, -1).
Mat5 metric5();

/// L3, K3, Q3, S3 are the printed matrices; L1, L2 rotate (y,z) and (z,x);
/// K_i boosts axis i with t and Q_i boosts axis i with s.
std::array<Mat5, 10> matrix5_generators();

// ---------------------------------------------------------------------------
// Sp(4) phase-space flows on (x, y, p, q)

/// A generator written as the differential operator -i (A v) . grad.
using Mat4Flow = ExactMatrix<4>;

/// The printed first-order phase-space generators converted to flow matrices.
std::array<Mat4Flow, 10> sp4_generators();

/// Global sign s in the bracket s * i [A, B] that realises [L1, L2] = i L3.
/// Calibrated once from the generators, then used for every pair.
int sp4_bracket_sign();

/// Antisymmetric form pairing (x, p) and (y, q).
Mat4Flow symplectic_form();

/// A_{Q3} - A_{L2}: shears x by y and q by -p.
Mat4Flow shear_flow_generator();

Eigen::Matrix4d to_real(const Mat4Flow& a);

/// exp(2 t A). The factor 2 compensates the 1/2 in the generators, so t is the
/// rapidity for Q3 and K3 and the shear parameter alpha for the shear generator.
Eigen::Matrix4d sp4_flow(const Mat4Flow& a, double t);

// ---------------------------------------------------------------------------
// 2x2 rotation / squeeze / shear generators of the plane

struct PlanarGenerators {
  ExactMatrix<2> squeeze;   // K = [[0, i], [i, 0]]
  ExactMatrix<2> rotation;  // J = [[0, -i], [i, 0]]
  ExactMatrix<2> shear() const { return squeeze - rotation; }
};

PlanarGenerators planar_generators();

// ---------------------------------------------------------------------------
// Commutator table check

enum class Representation { fock, matrix5, sp4 };

std::string_view name(Representation r);
std::optional<Representation> parse_representation(std::string_view s);

struct PairRecord {
  Generator left;
  Generator right;
  std::string expected;  // e.g. "+i L3" or "0"
  double deviation = 0.0;
};

struct AlgebraReport {
  Representation rep = Representation::matrix5;
  std::optional<int> cutoff;
  bool exact = false;  // true when computed in exact arithmetic
  std::vector<PairRecord> pairs;
  double max_deviation = 0.0;

  /// {"rep", "cutoff", "exact", "pairs": [{"pair", "expected", "deviation"}], "max_deviation"}
  std::string to_json(int indent = 2) const;
};

/// Computes all 45 commutators and compares them with the table. For fock,
/// comparison is restricted to columns |n,m> with n + m <= cutoff - 2.
/// Throws DomainError if cutoff is missing for fock or given for the others.
AlgebraReport check_algebra(Representation rep, std::optional<int> cutoff = std::nullopt,
                            FockSigns signs = FockSigns::table_consistent);

}  // namespace entosc

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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace entosc {

enum class OutputFormat { csv, json };

struct RunConfig {
  double identity_tol = 1e-8;
  double algebra_tol = 1e-10;
  int quadrature_order = 64;
  int fock_cutoff = 10;
  int series_kmax = 256;
  std::optional<OutputFormat> format;  // unset: each command picks its own default
  std::string output_path;  // empty: stdout

  OutputFormat format_or(OutputFormat fallback) const { return format.value_or(fallback); }

  /// Throws DomainError on an unknown key or a malformed value.
  void set(std::string_view key, std::string_view value);

  /// Throws DomainError unless tolerances > 0, cutoffs >= 2 and quadrature_order >= 2.
  void validate() const;
};

/// key = value lines; '#' starts a comment. Keys: identity_tol, algebra_tol,
/// quadrature_order, fock_cutoff, series_Kmax, format, output.
RunConfig parse_config(std::istream& in, RunConfig base = {});

/// Throws IoError if the file cannot be read.
RunConfig load_config(const std::string& path, RunConfig base = {});

std::string_view name(OutputFormat f);

}  // namespace entosc

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

#include "entosc/run_config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <string>

#include "entosc/errors.hpp"

namespace entosc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view v) {
  try {
    std::size_t used = 0;
    const std::string str(v);
    const double d = std::stod(str, &used);
    if (used == str.size()) return d;
  } catch (const std::exception&) {
  }
  throw DomainError("config value for " + std::string(key) + " is not a number: " + std::string(v));
}

int to_int(std::string_view key, std::string_view v) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw DomainError("config value for " + std::string(key) + " is not an integer: " + std::string(v));
  }
  return out;
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value) {
  if (key == "identity_tol") {
    identity_tol = to_double(key, value);
  } else if (key == "algebra_tol") {
    algebra_tol = to_double(key, value);
  } else if (key == "quadrature_order") {
    quadrature_order = to_int(key, value);
  } else if (key == "fock_cutoff") {
    fock_cutoff = to_int(key, value);
  } else if (key == "series_Kmax") {
    series_kmax = to_int(key, value);
  } else if (key == "format") {
    if (value == "csv") {
      format = OutputFormat::csv;
    } else if (value == "json") {
      format = OutputFormat::json;
    } else {
      throw DomainError("format must be csv or json, got " + std::string(value));
    }
  } else if (key == "output") {
    output_path = std::string(value);
  } else {
    throw DomainError("unknown config key " + std::string(key));
  }
}

void RunConfig::validate() const {
  if (!(identity_tol > 0.0) || !(algebra_tol > 0.0)) throw DomainError("tolerances must be > 0");
  if (quadrature_order < 2) throw DomainError("quadrature_order must be >= 2");
  if (fock_cutoff < 2 || series_kmax < 2) throw DomainError("cutoffs must be >= 2");
}

RunConfig parse_config(std::istream& in, RunConfig cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(lineno) + " has no '='");
    }
    cfg.set(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  return parse_config(in, std::move(base));
}

std::string_view name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

}  // namespace entosc

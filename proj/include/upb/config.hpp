// Copyright 2026 The UPB Dimer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Run configuration: an INI file with sections [dimer], [drive],
// [numerics], [output], [grid.<name>] and one section per subcommand.
// Command-line flags override file values.

namespace upb {

struct GridRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  std::vector<double> values() const;
  /// Throws ConfigError unless count >= 1 and stop >= start.
  void validate(const std::string& name) const;
};

/// Values set explicitly in a file or on the command line. Unset fields
/// fall back to the defaults of the subcommand being run.
struct RunConfig {
  std::optional<double> hopping;      // J
  std::optional<double> kerr;         // U
  std::optional<double> detuning;     // Delta
  std::optional<double> decay;        // gamma
  std::optional<double> cross_kerr;   // Ux
  std::optional<double> detuning_mismatch;
  std::optional<double> decay_mismatch;
  std::optional<double> kerr_mismatch;
  std::optional<double> amplitude;    // F1
  std::optional<double> phase_deg;    // phi
  std::optional<double> ratio;
  std::optional<double> pulse_width;  // sigma
  std::optional<int> cutoff;          // Ncut
  std::optional<std::string> output_path;
  std::map<std::string, GridRange> grids;
  /// Keys of subcommand sections, stored as "section.key".
  std::map<std::string, std::string> options;

  std::optional<std::string> option(const std::string& section, const std::string& key) const;
  /// Fields set in `over` replace those in this config.
  void merge(const RunConfig& over);
};

/// Throws ConfigError on syntax errors, unknown keys or invalid values.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

}  // namespace upb

// Copyright 2026 The qwr Authors
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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwr/coin.hpp"
#include "qwr/resonator.hpp"

namespace qwr {

/// Validation or syntax failure tied to one configuration key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// One batch run. Text form is `key = value` per line, `#` starts a comment:
///
///   scenario        registered scenario id (required)
///   coin            none | qwp:<deg> | hwp:<deg>
///   sweep_deg       comma list of plate angles; runs the walk once per angle
///   initial_hwp_deg half-wave plate preparing the coin from |V>
///   q               q-plate charge, 2q a nonzero integer
///   steps           walk steps, >= 0
///   output_dir      where files go (default out/<scenario>)
///   cavity.*        round_trip_ns, transmission, pulse_window_ns, gate_width_ns,
///                   pulse_a, pulse_b_ns, pulse_c_ns, pulse_k; any key enables the cavity
///   sorters         comma list of sorter presets
///   sorter.lmin, sorter.lmax   detected OAM range
struct ScenarioConfig {
  std::string scenario;
  std::optional<WaveplateSpec> coin;
  std::vector<double> sweep_deg;
  double initial_hwp_deg = 0.0;
  double q = 0.5;
  int steps = 0;
  std::string output_dir;
  std::optional<CavityConfig> cavity;
  std::vector<std::string> sorters;
  int sorter_lmin = -7;
  int sorter_lmax = 7;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Throws ConfigError naming the offending key (line numbers in the message).
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);
/// Canonical text; parse_config(emit_config(c)) == c.
std::string emit_config(const ScenarioConfig& cfg);
/// Cross-field checks shared by parse_config and run_scenario.
void validate_config(const ScenarioConfig& cfg);

}  // namespace qwr

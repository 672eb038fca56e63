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

#include <filesystem>
#include <string>
#include <vector>

#include "qwr/config.hpp"

namespace qwr {

enum class ScenarioKind { Walk, SorterCrosstalk, SorterPositions };

struct ScenarioInfo {
  std::string id;
  ScenarioKind kind;
  std::string description;
  ScenarioConfig defaults;
};

const std::vector<ScenarioInfo>& scenario_registry();
/// Throws ConfigError("scenario", ...) for unknown ids.
const ScenarioInfo& find_scenario(const std::string& id);

/// Output directory after applying the QWR_OUTPUT_DIR override
/// ($QWR_OUTPUT_DIR/<scenario> when set).
std::filesystem::path resolve_output_dir(const ScenarioConfig& cfg);

/// Runs the scenario and writes its files; returns the paths written, sorted.
/// Output is byte-identical for identical configs.
std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& cfg);

}  // namespace qwr

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

// qwr: run walk, cavity and sorter scenarios from config files.
//
//   qwr list-scenarios
//   qwr run configs/hadamard-symmetric.cfg
//   qwr verify
//
// QWR_OUTPUT_DIR=<dir> sends a run's files to <dir>/<scenario>.

#include <CLI11.hpp>

#include <iostream>

#include "qwr/config.hpp"
#include "qwr/scenario.hpp"
#include "qwr/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Quantum walks in a ring resonator: walk, cavity readout and OAM sorter simulation"};
  app.require_subcommand(1);

  std::string config_path;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "run the scenario described by a config file");
  run->add_option("config", config_path, "scenario config (key = value)")->required()->check(CLI::ExistingFile);
  run->add_flag("-q,--quiet", quiet, "do not list written files");

  auto* list = app.add_subcommand("list-scenarios", "print registered scenario ids");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& s : qwr::scenario_registry()) std::cout << s.id << "\t" << s.description << "\n";
      return 0;
    }
    if (*verify) {
      int failed = 0;
      for (const auto& r : qwr::run_invariant_suite()) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " -- " << r.detail << "\n";
        failed += r.passed ? 0 : 1;
      }
      return failed == 0 ? 0 : 1;
    }
    if (*run) {
      const qwr::ScenarioConfig cfg = qwr::load_config(config_path);
      const auto files = qwr::run_scenario(cfg);
      if (!quiet) {
        for (const auto& f : files) std::cout << f.string() << "\n";
      }
      std::cerr << cfg.scenario << ": wrote " << files.size() << " files to "
                << qwr::resolve_output_dir(cfg).string() << "\n";
      return 0;
    }
  } catch (const qwr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

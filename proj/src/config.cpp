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

#include "qwr/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qwr/csv.hpp"
#include "qwr/scenario.hpp"
#include "qwr/sorter.hpp"

namespace qwr {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    const double d = parse_double(v);
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite");
    return d;
  } catch (const std::invalid_argument&) {
    throw ConfigError(key, "expected a finite number, got '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const char* first = v.data();
  const char* last = first + v.size();
  if (first != last && *first == '+') ++first;
  const auto r = std::from_chars(first, last, out);
  if (r.ec != std::errc{} || r.ptr != last || first == last) {
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  }
  return out;
}

std::optional<WaveplateSpec> to_coin(const std::string& key, const std::string& v) {
  if (v == "none") return std::nullopt;
  const auto colon = v.find(':');
  if (colon != std::string::npos) {
    const std::string kind = v.substr(0, colon);
    const double deg = to_double(key, v.substr(colon + 1));
    if (kind == "qwp") return WaveplateSpec(PlateKind::Quarter, deg);
    if (kind == "hwp") return WaveplateSpec(PlateKind::Half, deg);
  }
  throw ConfigError(key, "expected none, qwp:<deg> or hwp:<deg>, got '" + v + "'");
}

std::string coin_text(const std::optional<WaveplateSpec>& c) {
  if (!c) return "none";
  return std::string(c->kind() == PlateKind::Quarter ? "qwp:" : "hwp:") + format_double(c->theta_deg());
}

CavityConfig& cavity_of(ScenarioConfig& cfg) {
  if (!cfg.cavity) cfg.cavity = CavityConfig{};
  return *cfg.cavity;
}

}  // namespace

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.scenario.empty()) throw ConfigError("scenario", "missing");
  const ScenarioInfo& info = find_scenario(cfg.scenario);
  if (cfg.steps < 0) throw ConfigError("steps", "must be >= 0");
  if (cfg.steps > 10000) throw ConfigError("steps", "must be <= 10000");
  try {
    QPlateSpec qp(cfg.q);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("q", e.what());
  }
  if (cfg.cavity) {
    try {
      cfg.cavity->validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("cavity", e.what());
    }
  }
  for (const std::string& s : cfg.sorters) {
    try {
      SorterDesign::preset(s);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("sorters", e.what());
    }
  }
  if (cfg.sorter_lmax < cfg.sorter_lmin) throw ConfigError("sorter.lmax", "must be >= sorter.lmin");
  if (info.kind != ScenarioKind::Walk && cfg.sorters.empty()) {
    throw ConfigError("sorters", "scenario '" + cfg.scenario + "' needs at least one sorter preset");
  }
  if (info.kind == ScenarioKind::Walk && !cfg.sorters.empty()) {
    const long reach = static_cast<long>(cfg.steps) * static_cast<long>(std::lround(std::abs(2.0 * cfg.q)));
    if (-reach < cfg.sorter_lmin || reach > cfg.sorter_lmax) {
      throw ConfigError("sorter.lmin", "detected range must cover the walk's reach [-" +
                                           std::to_string(reach) + ", " + std::to_string(reach) + "]");
    }
  }
  if (!cfg.sweep_deg.empty() && !cfg.coin) {
    throw ConfigError("sweep_deg", "needs a plate kind from 'coin' (qwp:... or hwp:...)");
  }
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::map<std::string, int> seen;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (auto [it, fresh] = seen.emplace(key, lineno); !fresh) {
      throw ConfigError(key, "duplicate key (lines " + std::to_string(it->second) + " and " +
                                 std::to_string(lineno) + ")");
    }
    if (val.empty()) throw ConfigError(key, "empty value");

    try {
      if (key == "scenario") cfg.scenario = val;
      else if (key == "coin") cfg.coin = to_coin(key, val);
      else if (key == "sweep_deg") {
        for (const std::string& s : split_list(val)) cfg.sweep_deg.push_back(to_double(key, s));
      } else if (key == "initial_hwp_deg") cfg.initial_hwp_deg = to_double(key, val);
      else if (key == "q") cfg.q = to_double(key, val);
      else if (key == "steps") cfg.steps = to_int(key, val);
      else if (key == "output_dir") cfg.output_dir = val;
      else if (key == "cavity.round_trip_ns") cavity_of(cfg).round_trip_ns = to_double(key, val);
      else if (key == "cavity.transmission") cavity_of(cfg).transmission = to_double(key, val);
      else if (key == "cavity.pulse_window_ns") cavity_of(cfg).pulse_window_ns = to_double(key, val);
      else if (key == "cavity.gate_width_ns") cavity_of(cfg).gate_width_ns = to_double(key, val);
      else if (key == "cavity.pulse_a") cavity_of(cfg).pulse.a = to_double(key, val);
      else if (key == "cavity.pulse_b_ns") cavity_of(cfg).pulse.b_ns = to_double(key, val);
      else if (key == "cavity.pulse_c_ns") cavity_of(cfg).pulse.c_ns = to_double(key, val);
      else if (key == "cavity.pulse_k") cavity_of(cfg).pulse.k = to_double(key, val);
      else if (key == "sorters") cfg.sorters = split_list(val);
      else if (key == "sorter.lmin") cfg.sorter_lmin = to_int(key, val);
      else if (key == "sorter.lmax") cfg.sorter_lmax = to_int(key, val);
      else throw ConfigError(key, "unknown key (line " + std::to_string(lineno) + ")");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }
  }
  if (cfg.output_dir.empty() && !cfg.scenario.empty()) cfg.output_dir = "out/" + cfg.scenario;
  validate_config(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string emit_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  const auto kv = [&out](const std::string& k, const std::string& v) { out << k << " = " << v << '\n'; };
  const auto join = [](const auto& items, auto fmt) {
    std::string s;
    for (const auto& it : items) {
      if (!s.empty()) s += ", ";
      s += fmt(it);
    }
    return s;
  };
  kv("scenario", cfg.scenario);
  kv("coin", coin_text(cfg.coin));
  if (!cfg.sweep_deg.empty()) kv("sweep_deg", join(cfg.sweep_deg, [](double d) { return format_double(d); }));
  kv("initial_hwp_deg", format_double(cfg.initial_hwp_deg));
  kv("q", format_double(cfg.q));
  kv("steps", std::to_string(cfg.steps));
  if (!cfg.output_dir.empty()) kv("output_dir", cfg.output_dir);
  if (cfg.cavity) {
    const CavityConfig& c = *cfg.cavity;
    kv("cavity.round_trip_ns", format_double(c.round_trip_ns));
    kv("cavity.transmission", format_double(c.transmission));
    kv("cavity.pulse_window_ns", format_double(c.pulse_window_ns));
    kv("cavity.gate_width_ns", format_double(c.gate_width_ns));
    kv("cavity.pulse_a", format_double(c.pulse.a));
    kv("cavity.pulse_b_ns", format_double(c.pulse.b_ns));
    kv("cavity.pulse_c_ns", format_double(c.pulse.c_ns));
    kv("cavity.pulse_k", format_double(c.pulse.k));
  }
  if (!cfg.sorters.empty()) kv("sorters", join(cfg.sorters, [](const std::string& s) { return s; }));
  kv("sorter.lmin", std::to_string(cfg.sorter_lmin));
  kv("sorter.lmax", std::to_string(cfg.sorter_lmax));
  return out.str();
}

}  // namespace qwr

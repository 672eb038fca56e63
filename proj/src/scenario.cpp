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

#include "qwr/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "qwr/csv.hpp"
#include "qwr/sorter.hpp"
#include "qwr/walk.hpp"

namespace qwr {
namespace fs = std::filesystem;
namespace {

ScenarioConfig walk_defaults(std::string id, std::optional<WaveplateSpec> coin, double hwp, int steps) {
  ScenarioConfig c;
  c.scenario = id;
  c.coin = coin;
  c.initial_hwp_deg = hwp;
  c.steps = steps;
  c.output_dir = "out/" + id;
  return c;
}

ScenarioConfig sorter_defaults(std::string id, int lmin, int lmax) {
  ScenarioConfig c;
  c.scenario = id;
  c.output_dir = "out/" + id;
  c.sorters = {"refractive", "diffractive-1copy", "diffractive-3copy"};
  c.sorter_lmin = lmin;
  c.sorter_lmax = lmax;
  return c;
}

std::vector<ScenarioInfo> make_registry() {
  const WaveplateSpec qwp45(PlateKind::Quarter, 45.0);
  // HWP at 67.5 deg turns |V> into the diagonal state, 45 deg into |H>.
  constexpr double kDiagonal = 67.5, kHorizontal = 45.0;
  std::vector<ScenarioInfo> r;
  r.push_back({"hadamard-symmetric", ScenarioKind::Walk,
               "Hadamard walk (QWP at 45 deg) from diagonal polarization",
               walk_defaults("hadamard-symmetric", qwp45, kDiagonal, 8)});
  r.push_back({"hadamard-asymmetric", ScenarioKind::Walk,
               "Hadamard walk from horizontal polarization; weight drifts to negative l",
               walk_defaults("hadamard-asymmetric", qwp45, kHorizontal, 5)});
  {
    ScenarioConfig c = walk_defaults("qwp-sweep", qwp45, kHorizontal, 5);
    c.sweep_deg = {45.0, 90.0, 135.0};
    r.push_back({"qwp-sweep", ScenarioKind::Walk, "QWP coin angle sweep 45/90/135 deg from horizontal input", c});
  }
  r.push_back({"identity-coin", ScenarioKind::Walk, "HWP at 0 deg: ballistic split to l = +-n",
               walk_defaults("identity-coin", WaveplateSpec(PlateKind::Half, 0.0), kDiagonal, 5)});
  r.push_back({"not-coin", ScenarioKind::Walk, "bare q-plate: period-2 confinement at l = 0, +-1",
               walk_defaults("not-coin", std::nullopt, kDiagonal, 5)});
  {
    ScenarioConfig c = walk_defaults("overlap-correction", qwp45, kDiagonal, 5);
    c.cavity = CavityConfig{};
    r.push_back({"overlap-correction", ScenarioKind::Walk,
                 "Hadamard walk through the gated cavity readout, then deconvolved", c});
  }
  r.push_back({"sorter-crosstalk", ScenarioKind::SorterCrosstalk,
               "crosstalk matrices of the three sorter designs", sorter_defaults("sorter-crosstalk", -7, 7)});
  r.push_back({"sorter-positions", ScenarioKind::SorterPositions,
               "spot centroid versus l with a line fit", sorter_defaults("sorter-positions", -5, 5)});
  return r;
}

std::string step_name(int n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step_%03d.csv", n);
  return buf;
}

std::string plate_dir(const WaveplateSpec& p) {
  return std::string(p.kind() == PlateKind::Quarter ? "qwp_" : "hwp_") + format_double(p.theta_deg());
}

Spectrum embed(const Spectrum& s, int lmin, int lmax) {
  std::vector<double> w(static_cast<std::size_t>(lmax - lmin + 1), 0.0);
  for (int l = s.lmin(); l <= s.lmax(); ++l) w[static_cast<std::size_t>(l - lmin)] = s.at(l);
  return Spectrum(lmin, std::move(w));
}

Spectrum detect(const Spectrum& ideal, const CrosstalkMatrix& m) {
  std::vector<double> w(static_cast<std::size_t>(m.size()), 0.0);
  for (int l = m.lmin; l <= m.lmax; ++l) {
    const double p = ideal.at(l);
    if (p == 0.0) continue;
    for (int k = m.lmin; k <= m.lmax; ++k) w[static_cast<std::size_t>(k - m.lmin)] += p * m.at(l, k);
  }
  return Spectrum(m.lmin, std::move(w));
}

struct Writer {
  fs::path root;
  std::vector<fs::path> written;
  void spectrum(const fs::path& rel, const Spectrum& s) {
    emit_spectrum_csv(s, root / rel);
    written.push_back(root / rel);
  }
  void table(const fs::path& rel, const std::vector<std::string>& header,
             const std::vector<std::vector<std::string>>& rows) {
    write_csv(root / rel, header, rows);
    written.push_back(root / rel);
  }
};

void run_walk(const ScenarioConfig& cfg, const std::optional<WaveplateSpec>& plate,
              const std::vector<std::pair<std::string, CrosstalkMatrix>>& detectors, Writer& out,
              const fs::path& sub) {
  const QPlateSpec qp(cfg.q);
  const auto states =
      evolve_auto(WalkerState::localized(0, prepared_coin_state(cfg.initial_hwp_deg)), plate, qp, cfg.steps);
  StepSeries ideal;
  for (const WalkerState& s : states) ideal.push_back(probabilities(s));

  std::vector<std::string> header{"step", "mean_ideal", "variance_ideal"};
  StepSeries conv, deconv;
  if (cfg.cavity) {
    conv = convolve_steps(ideal, *cfg.cavity);
    deconv = deconvolve_series(conv, *cfg.cavity);
    for (const char* h : {"variance_convolved", "variance_deconvolved", "similarity_convolved",
                          "similarity_deconvolved"}) {
      header.emplace_back(h);
    }
  }
  for (const auto& [name, m] : detectors) header.push_back("similarity_detected_" + name);

  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n <= cfg.steps; ++n) {
    const Spectrum& p = ideal[static_cast<std::size_t>(n)];
    out.spectrum(sub / "ideal" / step_name(n), p);
    std::vector<std::string> row{std::to_string(n), format_double(mean(p)), format_double(variance(p))};
    if (cfg.cavity) {
      const Spectrum& c = conv[static_cast<std::size_t>(n)];
      const Spectrum& d = deconv[static_cast<std::size_t>(n)];
      out.spectrum(sub / "convolved" / step_name(n), c);
      out.spectrum(sub / "deconvolved" / step_name(n), d);
      row.push_back(format_double(variance(c)));
      row.push_back(format_double(variance(d)));
      row.push_back(format_double(similarity(c, p)));
      row.push_back(format_double(similarity(d, p)));
    }
    for (const auto& [name, m] : detectors) {
      const Spectrum det = detect(p, m).normalized();
      out.spectrum(sub / ("detected_" + name) / step_name(n), det);
      row.push_back(format_double(similarity(det, embed(p, m.lmin, m.lmax))));
    }
    rows.push_back(std::move(row));
  }
  out.table(sub / "summary.csv", header, rows);
}

void run_crosstalk(const ScenarioConfig& cfg, Writer& out) {
  std::vector<std::vector<std::string>> summary;
  for (const std::string& name : cfg.sorters) {
    const CrosstalkMatrix m = crosstalk_matrix(SorterDesign::preset(name), cfg.sorter_lmin, cfg.sorter_lmax);
    std::vector<std::vector<std::string>> rows;
    for (int l = m.lmin; l <= m.lmax; ++l) {
      for (int k = m.lmin; k <= m.lmax; ++k) {
        rows.push_back({std::to_string(l), std::to_string(k), format_double(m.at(l, k))});
      }
    }
    out.table("crosstalk_" + name + ".csv", {"input_l", "detected_l", "fraction"}, rows);
    summary.push_back({name, format_double(m.mean_diagonal()), format_double(m.mean_offdiagonal())});
  }
  out.table("summary.csv", {"sorter", "mean_diagonal", "mean_offdiagonal"}, summary);
}

void run_positions(const ScenarioConfig& cfg, Writer& out) {
  std::vector<std::vector<std::string>> summary;
  for (const std::string& name : cfg.sorters) {
    const SorterDesign design = SorterDesign::preset(name);
    const ModeSorter sorter(design);
    std::vector<double> ls, ts;
    std::vector<std::vector<std::string>> rows;
    for (int l = cfg.sorter_lmin; l <= cfg.sorter_lmax; ++l) {
      const double t = sorter.centroid(l);
      ls.push_back(l);
      ts.push_back(t);
      rows.push_back({std::to_string(l), format_double(t), format_double(spot_position(design, l))});
    }
    out.table("positions_" + name + ".csv", {"l", "centroid_m", "design_m"}, rows);
    const LineFit fit = fit_line(ls, ts);
    const double pitch = design.spot_pitch();
    summary.push_back({name, format_double(fit.slope), format_double(pitch),
                       format_double(std::abs(fit.slope - pitch) / pitch), format_double(fit.r_squared)});
  }
  out.table("summary.csv", {"sorter", "slope_m_per_l", "design_m_per_l", "relative_slope_error", "r_squared"},
            summary);
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> registry = make_registry();
  return registry;
}

const ScenarioInfo& find_scenario(const std::string& id) {
  for (const ScenarioInfo& s : scenario_registry()) {
    if (s.id == id) return s;
  }
  std::string known;
  for (const ScenarioInfo& s : scenario_registry()) known += (known.empty() ? "" : ", ") + s.id;
  throw ConfigError("scenario", "unknown scenario '" + id + "' (known: " + known + ")");
}

fs::path resolve_output_dir(const ScenarioConfig& cfg) {
  if (const char* env = std::getenv("QWR_OUTPUT_DIR"); env && *env) return fs::path(env) / cfg.scenario;
  return cfg.output_dir.empty() ? fs::path("out") / cfg.scenario : fs::path(cfg.output_dir);
}

std::vector<fs::path> run_scenario(const ScenarioConfig& cfg) {
  validate_config(cfg);
  Writer out{resolve_output_dir(cfg), {}};
  fs::create_directories(out.root);
  {
    const fs::path p = out.root / "resolved.cfg";
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    f << emit_config(cfg);
    if (!f) throw std::runtime_error("write failed: " + p.string());
    out.written.push_back(p);
  }

  switch (find_scenario(cfg.scenario).kind) {
    case ScenarioKind::Walk: {
      std::vector<std::pair<std::string, CrosstalkMatrix>> detectors;
      for (const std::string& name : cfg.sorters) {
        detectors.emplace_back(name, crosstalk_matrix(SorterDesign::preset(name), cfg.sorter_lmin, cfg.sorter_lmax));
      }
      if (cfg.sweep_deg.empty()) {
        run_walk(cfg, cfg.coin, detectors, out, {});
      } else {
        for (double deg : cfg.sweep_deg) {
          const WaveplateSpec plate(cfg.coin->kind(), deg);
          run_walk(cfg, plate, detectors, out, plate_dir(plate));
        }
      }
      break;
    }
    case ScenarioKind::SorterCrosstalk:
      run_crosstalk(cfg, out);
      break;
    case ScenarioKind::SorterPositions:
      run_positions(cfg, out);
      break;
  }
  std::sort(out.written.begin(), out.written.end());
  return out.written;
}

}  // namespace qwr

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

#include <stdexcept>
#include <string>
#include <vector>

#include "qwr/field.hpp"
#include "qwr/spectrum.hpp"

namespace qwr {

/// Raised when an element's phase gradient is not resolved by the grid.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Log-polar sorter with an optional fan-out (copying) term on the unwrapper.
/// Lengths in metres. Fan-out orders m = -N..N are stored at index m + N.
struct SorterDesign {
  std::string name;
  double d = 0.0;           // unwrapped beam length
  double b = 0.0;           // translation parameter
  double f = 0.0;           // transforming focal length
  double wavelength = 0.0;
  int copies = 1;           // N_c = 2N + 1
  double omega = 0.0;       // angular separation between copies (rad)
  std::vector<double> gammas{1.0};
  std::vector<double> alphas{0.0};

  /// Recommended sampling: grid size and samples per spot pitch.
  int grid_n = 1024;
  int oversample = 4;

  int half_orders() const { return (copies - 1) / 2; }
  /// lambda f / d
  double spot_pitch() const { return wavelength * f / d; }

  /// Throws std::invalid_argument on nonpositive lengths, even copy count or
  /// fan-out tables of the wrong size.
  void validate() const;

  static SorterDesign refractive();
  static SorterDesign diffractive_1copy();
  static SorterDesign diffractive_3copy();
  /// Looks up "refractive", "diffractive-1copy" or "diffractive-3copy".
  static SorterDesign preset(const std::string& name);
};

/// Symmetric fan-out tables (gamma_0 = 1, alpha_0 = 0) maximizing the power
/// in the central `copies` orders subject to equal order intensities.
struct FanoutSolution {
  std::vector<double> gammas;
  std::vector<double> alphas;
  double efficiency = 0.0;    // power in the wanted orders
  double nonuniformity = 0.0; // (max - min) / max over the wanted orders
};
FanoutSolution optimize_fanout(int copies);

/// Complex amplitudes of diffraction orders -M..M of exp(i fanout_phase).
std::vector<cplx> fanout_order_amplitudes(const SorterDesign& design, int max_order);

/// Grid matching the design's recommended sampling: pitch lambda f /(d * oversample).
FieldGrid design_grid(const SorterDesign& design);
FieldGrid design_grid(const SorterDesign& design, int n, int oversample);

/// r^|l| exp(-r^2/w0^2) exp(i l phi), unit power. Throws std::invalid_argument
/// when w0 exceeds a third of the grid half-extent.
FieldGrid oam_mode(const FieldGrid& grid, int l, double w0);

/// (d / lambda f) [y atan2(y, x) - x ln(r / b) + x]; 0 at the origin.
double unwrapper_phase(const SorterDesign& design, double x, double y);
/// (d b / lambda f) exp(-2 pi u / d) cos(2 pi v / d).
double corrector_phase(const SorterDesign& design, double u, double v);
/// atan2(sum gamma_m sin(k m y + alpha_m), sum gamma_m cos(k m y + alpha_m)), k = 2 pi omega / lambda.
double fanout_phase(const SorterDesign& design, double y);

/// Precomputed element masks for one design on one grid.
class ModeSorter {
 public:
  /// Throws SamplingError when the first element's phase is under-sampled.
  ModeSorter(SorterDesign design, const FieldGrid& geometry);
  explicit ModeSorter(const SorterDesign& design) : ModeSorter(design, design_grid(design)) {}

  const SorterDesign& design() const { return design_; }
  /// Zero field with the input-plane geometry.
  const FieldGrid& input_geometry() const { return geometry_; }
  double waist() const { return design_.b; }

  /// Unwrapper (+ fan-out), lens, corrector, lens. Input must match the geometry.
  FieldGrid run(const FieldGrid& input) const;

  /// Detection-plane intensity integrated across x, against t = y.
  std::vector<double> profile(const FieldGrid& detected) const;
  std::vector<double> profile_coordinates() const;

  /// Detected OAM spectrum of a pure input mode, binned over [lmin, lmax].
  Spectrum sort_mode(int l, int lmin, int lmax) const;
  /// Intensity-weighted position within 1.5 spot pitches of the brightest sample.
  double centroid(int l) const;

  /// Largest |grad phase| * pitch over the first element (rad per sample).
  double max_phase_step() const { return max_step_; }

 private:
  SorterDesign design_;
  FieldGrid geometry_;
  std::vector<cplx> element1_;
  std::vector<cplx> element2_;
  double max_step_ = 0.0;
};

FieldGrid sorter_pipeline(const FieldGrid& input, const SorterDesign& design);

/// t = lambda f l / d
double spot_position(const SorterDesign& design, int l);

/// Integrates the profile over [t(l) - p/2, t(l) + p/2] (fractional sample
/// overlap) and normalizes over the range. Throws std::invalid_argument when the
/// bins leave the grid.
Spectrum bin_spectrum(const std::vector<double>& profile, const std::vector<double>& t,
                      const SorterDesign& design, int lmin, int lmax);
Spectrum bin_spectrum(const FieldGrid& detected, const SorterDesign& design, int lmin, int lmax);

double spot_centroid(const std::vector<double>& profile, const std::vector<double>& t,
                     double pitch);

/// Row l - lmin is the normalized detected spectrum of input mode l.
struct CrosstalkMatrix {
  int lmin = 0;
  int lmax = 0;
  std::vector<std::vector<double>> rows;

  int size() const { return lmax - lmin + 1; }
  double at(int input_l, int detected_l) const {
    return rows[static_cast<std::size_t>(input_l - lmin)][static_cast<std::size_t>(detected_l - lmin)];
  }
  /// Mean over rows of the weight off the diagonal.
  double mean_offdiagonal() const;
  double mean_diagonal() const;
};

CrosstalkMatrix crosstalk_matrix(const ModeSorter& sorter, int lmin, int lmax);
CrosstalkMatrix crosstalk_matrix(const SorterDesign& design, int lmin, int lmax);

/// [sum sqrt(a b)]^2 / (sum a * sum b). Throws std::invalid_argument on
/// mismatched supports and std::domain_error on a zero total.
double similarity(const Spectrum& w_exp, const Spectrum& w_th);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
/// Ordinary least squares. Throws std::invalid_argument with fewer than two points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qwr

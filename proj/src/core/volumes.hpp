////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of thermocone                                           //
//                                                                            //
//  Copyright 2026 thermocone developers                                      //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#pragma once

// Relative volumes of the future, past and incomparable regions.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "sampling.hpp"
#include "simplex.hpp"

namespace thermocone {

enum class VolumeMethod { ClosedForm, ExactHull, MonteCarlo };

const char* to_string(VolumeMethod m) noexcept;

// Fractions of the simplex; NaN marks a value that was not computed.
struct VolumeReport {
  static constexpr double kNotComputed = std::numeric_limits<double>::quiet_NaN();

  double v_future = kNotComputed;
  double v_past = kNotComputed;
  double v_incomparable = kNotComputed;
  VolumeMethod method = VolumeMethod::ClosedForm;
  std::uint64_t samples = 0;
  double se_future = 0.0;
  double se_past = 0.0;
  double se_incomparable = 0.0;
};

inline constexpr std::size_t kDefaultSamples = 1000000;

// d = 3 at uniform Gibbs weights.
VolumeReport closed_form_d3(const ProbVector& p);

// Future volume from the vertex list: shoelace for d = 3, face-lattice
// recursion up to kMaxExactVolumeDim.
VolumeReport exact_future_volume(const ProbVector& p, const GibbsContext& ctx);

VolumeReport mc_volumes(const ProbVector& p, const GibbsContext& ctx, std::size_t n, std::uint64_t seed);

// Classifies a fixed sample set against p. Entanglement order swaps the
// future and past labels.
enum class Orientation { Thermodynamic, Entanglement };
VolumeReport volumes_from_samples(const ProbVector& p, const GibbsContext& ctx, const SampleSet& samples,
                                  Orientation orientation = Orientation::Thermodynamic);

// Chooses closed form at d = 3 with uniform weights, Monte Carlo otherwise.
enum class MethodChoice { Auto, ClosedForm, ExactHull, MonteCarlo };
struct VolumeOptions {
  MethodChoice method = MethodChoice::Auto;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
};
VolumeReport compute_volumes(const ProbVector& p, const GibbsContext& ctx, const VolumeOptions& opt);

struct SweepRow {
  double beta = 0.0;
  std::size_t permutation = 0;
  std::vector<double> state;
  BetaOrder order;
  // The beta order differs from the one at the previous beta of this row's
  // permutation.
  bool order_changed = false;
  bool passive = false;
  bool maximally_active = false;
  VolumeReport report;
};

// Volumes of every distinct permutation of p at each beta. One sample set is
// shared across all rows (common random numbers).
std::vector<SweepRow> volume_sweep(const ProbVector& p, const std::vector<double>& energies,
                                   const std::vector<double>& betas, const VolumeOptions& opt);

struct GridRow {
  std::vector<double> state;
  VolumeReport report;
};

// Regular barycentric grid over the d = 3 simplex, resolution steps per side.
std::vector<GridRow> isovolumetric_grid(const GibbsContext& ctx, std::size_t resolution,
                                        const VolumeOptions& opt);

}  // namespace thermocone

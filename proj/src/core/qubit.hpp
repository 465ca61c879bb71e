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

// Coherent cones of a qubit in the XZ cross-section of the Bloch ball, under
// Gibbs-preserving operations (GP) and thermal operations (TO).
//
// A state is written either as a Bloch vector (x, y, z) or as the matrix
// [[p, c], [c, 1 - p]], with p the ground population and c the real
// coherence: p = (1 + z) / 2, c = x / 2.

#include <cstddef>
#include <optional>
#include <vector>

#include "common.hpp"

namespace thermocone {

struct BlochState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Rejects vectors longer than one (slack 1e-12).
void validate(const BlochState& s);

// Rotates about the z axis so that y = 0 and x >= 0.
BlochState rotate_to_xz(const BlochState& s);

class QubitThermalContext {
 public:
  // zeta is the Gibbs z coordinate, in [0, 1).
  explicit QubitThermalContext(double zeta);
  static QubitThermalContext from_gamma(double gamma_ground);

  double zeta() const noexcept { return zeta_; }
  double gamma_ground() const noexcept { return (1.0 + zeta_) / 2.0; }

 private:
  double zeta_;
};

struct PopCoherence {
  double p = 0.0;
  double c = 0.0;
};

// Requires |y| <= 1e-12.
PopCoherence to_population_coherence(const BlochState& s);
BlochState to_bloch(const PopCoherence& s);

// Point (d, q) of the (coherence, ground population) plane.
struct QubitPoint {
  double d = 0.0;
  double q = 0.0;
};

inline constexpr std::size_t kDefaultPolylinePoints = 1024;

// ---- Gibbs-preserving operations ----

struct GpQuantities {
  double delta = 0.0;
  double r_plus = 0.0;
  double r_minus = 0.0;
  // Disk radii and the z coordinates of their centres (x = y = 0).
  double r1 = 0.0;
  double r2 = 0.0;
  double centre1 = 0.0;
  double centre2 = 0.0;
};

GpQuantities gp_quantities(const BlochState& s, const QubitThermalContext& ctx);

// Where target sits relative to source: Future iff both R+ and R- of the
// target are no larger, Past iff both are no smaller.
Relation gp_classify(const BlochState& target, const BlochState& source, const QubitThermalContext& ctx);

// Same future test through the two disks, as a cross-check of the radii.
bool gp_disk_future(const BlochState& target, const BlochState& source, const QubitThermalContext& ctx);

// Boundary circles of the two disks clipped to the Bloch disk, as (x, z).
struct GpBoundary {
  GpQuantities quantities;
  std::vector<BlochState> circle1;
  std::vector<BlochState> circle2;
};
GpBoundary gp_boundary(const BlochState& s, const QubitThermalContext& ctx,
                       std::size_t points = kDefaultPolylinePoints);

// ---- thermal operations ----

// True when a thermal operation maps from into to.
bool to_reachable(const PopCoherence& from, const PopCoherence& to, const QubitThermalContext& ctx);
Relation to_classify(const PopCoherence& target, const PopCoherence& source, const QubitThermalContext& ctx);

// Ground population on the future boundary at target coherence d, |d| <= |c|.
double to_future_q1(const PopCoherence& s, const QubitThermalContext& ctx, double d);
// q1 at each of the given coherences. Needs c != 0 and p != gamma.
std::vector<QubitPoint> to_future_boundary(const PopCoherence& s, const QubitThermalContext& ctx,
                                           const std::vector<double>& d_targets);
// Closed outline of the future: q1 over [-|c|, |c|] and the segment at p.
std::vector<QubitPoint> to_future_region(const PopCoherence& s, const QubitThermalContext& ctx,
                                         std::size_t points = kDefaultPolylinePoints);

// Roots in q of the saturated coherence condition for a past state (q, d)
// that still pass the membership test, split by the side of gamma they lie on.
struct PastBranches {
  std::optional<double> same_side;
  std::optional<double> opposite_side;
};
PastBranches to_past_branches(const PopCoherence& s, const QubitThermalContext& ctx, double d);

// The past in the d >= 0 half; the d < 0 half is its mirror image.
struct ToPastRegion {
  // Where the same-side branch meets the Bloch circle.
  double d_cross = 0.0;
  // Outline bounded by the segment at q = p, the Bloch circle and the
  // same-side branch.
  std::vector<QubitPoint> piece1;
  // Where the opposite-side branch meets the Bloch circle; absent when the
  // branch never reaches a past state.
  std::optional<double> d_min;
  std::optional<double> d_max;
  std::vector<QubitPoint> piece2;
};
// Needs c != 0 and p != gamma.
ToPastRegion to_past_region(const PopCoherence& s, const QubitThermalContext& ctx,
                            std::size_t points = kDefaultPolylinePoints);

// Winding-number test against a closed outline; points on the outline count.
bool inside_outline(const std::vector<QubitPoint>& outline, const QubitPoint& pt);

}  // namespace thermocone

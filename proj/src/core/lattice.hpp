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

// Majorisation join at uniform Gibbs weights and the subset-sum embedding in
// which thermomajorisation becomes a lattice.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "simplex.hpp"

namespace thermocone {

// All 2^d - 1 non-empty subset sums of the Gibbs weights, sorted by
// (sum, cardinality, bitmask).
class EmbeddingGrid {
 public:
  explicit EmbeddingGrid(const GibbsContext& ctx);

  std::size_t base_dim() const noexcept { return d_; }
  std::size_t size() const noexcept { return sums_.size(); }
  const std::vector<double>& sums() const noexcept { return sums_; }
  const std::vector<double>& widths() const noexcept { return widths_; }
  const std::vector<std::uint32_t>& subsets() const noexcept { return masks_; }
  // Grid position of a subset (bitmask over levels, non-empty).
  std::size_t index_of(std::uint32_t mask) const { return position_[mask]; }

 private:
  std::size_t d_;
  std::vector<double> sums_;
  std::vector<double> widths_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::size_t> position_;
};

struct EmbeddedVector {
  std::vector<double> masses;
  std::shared_ptr<const EmbeddingGrid> grid;

  std::size_t size() const noexcept { return masses.size(); }
  const std::vector<double>& widths() const { return grid->widths(); }
};

// Least upper bound under majorisation. Inputs are sorted internally; the
// result is returned sorted non-increasingly.
ProbVector join_uniform(const ProbVector& p, const ProbVector& q, std::size_t* iterations = nullptr);

EmbeddedVector embed(const ProbVector& p, const GibbsContext& ctx);
EmbeddedVector embed(const ProbVector& p, std::shared_ptr<const EmbeddingGrid> grid,
                     const GibbsContext& ctx);
ProbVector project(const EmbeddedVector& v, const BetaOrder& chamber);

// Cumulative masses of u dominate those of v at every grid point.
bool embedded_majorises(const EmbeddedVector& u, const EmbeddedVector& v,
                        double tol = kCurveTolerance);
EmbeddedVector join_embedded(const EmbeddedVector& u, const EmbeddedVector& v,
                             std::size_t* iterations = nullptr);

// Pools adjacent segments until the slopes r_i / w_i are non-increasing.
// Zero-width segments are left untouched. Returns the number of pooling
// steps.
std::size_t flatten_to_concave(std::vector<double>& r, const std::vector<double>& w);

}  // namespace thermocone

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

// Schmidt-coefficient spectra of Haar-random bipartite pure states and cone
// volumes weighted by that measure.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sampling.hpp"
#include "simplex.hpp"
#include "volumes.hpp"

namespace thermocone {

// Pure states of C^N (x) C^M, N <= M. The reduced spectrum follows the
// Laguerre unitary ensemble of size N with parameter M.
struct InducedMeasureSpec {
  std::size_t n_sys = 3;
  std::size_t m_env = 3;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultEntanglementSamples = 50000;
inline constexpr std::size_t kDefaultEntanglementResolution = 60;

void validate(const InducedMeasureSpec& spec);

// One spectrum from the bidiagonal chi-variable model, normalised and sorted
// non-increasingly into out (size N).
void sample_schmidt_one(std::mt19937_64& rng, std::size_t n_sys, std::size_t m_env, std::span<double> out);

SampleSet sample_schmidt(const InducedMeasureSpec& spec, std::size_t n);

// Volumes under the entanglement order: the future holds the states reachable
// by LOCC, i.e. the states majorising p.
VolumeReport entanglement_cone_volumes(const ProbVector& p, const SampleSet& samples);
VolumeReport entanglement_cone_volumes(const ProbVector& p, const InducedMeasureSpec& spec, std::size_t n);

struct EntanglementGridRow {
  std::vector<double> state;
  // Number of distinct permutations of state, i.e. how many grid points of
  // the full simplex this sorted point stands for.
  std::size_t multiplicity = 1;
  VolumeReport report;
};

// Grid over the sorted chamber p_1 >= ... >= p_N with entries k/resolution.
// All rows share one sample set.
std::vector<EntanglementGridRow> iso_entanglement_grid(const InducedMeasureSpec& spec, std::size_t resolution,
                                                       std::size_t n);

}  // namespace thermocone

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

// Reproducible random streams and uniform simplex sampling.
//
// Work is split into a fixed number of streams. Stream k is seeded with
// splitmix64(master + k * 0x9E3779B97F4A7C15) and drives its own mt19937_64,
// so results depend on the master seed only, never on the thread count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace thermocone {

inline constexpr std::size_t kStreamCount = 64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t stream_seed(std::uint64_t master, std::size_t stream) noexcept;

// Number of worker threads: THERMOCONE_THREADS if set, else hardware concurrency.
std::size_t worker_count();

// Samples assigned to a stream when n samples are split over kStreamCount.
std::size_t stream_share(std::size_t n, std::size_t stream) noexcept;
std::size_t stream_offset(std::size_t n, std::size_t stream) noexcept;

// Runs fn(stream) for every stream on a worker pool.
void for_each_stream(const std::function<void(std::size_t)>& fn);

// Flat Dirichlet draw via normalised exponential variates.
void sample_simplex(std::mt19937_64& rng, std::span<double> out);

// n points of the simplex, row-major, generated stream by stream.
struct SampleSet {
  std::size_t dim = 0;
  std::vector<double> data;

  std::size_t size() const noexcept { return dim ? data.size() / dim : 0; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * dim, dim}; }
};

SampleSet uniform_samples(std::size_t d, std::size_t n, std::uint64_t seed);

}  // namespace thermocone

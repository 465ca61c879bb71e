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

#include "sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "common.hpp"

namespace thermocone {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::size_t stream) noexcept {
  return splitmix64(master + static_cast<std::uint64_t>(stream) * 0x9E3779B97F4A7C15ULL);
}

std::size_t worker_count() {
  if (const char* env = std::getenv("THERMOCONE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::size_t stream_share(std::size_t n, std::size_t stream) noexcept {
  return n / kStreamCount + (stream < n % kStreamCount ? 1 : 0);
}

std::size_t stream_offset(std::size_t n, std::size_t stream) noexcept {
  return stream * (n / kStreamCount) + std::min(stream, n % kStreamCount);
}

void for_each_stream(const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), kStreamCount);
  if (workers <= 1) {
    for (std::size_t s = 0; s < kStreamCount; ++s) fn(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto body = [&] {
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= kStreamCount || failed.load()) return;
      try {
        fn(s);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void sample_simplex(std::mt19937_64& rng, std::span<double> out) {
  std::exponential_distribution<double> ex(1.0);
  double s = 0.0;
  for (double& x : out) {
    x = ex(rng);
    s += x;
  }
  for (double& x : out) x /= s;
}

SampleSet uniform_samples(std::size_t d, std::size_t n, std::uint64_t seed) {
  require(d >= 1, ErrorKind::InvalidArgument, "dimension must be positive");
  SampleSet set;
  set.dim = d;
  set.data.resize(d * n);
  for_each_stream([&](std::size_t s) {
    std::mt19937_64 rng(stream_seed(seed, s));
    const std::size_t begin = stream_offset(n, s), count = stream_share(n, s);
    for (std::size_t i = begin; i < begin + count; ++i)
      sample_simplex(rng, std::span<double>(set.data.data() + i * d, d));
  });
  return set;
}

}  // namespace thermocone

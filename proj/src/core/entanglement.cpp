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

#include "entanglement.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>

namespace thermocone {

void validate(const InducedMeasureSpec& spec) {
  require(spec.n_sys >= 1, ErrorKind::InvalidArgument, "subsystem dimension N must be at least 1");
  require(spec.m_env >= spec.n_sys, ErrorKind::InvalidArgument, "environment dimension M must be at least N");
}

namespace {

// chi variable with 2m degrees of freedom, up to the common factor sqrt(2)
// that the normalisation removes.
double chi_even(std::mt19937_64& rng, std::size_t m) {
  std::gamma_distribution<double> g(static_cast<double>(m), 1.0);
  return std::sqrt(g(rng));
}

}  // namespace

void sample_schmidt_one(std::mt19937_64& rng, std::size_t n_sys, std::size_t m_env, std::span<double> out) {
  const std::size_t n = n_sys;
  if (n == 1) {
    out[0] = 1.0;
    return;
  }
  // Lower bidiagonal B: diagonal chi_{2(M-i)}, subdiagonal chi_{2(N-1-i)},
  // i from 0. The spectrum of B B^T is that of G G^dagger.
  Eigen::VectorXd x(n), y(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = chi_even(rng, m_env - i);
  for (std::size_t i = 0; i + 1 < n; ++i) y[i] = chi_even(rng, n - 1 - i);
  Eigen::VectorXd diag(n), sub(n - 1);
  for (std::size_t i = 0; i < n; ++i) diag[i] = x[i] * x[i] + (i ? y[i - 1] * y[i - 1] : 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) sub[i] = y[i] * x[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(ErrorKind::Numerical, "tridiagonal eigensolver did not converge");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::max(0.0, es.eigenvalues()[static_cast<Eigen::Index>(i)]);
    total += out[i];
  }
  if (!(total > 0.0)) fail(ErrorKind::Numerical, "degenerate Wishart spectrum");
  for (auto& v : out) v /= total;
  std::sort(out.begin(), out.end(), std::greater<>());
}

SampleSet sample_schmidt(const InducedMeasureSpec& spec, std::size_t n) {
  validate(spec);
  require(n >= 1, ErrorKind::InvalidArgument, "sample count must be positive");
  const std::size_t d = spec.n_sys;
  SampleSet set;
  set.dim = d;
  set.data.resize(d * n);
  for_each_stream([&](std::size_t s) {
    std::mt19937_64 rng(stream_seed(spec.seed, s));
    const std::size_t begin = stream_offset(n, s), count = stream_share(n, s);
    for (std::size_t i = begin; i < begin + count; ++i)
      sample_schmidt_one(rng, d, spec.m_env, std::span<double>(set.data.data() + i * d, d));
  });
  return set;
}

VolumeReport entanglement_cone_volumes(const ProbVector& p, const SampleSet& samples) {
  require(samples.dim == p.dim(), ErrorKind::DimensionMismatch, "state and spectrum dimensions differ");
  return volumes_from_samples(p, GibbsContext::uniform(p.dim()), samples, Orientation::Entanglement);
}

VolumeReport entanglement_cone_volumes(const ProbVector& p, const InducedMeasureSpec& spec, std::size_t n) {
  validate(spec);
  require(p.dim() == spec.n_sys, ErrorKind::DimensionMismatch, "state dimension differs from N");
  return entanglement_cone_volumes(p, sample_schmidt(spec, n));
}

namespace {

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

std::size_t permutation_count(const std::vector<std::size_t>& parts) {
  std::size_t m = factorial(parts.size());
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    m /= factorial(j - i);
    i = j;
  }
  return m;
}

// Non-increasing sequences of `slots` non-negative integers summing to `left`.
void sorted_compositions(std::size_t left, std::size_t slots, std::size_t cap, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (slots == 0) {
    if (left == 0) out.push_back(cur);
    return;
  }
  const std::size_t hi = std::min(cap, left);
  for (std::size_t v = hi + 1; v-- > 0;) {
    if (v * slots < left) break;
    cur.push_back(v);
    sorted_compositions(left - v, slots - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<EntanglementGridRow> iso_entanglement_grid(const InducedMeasureSpec& spec, std::size_t resolution,
                                                       std::size_t n) {
  validate(spec);
  require(resolution >= 1, ErrorKind::InvalidArgument, "resolution must be positive");
  require(spec.n_sys <= kMaxChamberDim, ErrorKind::Unsupported, "grid dimension too large");
  const SampleSet samples = sample_schmidt(spec, n);
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::size_t> cur;
  sorted_compositions(resolution, spec.n_sys, resolution, cur, points);
  std::vector<EntanglementGridRow> rows;
  rows.reserve(points.size());
  const double r = static_cast<double>(resolution);
  for (const auto& pt : points) {
    EntanglementGridRow row;
    row.state.resize(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) row.state[i] = static_cast<double>(pt[i]) / r;
    row.multiplicity = permutation_count(pt);
    row.report = entanglement_cone_volumes(ProbVector::strict(row.state), samples);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace thermocone

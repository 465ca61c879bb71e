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

#include "lattice.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace thermocone {

EmbeddingGrid::EmbeddingGrid(const GibbsContext& ctx) : d_(ctx.dim()) {
  require(d_ >= 1 && d_ <= kMaxEmbeddingDim, ErrorKind::Unsupported,
          "embedding supports dimensions 1.." + std::to_string(kMaxEmbeddingDim));
  const std::uint32_t full = (std::uint32_t{1} << d_) - 1;
  std::vector<double> sum_of(full + 1, 0.0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    const int hi = 31 - std::countl_zero(m);
    sum_of[m] = sum_of[m & ~(std::uint32_t{1} << hi)] + ctx.gamma(static_cast<std::size_t>(hi));
  }
  masks_.resize(full);
  std::iota(masks_.begin(), masks_.end(), std::uint32_t{1});
  std::sort(masks_.begin(), masks_.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (sum_of[a] != sum_of[b]) return sum_of[a] < sum_of[b];
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  // The full set must come last even if rounding says otherwise.
  auto it = std::find(masks_.begin(), masks_.end(), full);
  std::rotate(it, it + 1, masks_.end());
  sums_.resize(full);
  widths_.resize(full);
  position_.assign(full + 1, 0);
  double prev = 0.0;
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    sums_[i] = std::max(prev, masks_[i] == full ? 1.0 : sum_of[masks_[i]]);
    widths_[i] = sums_[i] - prev;
    prev = sums_[i];
    position_[masks_[i]] = i;
  }
}

std::size_t flatten_to_concave(std::vector<double>& r, const std::vector<double>& w) {
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0.0) live.push_back(i);
  const std::size_t n = live.size();
  std::vector<double> rr(n), ww(n);
  for (std::size_t k = 0; k < n; ++k) {
    rr[k] = r[live[k]];
    ww[k] = w[live[k]];
  }
  auto slope = [&](std::size_t k) { return rr[k] / ww[k]; };
  std::size_t steps = 0;
  for (;;) {
    std::size_t first = n;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double a = slope(k), b = slope(k + 1);
      if (a < b - 1e-15 * std::max(1.0, std::abs(b))) {
        first = k + 1;
        break;
      }
    }
    if (first == n) break;
    ++steps;
    // Pool [m, first]: m is the largest start whose left neighbour is at least
    // as steep as the pooled block.
    std::size_t m = first - 1;
    double rs = rr[m] + rr[first];
    double ws = ww[m] + ww[first];
    while (m > 0 && slope(m - 1) < rs / ws) {
      --m;
      rs += rr[m];
      ws += ww[m];
    }
    const double s = rs / ws;
    for (std::size_t k = m; k <= first; ++k) rr[k] = s * ww[k];
  }
  for (std::size_t k = 0; k < n; ++k) r[live[k]] = rr[k];
  return steps;
}

ProbVector join_uniform(const ProbVector& p, const ProbVector& q, std::size_t* iterations) {
  require(p.dim() == q.dim(), ErrorKind::DimensionMismatch, "join of vectors of different dimension");
  const auto ps = sorted_descending(p.entries());
  const auto qs = sorted_descending(q.entries());
  const std::size_t d = ps.size();
  std::vector<double> r(d);
  double cp = 0.0, cq = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    cp += ps[i];
    cq += qs[i];
    const double top = i + 1 == d ? 1.0 : std::max(cp, cq);
    r[i] = top - prev;
    prev = top;
  }
  const std::size_t steps = flatten_to_concave(r, std::vector<double>(d, 1.0));
  if (iterations) *iterations = steps;
  return ProbVector::strict(std::move(r));
}

EmbeddedVector embed(const ProbVector& p, std::shared_ptr<const EmbeddingGrid> grid,
                     const GibbsContext& ctx) {
  require(p.dim() == ctx.dim() && grid->base_dim() == ctx.dim(), ErrorKind::DimensionMismatch,
          "state, grid and Gibbs dimensions differ");
  const LorenzCurve f = thermo_curve(p, ctx);
  EmbeddedVector out;
  out.masses.resize(grid->size());
  double prev = 0.0;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double y = i + 1 == grid->size() ? 1.0 : f.value_at(grid->sums()[i]);
    out.masses[i] = y - prev;
    prev = y;
  }
  out.grid = std::move(grid);
  return out;
}

EmbeddedVector embed(const ProbVector& p, const GibbsContext& ctx) {
  return embed(p, std::make_shared<const EmbeddingGrid>(ctx), ctx);
}

ProbVector project(const EmbeddedVector& v, const BetaOrder& chamber) {
  const EmbeddingGrid& g = *v.grid;
  require(chamber.dim() == g.base_dim(), ErrorKind::DimensionMismatch,
          "chamber dimension differs from embedding");
  const std::size_t d = g.base_dim();
  std::vector<double> cum(v.size() + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) cum[i + 1] = cum[i] + v.masses[i];
  std::vector<double> q(d);
  std::uint32_t mask = 0;
  std::size_t prev_end = 0;
  for (std::size_t k = 0; k < d; ++k) {
    mask |= std::uint32_t{1} << chamber.level_at(k);
    const std::size_t end = g.index_of(mask) + 1;
    require(end >= prev_end, ErrorKind::Numerical, "chamber prefixes out of grid order");
    q[chamber.level_at(k)] = k + 1 == d ? 1.0 - cum[prev_end] : cum[end] - cum[prev_end];
    prev_end = end;
  }
  return ProbVector::strict(std::move(q));
}

bool embedded_majorises(const EmbeddedVector& u, const EmbeddedVector& v, double tol) {
  require(u.size() == v.size(), ErrorKind::DimensionMismatch, "embedded vectors differ in size");
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    a += u.masses[i];
    b += v.masses[i];
    if (a < b - tol) return false;
  }
  return true;
}

EmbeddedVector join_embedded(const EmbeddedVector& u, const EmbeddedVector& v,
                             std::size_t* iterations) {
  require(u.size() == v.size() && u.widths() == v.widths(), ErrorKind::DimensionMismatch,
          "embedded vectors have different width grids");
  const std::size_t n = u.size();
  EmbeddedVector out;
  out.grid = u.grid;
  out.masses.resize(n);
  double a = 0.0, b = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a += u.masses[i];
    b += v.masses[i];
    const double top = i + 1 == n ? 1.0 : std::max(a, b);
    out.masses[i] = top - prev;
    prev = top;
  }
  const std::size_t steps = flatten_to_concave(out.masses, u.widths());
  if (iterations) *iterations = steps;
  return out;
}

}  // namespace thermocone

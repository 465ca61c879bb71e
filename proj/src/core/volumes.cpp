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

#include "volumes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "cones.hpp"
#include "polytope.hpp"

namespace thermocone {

const char* to_string(VolumeMethod m) noexcept {
  switch (m) {
    case VolumeMethod::ClosedForm: return "closed-form";
    case VolumeMethod::ExactHull: return "exact-hull";
    case VolumeMethod::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

namespace {

bool uniform_weights(const GibbsContext& ctx) {
  const auto& g = ctx.gibbs().values();
  return std::all_of(g.begin(), g.end(), [&](double v) { return v == g.front(); });
}

double binomial_se(double v, std::size_t n) {
  return n ? std::sqrt(std::max(0.0, v * (1.0 - v)) / static_cast<double>(n)) : 0.0;
}

}  // namespace

VolumeReport closed_form_d3(const ProbVector& p) {
  require(p.dim() == 3, ErrorKind::InvalidArgument, "closed-form volumes need d = 3");
  const auto s = sorted_descending(p.entries());
  const double p1 = s[0], p2 = s[1], p3 = s[2];
  const double theta = p1 < 0.5 ? 1.0 : 0.0;
  VolumeReport r;
  r.method = VolumeMethod::ClosedForm;
  r.v_future = (3 * p1 - 1) * (3 * p1 - 1) - 3 * (p2 - p1) * (p2 - p1);
  r.v_past = 12 * p2 * p3 - 3 * theta * (1 - 2 * p1) * (1 - 2 * p1);
  r.v_incomparable = 1 - 3 * (1 - p1) * (1 - p1) + (1 - 3 * p3) * (1 - 3 * p3) - 2 * r.v_future +
                     3 * theta * (1 - 2 * p1) * (1 - 2 * p1);
  return r;
}

VolumeReport exact_future_volume(const ProbVector& p, const GibbsContext& ctx) {
  const std::size_t d = p.dim();
  require(d == ctx.dim(), ErrorKind::DimensionMismatch, "state and Gibbs dimensions differ");
  require(d >= 2 && d <= kMaxExactVolumeDim, ErrorKind::Unsupported,
          "exact future volume supports 2 <= d <= " + std::to_string(kMaxExactVolumeDim));
  const ConePolytope cone = future_cone(p, ctx);
  VolumeReport r;
  r.method = VolumeMethod::ExactHull;
  if (cone.vertices.size() <= 1) {
    r.v_future = 0.0;
  } else if (d == 3) {
    r.v_future = relative_area3(cone.vertices);
  } else {
    r.v_future = relative_volume(cone.vertices, future_constraints(p, ctx));
  }
  return r;
}

VolumeReport volumes_from_samples(const ProbVector& p, const GibbsContext& ctx, const SampleSet& samples,
                                  Orientation orientation) {
  require(p.dim() == ctx.dim() && samples.dim == p.dim(), ErrorKind::DimensionMismatch,
          "state, samples and Gibbs dimensions differ");
  const std::size_t n = samples.size();
  require(n > 0, ErrorKind::InvalidArgument, "empty sample set");
  std::vector<std::array<std::size_t, 3>> counts(kStreamCount, {0, 0, 0});
  const RelationClassifier proto(p, ctx);
  for_each_stream([&](std::size_t s) {
    RelationClassifier cls = proto;
    auto& c = counts[s];
    const std::size_t begin = stream_offset(n, s), count = stream_share(n, s);
    for (std::size_t i = begin; i < begin + count; ++i) {
      switch (cls(samples.row(i))) {
        case Relation::Future:
        case Relation::Equivalent: ++c[0]; break;
        case Relation::Past: ++c[1]; break;
        case Relation::Incomparable: ++c[2]; break;
      }
    }
  });
  std::array<std::size_t, 3> total{0, 0, 0};
  for (const auto& c : counts)
    for (std::size_t k = 0; k < 3; ++k) total[k] += c[k];
  if (orientation == Orientation::Entanglement) std::swap(total[0], total[1]);
  VolumeReport r;
  r.method = VolumeMethod::MonteCarlo;
  r.samples = n;
  const double dn = static_cast<double>(n);
  r.v_future = static_cast<double>(total[0]) / dn;
  r.v_past = static_cast<double>(total[1]) / dn;
  r.v_incomparable = static_cast<double>(total[2]) / dn;
  r.se_future = binomial_se(r.v_future, n);
  r.se_past = binomial_se(r.v_past, n);
  r.se_incomparable = binomial_se(r.v_incomparable, n);
  return r;
}

VolumeReport mc_volumes(const ProbVector& p, const GibbsContext& ctx, std::size_t n, std::uint64_t seed) {
  require(n >= 1000, ErrorKind::InvalidArgument, "Monte Carlo volumes need at least 1000 samples");
  return volumes_from_samples(p, ctx, uniform_samples(p.dim(), n, seed));
}

VolumeReport compute_volumes(const ProbVector& p, const GibbsContext& ctx, const VolumeOptions& opt) {
  switch (opt.method) {
    case MethodChoice::ClosedForm:
      require(uniform_weights(ctx), ErrorKind::InvalidArgument,
              "closed-form volumes need uniform Gibbs weights (beta = 0)");
      return closed_form_d3(p);
    case MethodChoice::ExactHull: return exact_future_volume(p, ctx);
    case MethodChoice::MonteCarlo: return mc_volumes(p, ctx, opt.samples, opt.seed);
    case MethodChoice::Auto: break;
  }
  if (p.dim() == 3 && uniform_weights(ctx)) return closed_form_d3(p);
  return mc_volumes(p, ctx, opt.samples, opt.seed);
}

namespace {

VolumeReport volumes_with_shared_samples(const ProbVector& p, const GibbsContext& ctx,
                                         const VolumeOptions& opt, const SampleSet* shared) {
  const bool closed = opt.method == MethodChoice::ClosedForm ||
                      (opt.method == MethodChoice::Auto && p.dim() == 3 && uniform_weights(ctx));
  if (closed || opt.method == MethodChoice::ExactHull || !shared) return compute_volumes(p, ctx, opt);
  return volumes_from_samples(p, ctx, *shared);
}

bool needs_samples(const VolumeOptions& opt) {
  return opt.method == MethodChoice::MonteCarlo || opt.method == MethodChoice::Auto;
}

}  // namespace

std::vector<SweepRow> volume_sweep(const ProbVector& p, const std::vector<double>& energies,
                                   const std::vector<double>& betas, const VolumeOptions& opt) {
  const std::size_t d = p.dim();
  require(energies.size() == d, ErrorKind::DimensionMismatch, "energies and state dimensions differ");
  require(d <= kMaxChamberDim, ErrorKind::Unsupported, "too many permutations");
  require(!betas.empty(), ErrorKind::InvalidArgument, "beta list is empty");
  if (needs_samples(opt)) require(opt.samples >= 1000, ErrorKind::InvalidArgument, "Monte Carlo volumes need at least 1000 samples");
  std::vector<std::vector<double>> perms;
  {
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      std::vector<double> v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = p[idx[i]];
      if (std::find(perms.begin(), perms.end(), v) == perms.end()) perms.push_back(std::move(v));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  // Levels in ascending energy; passive means populations non-increasing along it.
  std::vector<std::size_t> by_energy(d);
  std::iota(by_energy.begin(), by_energy.end(), std::size_t{0});
  std::stable_sort(by_energy.begin(), by_energy.end(),
                   [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });
  SampleSet shared;
  if (needs_samples(opt)) shared = uniform_samples(d, opt.samples, opt.seed);
  std::vector<SweepRow> rows;
  std::vector<BetaOrder> last(perms.size());
  for (std::size_t bi = 0; bi < betas.size(); ++bi) {
    const GibbsContext ctx = GibbsContext::finite(energies, betas[bi]);
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const ProbVector q = ProbVector::strict(perms[k]);
      SweepRow row;
      row.beta = betas[bi];
      row.permutation = k;
      row.state = perms[k];
      row.order = beta_order(q, ctx);
      row.order_changed = bi > 0 && !(row.order == last[k]);
      last[k] = row.order;
      row.passive = row.maximally_active = true;
      for (std::size_t i = 0; i + 1 < d; ++i) {
        const double a = q[by_energy[i]], b = q[by_energy[i + 1]];
        if (a < b) row.passive = false;
        if (a > b) row.maximally_active = false;
      }
      row.report = volumes_with_shared_samples(q, ctx, opt, shared.size() ? &shared : nullptr);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<GridRow> isovolumetric_grid(const GibbsContext& ctx, std::size_t resolution,
                                        const VolumeOptions& opt) {
  require(ctx.dim() == 3, ErrorKind::InvalidArgument, "isovolumetric grid needs d = 3");
  require(resolution >= 1, ErrorKind::InvalidArgument, "resolution must be positive");
  if (needs_samples(opt) && !uniform_weights(ctx))
    require(opt.samples >= 1000, ErrorKind::InvalidArgument, "Monte Carlo volumes need at least 1000 samples");
  SampleSet shared;
  if (needs_samples(opt) && !(opt.method == MethodChoice::Auto && uniform_weights(ctx)))
    shared = uniform_samples(3, opt.samples, opt.seed);
  std::vector<GridRow> rows;
  const double r = static_cast<double>(resolution);
  for (std::size_t i = 0; i <= resolution; ++i)
    for (std::size_t j = 0; i + j <= resolution; ++j) {
      const std::size_t k = resolution - i - j;
      std::vector<double> s{static_cast<double>(i) / r, static_cast<double>(j) / r, static_cast<double>(k) / r};
      GridRow row;
      row.state = s;
      row.report = volumes_with_shared_samples(ProbVector::strict(s), ctx, opt, shared.size() ? &shared : nullptr);
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace thermocone

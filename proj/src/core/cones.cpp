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

#include "cones.hpp"

#include <algorithm>
#include <cmath>

namespace thermocone {

const char* to_string(PolytopeKind k) noexcept {
  switch (k) {
    case PolytopeKind::Future: return "future";
    case PolytopeKind::PastChamber: return "past_chamber";
    case PolytopeKind::IncomparablePiece: return "incomparable_piece";
  }
  return "unknown";
}

namespace {

std::vector<double> cumulative_gibbs(const GibbsContext& ctx, const BetaOrder& chamber) {
  const std::size_t d = ctx.dim();
  std::vector<double> xs(d + 1, 0.0);
  for (std::size_t r = 0; r < d; ++r) xs[r + 1] = xs[r] + ctx.gamma(chamber.level_at(r));
  xs[d] = 1.0;
  return xs;
}

}  // namespace

std::vector<TangentVector> tangent_vectors_uniform(const ProbVector& p) {
  const std::size_t d = p.dim();
  require(d >= 2, ErrorKind::InvalidArgument, "tangent vectors need d >= 2");
  const auto ps = sorted_descending(p.entries());
  std::vector<TangentVector> out;
  double head = 0.0;
  for (std::size_t n = 1; n <= d; ++n) {
    const double pn = ps[n - 1];
    TangentVector t;
    t.level = n;
    t.chamber = BetaOrder::identity(d);
    t.entries.assign(d, pn);
    t.entries[0] = head - (static_cast<double>(n) - 2.0) * pn;
    t.entries[d - 1] = 1.0 - t.entries[0] - (static_cast<double>(d) - 2.0) * pn;
    out.push_back(std::move(t));
    head += pn;
  }
  return out;
}

std::vector<TangentVector> tangent_vectors_thermal(const ProbVector& p, const GibbsContext& ctx,
                                                   const BetaOrder& chamber) {
  const std::size_t d = p.dim();
  require(d >= 2, ErrorKind::InvalidArgument, "tangent vectors need d >= 2");
  require(ctx.dim() == d && chamber.dim() == d, ErrorKind::DimensionMismatch,
          "state, chamber and Gibbs dimensions differ");
  require(!ctx.has_vanishing_weights(), ErrorKind::Unsupported,
          "tangent vectors need strictly positive Gibbs weights");
  const BetaOrder own = beta_order(p, ctx);
  const std::size_t first = chamber.level_at(0), last = chamber.level_at(d - 1);
  double middle_gamma = 0.0;
  for (std::size_t r = 1; r + 1 < d; ++r) middle_gamma += ctx.gamma(chamber.level_at(r));
  std::vector<TangentVector> out;
  double pn_cum = 0.0, gn_cum = 0.0;
  for (std::size_t n = 1; n <= d; ++n) {
    const std::size_t lv = own.level_at(n - 1);
    pn_cum += p[lv];
    gn_cum += ctx.gamma(lv);
    const double s = p[lv] / ctx.gamma(lv);
    TangentVector t;
    t.level = n;
    t.chamber = chamber;
    t.entries.assign(d, 0.0);
    for (std::size_t r = 1; r + 1 < d; ++r) {
      const std::size_t l = chamber.level_at(r);
      t.entries[l] = s * ctx.gamma(l);
    }
    t.entries[first] = pn_cum - s * (gn_cum - ctx.gamma(first));
    t.entries[last] = 1.0 - t.entries[first] - s * middle_gamma;
    out.push_back(std::move(t));
  }
  return out;
}

ProbVector project_to_simplex(std::span<const double> entries, const BetaOrder& chamber) {
  const std::size_t d = entries.size();
  require(chamber.dim() == d, ErrorKind::DimensionMismatch, "chamber dimension differs");
  std::vector<double> v(d);
  for (std::size_t r = 0; r < d; ++r) v[r] = entries[chamber.level_at(r)];
  for (std::size_t m = d - 1; m >= 1; --m) {
    const double a = v[m - 1], b = v[m];
    v[m - 1] = std::min(a + b, a);
    v[m] = std::max(b, 0.0);
  }
  std::vector<double> out(d);
  for (std::size_t r = 0; r < d; ++r) {
    require(v[r] >= -kNegativeTolerance, ErrorKind::Numerical,
            "projection left a negative entry; input is not a tangent vector");
    out[chamber.level_at(r)] = std::max(v[r], 0.0);
  }
  return ProbVector::strict(std::move(out));
}

ProbVector project_to_simplex(const TangentVector& t) { return project_to_simplex(t.entries, t.chamber); }

std::vector<Point> future_vertices(const LorenzCurve& f, const GibbsContext& ctx) {
  const std::size_t d = ctx.dim();
  std::vector<Point> pts;
  for (const auto& pi : all_chambers(d)) {
    const auto xs = cumulative_gibbs(ctx, pi);
    Point v(d);
    double prev = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
      const double y = r + 1 == d ? 1.0 : f.value_at(xs[r + 1]);
      v[pi.level_at(r)] = y - prev;
      prev = y;
    }
    pts.push_back(std::move(v));
  }
  return dedupe_points(pts);
}

ConePolytope future_cone(const ProbVector& p, const GibbsContext& ctx) {
  require(p.dim() == ctx.dim(), ErrorKind::DimensionMismatch, "state and Gibbs dimensions differ");
  require(p.dim() <= kMaxChamberDim, ErrorKind::Unsupported,
          "future cone vertices support d <= " + std::to_string(kMaxChamberDim));
  ConePolytope c;
  c.kind = PolytopeKind::Future;
  c.vertices = future_vertices(thermo_curve(p, ctx), ctx);
  for (auto& v : c.vertices)
    for (auto& x : v)
      if (x < 0.0 && x > -kNegativeTolerance) x = 0.0;
  return c;
}

std::vector<HalfSpace> future_constraints(const ProbVector& p, const GibbsContext& ctx) {
  const std::size_t d = p.dim();
  require(d == ctx.dim(), ErrorKind::DimensionMismatch, "state and Gibbs dimensions differ");
  require(d <= kMaxEmbeddingDim, ErrorKind::Unsupported, "too many subsets for facet constraints");
  const LorenzCurve f = thermo_curve(p, ctx);
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i < d; ++i) {
    HalfSpace h{std::vector<double>(d, 0.0), 0.0};
    h.a[i] = 1.0;
    out.push_back(std::move(h));
  }
  const std::uint32_t full = (std::uint32_t{1} << d) - 1;
  for (std::uint32_t m = 1; m < full; ++m) {
    HalfSpace h{std::vector<double>(d, 0.0), 0.0};
    double g = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      if (m & (std::uint32_t{1} << i)) {
        h.a[i] = -1.0;
        g += ctx.gamma(i);
      }
    h.b = -f.value_at(g);
    out.push_back(std::move(h));
  }
  return out;
}

ConeRegion::ConeRegion(const ProbVector& p, const GibbsContext& ctx)
    : p_(p), ctx_(ctx), p_curve_(thermo_curve(p, ctx)) {
  const std::size_t d = p.dim();
  require(d == ctx.dim(), ErrorKind::DimensionMismatch, "state and Gibbs dimensions differ");
  require(d >= 2 && d <= kMaxChamberDim, ErrorKind::Unsupported,
          "region oracle supports 2 <= d <= " + std::to_string(kMaxChamberDim));
  fallback_ = ctx.has_vanishing_weights();
  if (fallback_) return;
  for (const auto& pi : all_chambers(d)) {
    Chamber c;
    c.xs = cumulative_gibbs(ctx, pi);
    for (const auto& t : tangent_vectors_thermal(p, ctx, pi)) {
      std::vector<double> ys(d + 1, 0.0);
      for (std::size_t r = 0; r < d; ++r) ys[r + 1] = ys[r] + t.entries[pi.level_at(r)];
      ys[d] = 1.0;
      c.ys.push_back(std::move(ys));
    }
    chambers_.push_back(std::move(c));
  }
}

double ConeRegion::chamber_value(const Chamber& c, std::size_t level, double x) const {
  const auto& xs = c.xs;
  const auto& ys = c.ys[level];
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  if (it == xs.begin()) return ys.front();
  const std::size_t k = static_cast<std::size_t>(it - xs.begin());
  if (xs[k - 1] == x) return ys[k - 1];
  return ys[k - 1] + (x - xs[k - 1]) * (ys[k] - ys[k - 1]) / (xs[k] - xs[k - 1]);
}

bool ConeRegion::in_tangent_hull(std::span<const double> q) const {
  require(q.size() == p_.dim(), ErrorKind::DimensionMismatch, "state dimension mismatch");
  const auto gamma = ctx_.gibbs().entries();
  const LorenzCurve fq = chamber_curve(q, gamma, beta_order(q, gamma));
  const auto& qe = fq.elbows();
  const std::size_t d = p_.dim();
  std::vector<double> fq_at_xs(d + 1);
  for (const auto& c : chambers_) {
    for (std::size_t k = 0; k <= d; ++k) fq_at_xs[k] = fq.value_at(c.xs[k]);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      double lo = 0.0, hi = 1.0;
      auto constrain = [&](double a, double b, double r) {
        // need lambda * a + (1 - lambda) * b >= r
        const double diff = a - b;
        if (std::abs(diff) <= 1e-15) {
          if (b < r) hi = -1.0;
        } else if (diff > 0.0) {
          lo = std::max(lo, (r - b) / diff);
        } else {
          hi = std::min(hi, (r - b) / diff);
        }
      };
      for (std::size_t k = 1; k < d && lo <= hi; ++k)
        constrain(c.ys[i][k], c.ys[i + 1][k], fq_at_xs[k] + kCurveTolerance);
      for (std::size_t k = 1; k + 1 < qe.size() && lo <= hi; ++k)
        constrain(chamber_value(c, i, qe[k].x), chamber_value(c, i + 1, qe[k].x),
                  qe[k].y + kCurveTolerance);
      if (lo <= hi + 1e-12) return true;
    }
  }
  return false;
}

Relation ConeRegion::locate(std::span<const double> q) const {
  require(q.size() == p_.dim(), ErrorKind::DimensionMismatch, "state dimension mismatch");
  const auto gamma = ctx_.gibbs().entries();
  const LorenzCurve fq = chamber_curve(q, gamma, beta_order(q, gamma));
  const bool p_over_q = curve_dominates(p_curve_, fq);
  if (fallback_) {
    const bool q_over_p = curve_dominates(fq, p_curve_);
    if (p_over_q && q_over_p) return Relation::Equivalent;
    if (p_over_q) return Relation::Future;
    return q_over_p ? Relation::Past : Relation::Incomparable;
  }
  if (p_over_q) return curve_dominates(fq, p_curve_) ? Relation::Equivalent : Relation::Future;
  return in_tangent_hull(q) ? Relation::Incomparable : Relation::Past;
}

namespace {

// Inequalities for the past of p restricted to one chamber.
std::vector<HalfSpace> past_chamber_constraints(const LorenzCurve& fp, const GibbsContext& ctx,
                                                const BetaOrder& pi) {
  const std::size_t d = ctx.dim();
  const auto xs = cumulative_gibbs(ctx, pi);
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i < d; ++i) {
    HalfSpace h{std::vector<double>(d, 0.0), 0.0};
    h.a[i] = 1.0;
    out.push_back(std::move(h));
  }
  for (std::size_t r = 0; r + 1 < d; ++r) {
    const std::size_t a = pi.level_at(r), b = pi.level_at(r + 1);
    HalfSpace h{std::vector<double>(d, 0.0), 0.0};
    h.a[a] = ctx.gamma(b);
    h.a[b] = -ctx.gamma(a);
    out.push_back(std::move(h));
  }
  // Last rank whose cumulative weight does not exceed x.
  auto last_rank = [&](double x) {
    return static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) - 1;
  };
  std::vector<double> probe;
  for (std::size_t k = 0; k < d; ++k) probe.push_back(xs[k]);
  for (const auto& e : fp.elbows())
    if (e.x < 1.0) probe.push_back(e.x);
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
  for (double x : probe) {
    const std::size_t k = last_rank(x);
    if (k >= d) continue;
    HalfSpace h{std::vector<double>(d, 0.0), fp.value_at(x)};
    for (std::size_t r = 0; r < k; ++r) h.a[pi.level_at(r)] = 1.0;
    if (xs[k] != x) h.a[pi.level_at(k)] = (x - xs[k]) / (xs[k + 1] - xs[k]);
    if (h.b <= 0.0 && k == 0 && xs[k] == x) continue;
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

PastAndIncomparable past_and_incomparable(const ProbVector& p, const GibbsContext& ctx) {
  const std::size_t d = p.dim();
  require(d == ctx.dim(), ErrorKind::DimensionMismatch, "state and Gibbs dimensions differ");
  require(d >= 2 && d <= kMaxPastVertexDim, ErrorKind::Unsupported,
          "exact past vertices support 2 <= d <= " + std::to_string(kMaxPastVertexDim));
  PastAndIncomparable out;
  const LorenzCurve fp = thermo_curve(p, ctx);
  const bool positive = !ctx.has_vanishing_weights();
  for (const auto& pi : all_chambers(d)) {
    auto verts = enumerate_vertices(past_chamber_constraints(fp, ctx, pi), d);
    if (!verts.empty()) {
      for (auto& v : verts)
        for (auto& x : v) x = std::max(x, 0.0);
      out.past.push_back({PolytopeKind::PastChamber, pi, 0, std::move(verts)});
    }
    if (!positive) continue;
    const auto tangents = tangent_vectors_thermal(p, ctx, pi);
    const auto gamma = ctx.gibbs().entries();
    for (std::size_t i = 0; i + 1 < d; ++i) {
      auto pts = future_vertices(chamber_curve(tangents[i].entries, gamma, pi), ctx);
      auto more = future_vertices(chamber_curve(tangents[i + 1].entries, gamma, pi), ctx);
      pts.insert(pts.end(), more.begin(), more.end());
      auto ext = extreme_points(pts);
      if (d == 3) ext = extreme_points(clip_to_simplex3(ext));
      out.incomparable.push_back({PolytopeKind::IncomparablePiece, pi, i + 1, std::move(ext)});
    }
    out.tangents.insert(out.tangents.end(), tangents.begin(), tangents.end());
  }
  return out;
}

ProbVector beta_swap(const ProbVector& p, const GibbsContext& ctx, std::size_t k) {
  const std::size_t d = p.dim();
  require(d == ctx.dim(), ErrorKind::DimensionMismatch, "state and Gibbs dimensions differ");
  require(k >= 1 && k < d, ErrorKind::InvalidArgument, "swap level must be in 1..d-1");
  std::size_t a = 0, b = k;
  if (ctx.gamma(b) > ctx.gamma(a)) std::swap(a, b);
  require(ctx.gamma(a) > 0.0, ErrorKind::InvalidArgument, "swap between two zero-weight levels");
  std::vector<double> v = p.values();
  const double r = ctx.gamma(b) / ctx.gamma(a);
  v[a] = (1.0 - r) * p[a] + p[b];
  v[b] = r * p[a];
  return ProbVector::strict(std::move(v));
}

}  // namespace thermocone

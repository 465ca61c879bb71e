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

#include "qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace thermocone {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kBisectTol = 1e-12;
constexpr std::size_t kScanSteps = 4096;

double norm2(const BlochState& s) { return s.x * s.x + s.y * s.y + s.z * s.z; }

// Height of the d = 2 thermomajorisation curve of (v, 1 - v) at abscissa t.
double curve2(double v, double g, double t) {
  const bool ground_first = v / g >= (1.0 - v) / (1.0 - g);
  const double x1 = ground_first ? g : 1.0 - g;
  const double y1 = ground_first ? v : 1.0 - v;
  if (t <= x1) return x1 > 0.0 ? y1 * t / x1 : y1;
  return y1 + (1.0 - y1) * (t - x1) / (1.0 - x1);
}

bool diagonal_reachable(double p, double q, double g) {
  for (double t : {g, 1.0 - g})
    if (curve2(p, g, t) < curve2(q, g, t) - kSlack) return false;
  return true;
}

// Bloch circle in the (d, q) plane: (2q - 1)^2 + 4 d^2 = 1.
double circle_excess(double d, double q) { return (2.0 * q - 1.0) * (2.0 * q - 1.0) + 4.0 * d * d - 1.0; }

double angle_of(const QubitPoint& pt) { return std::atan2(2.0 * pt.d, 2.0 * pt.q - 1.0); }

QubitPoint circle_point(double theta) { return {std::sin(theta) / 2.0, (1.0 + std::cos(theta)) / 2.0}; }

void append_arc(std::vector<QubitPoint>& out, const QubitPoint& from, const QubitPoint& to, std::size_t n) {
  const double a = angle_of(from), b = angle_of(to);
  for (std::size_t i = 1; i < n; ++i) out.push_back(circle_point(a + (b - a) * static_cast<double>(i) / n));
  out.push_back(to);
}

void require_regular(const PopCoherence& s, const QubitThermalContext& ctx) {
  require(std::abs(s.c) > 0.0, ErrorKind::InvalidArgument,
          "zero coherence: use the incoherent two-level classification");
  require(std::abs(s.p - ctx.gamma_ground()) > 1e-14, ErrorKind::InvalidArgument,
          "ground population equals the Gibbs weight: the boundary is degenerate");
}

}  // namespace

void validate(const BlochState& s) {
  require(std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z), ErrorKind::InvalidArgument,
          "Bloch coordinates must be finite");
  require(norm2(s) <= 1.0 + kSlack, ErrorKind::InvalidArgument, "Bloch vector longer than one");
}

BlochState rotate_to_xz(const BlochState& s) { return {std::hypot(s.x, s.y), 0.0, s.z}; }

QubitThermalContext::QubitThermalContext(double zeta) : zeta_(zeta) {
  require(std::isfinite(zeta) && zeta >= 0.0, ErrorKind::InvalidArgument, "zeta must be non-negative");
  require(zeta < 1.0, ErrorKind::InvalidArgument, "zeta = 1 (zero temperature) is not supported");
}

QubitThermalContext QubitThermalContext::from_gamma(double gamma_ground) {
  return QubitThermalContext(2.0 * gamma_ground - 1.0);
}

PopCoherence to_population_coherence(const BlochState& s) {
  validate(s);
  require(std::abs(s.y) <= kSlack, ErrorKind::InvalidArgument, "state has y != 0; rotate into the XZ plane first");
  return {(1.0 + s.z) / 2.0, s.x / 2.0};
}

BlochState to_bloch(const PopCoherence& s) { return {2.0 * s.c, 0.0, 2.0 * s.p - 1.0}; }

GpQuantities gp_quantities(const BlochState& s, const QubitThermalContext& ctx) {
  validate(s);
  const double z = ctx.zeta(), z2 = z * z;
  GpQuantities g;
  g.delta = std::sqrt((s.z - z) * (s.z - z) + (s.x * s.x + s.y * s.y) * (1.0 - z2));
  g.r_plus = g.delta + z * s.z;
  g.r_minus = g.delta - z * s.z;
  g.r1 = (g.r_minus + z2) / (1.0 - z2);
  g.r2 = (g.r_plus - z2) / (1.0 - z2);
  g.centre1 = z * (1.0 + g.r1);
  g.centre2 = z * (1.0 - g.r2);
  return g;
}

Relation gp_classify(const BlochState& target, const BlochState& source, const QubitThermalContext& ctx) {
  const GpQuantities t = gp_quantities(target, ctx), s = gp_quantities(source, ctx);
  const bool plus_le = t.r_plus <= s.r_plus + kSlack, minus_le = t.r_minus <= s.r_minus + kSlack;
  const bool plus_ge = t.r_plus >= s.r_plus - kSlack, minus_ge = t.r_minus >= s.r_minus - kSlack;
  if (plus_le && minus_le && plus_ge && minus_ge) return Relation::Equivalent;
  if (plus_le && minus_le) return Relation::Future;
  if (plus_ge && minus_ge) return Relation::Past;
  return Relation::Incomparable;
}

bool gp_disk_future(const BlochState& target, const BlochState& source, const QubitThermalContext& ctx) {
  validate(target);
  const GpQuantities g = gp_quantities(source, ctx);
  const double rho2 = target.x * target.x + target.y * target.y;
  const double e1 = rho2 + (target.z - g.centre1) * (target.z - g.centre1) - g.r1 * g.r1;
  const double e2 = rho2 + (target.z - g.centre2) * (target.z - g.centre2) - g.r2 * g.r2;
  return e1 <= 1e-10 && e2 <= 1e-10;
}

GpBoundary gp_boundary(const BlochState& s, const QubitThermalContext& ctx, std::size_t points) {
  require(points >= 8, ErrorKind::InvalidArgument, "need at least 8 polyline points");
  GpBoundary b;
  b.quantities = gp_quantities(s, ctx);
  auto sample = [&](double centre, double radius, std::vector<BlochState>& out) {
    for (std::size_t i = 0; i < points; ++i) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(points - 1);
      const BlochState pt{radius * std::sin(t), 0.0, centre + radius * std::cos(t)};
      if (norm2(pt) <= 1.0 + kSlack) out.push_back(pt);
    }
  };
  sample(b.quantities.centre1, b.quantities.r1, b.circle1);
  sample(b.quantities.centre2, b.quantities.r2, b.circle2);
  return b;
}

bool to_reachable(const PopCoherence& from, const PopCoherence& to, const QubitThermalContext& ctx) {
  const double g = ctx.gamma_ground();
  const double p = from.p, q = to.p, c = std::abs(from.c), d = std::abs(to.c);
  if (!diagonal_reachable(p, q, g)) return false;
  if (d > c + kSlack) return false;
  const double a = (1.0 - g) * q - g * (1.0 - p);
  const double b = g * q + p * (1.0 - g) - g;
  return d * std::abs(p - g) <= c * std::sqrt(std::max(0.0, a * b)) + kSlack;
}

Relation to_classify(const PopCoherence& target, const PopCoherence& source, const QubitThermalContext& ctx) {
  const bool fwd = to_reachable(source, target, ctx), back = to_reachable(target, source, ctx);
  if (fwd && back) return Relation::Equivalent;
  if (fwd) return Relation::Future;
  if (back) return Relation::Past;
  return Relation::Incomparable;
}

double to_future_q1(const PopCoherence& s, const QubitThermalContext& ctx, double d) {
  require_regular(s, ctx);
  const double g = ctx.gamma_ground(), p = s.p, c = std::abs(s.c);
  d = std::abs(d);
  require(d <= c * (1.0 + 1e-12), ErrorKind::InvalidArgument, "target coherence exceeds the initial coherence");
  const double root = std::sqrt(c * c * (1.0 - 2.0 * g) * (1.0 - 2.0 * g) + 4.0 * g * (1.0 - g) * d * d);
  const double b = p - g - 2.0 * g * p * (1.0 - g);
  return (-b + (p - g) * root / c) / (2.0 * g * (1.0 - g));
}

std::vector<QubitPoint> to_future_boundary(const PopCoherence& s, const QubitThermalContext& ctx,
                                           const std::vector<double>& d_targets) {
  std::vector<QubitPoint> out;
  out.reserve(d_targets.size());
  for (double d : d_targets) out.push_back({d, to_future_q1(s, ctx, d)});
  return out;
}

std::vector<QubitPoint> to_future_region(const PopCoherence& s, const QubitThermalContext& ctx,
                                         std::size_t points) {
  require_regular(s, ctx);
  require(points >= 8, ErrorKind::InvalidArgument, "need at least 8 polyline points");
  const double c = std::abs(s.c);
  std::vector<QubitPoint> out;
  out.reserve(points + 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double d = -c + 2.0 * c * static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back({d, to_future_q1(s, ctx, std::min(std::abs(d), c))});
  }
  // The last point is (c, p); the outline closes along q = p back to (-c, p).
  out.back() = {c, s.p};
  out.push_back({-c, s.p});
  return out;
}

PastBranches to_past_branches(const PopCoherence& s, const QubitThermalContext& ctx, double d) {
  const double g = ctx.gamma_ground(), p = s.p, c = std::abs(s.c);
  d = std::abs(d);
  // c^2 (q - g)^2 = d^2 A B, expanded in q.
  const double b = p - g - 2.0 * g * p * (1.0 - g);
  const double c0 = -g * (1.0 - p) * (p * (1.0 - g) - g);
  const double a2 = d * d * g * (1.0 - g) - c * c;
  const double a1 = d * d * b + 2.0 * c * c * g;
  const double a0 = d * d * c0 - c * c * g * g;
  std::vector<double> roots;
  const double scale = std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
  if (std::abs(a2) <= 1e-14 * scale) {
    if (a1 != 0.0) roots.push_back(-a0 / a1);
  } else {
    const double disc = a1 * a1 - 4.0 * a2 * a0;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      const double t = -0.5 * (a1 + std::copysign(sq, a1));
      roots.push_back(t / a2);
      if (t != 0.0) roots.push_back(a0 / t);
    }
  }
  PastBranches out;
  const double h = 1e-7;
  const PopCoherence target{s.p, s.c};
  for (double r : roots) {
    if (!(r > 0.0 && r < 1.0)) continue;
    const bool below = to_reachable({r - h, d}, target, ctx);
    const bool above = to_reachable({r + h, d}, target, ctx);
    if (below == above) continue;
    const bool same = (r - g) * (p - g) > 0.0;
    (same ? out.same_side : out.opposite_side) = r;
  }
  return out;
}

namespace {

// Refines the boundary between d values where pred differs; lo has pred false.
template <typename Pred>
double bisect(Pred pred, double lo, double hi) {
  while (std::abs(hi - lo) > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ToPastRegion to_past_region(const PopCoherence& s, const QubitThermalContext& ctx, std::size_t points) {
  require_regular(s, ctx);
  require(points >= 8, ErrorKind::InvalidArgument, "need at least 8 polyline points");
  const double p = s.p, c = std::abs(s.c);
  require(circle_excess(c, p) <= 1e-12, ErrorKind::InvalidArgument, "state lies outside the Bloch ball");
  ToPastRegion region;
  const double d_edge = std::sqrt(std::max(0.0, p * (1.0 - p)));
  const std::size_t half = points / 2;

  // Piece 1: the same-side branch leaves (c, p) and exits the ball at d_cross.
  auto outside1 = [&](double d) {
    const auto br = to_past_branches(s, ctx, d);
    return !br.same_side || circle_excess(d, *br.same_side) > 0.0;
  };
  if (d_edge - c <= 1e-12) {
    region.d_cross = c;
    region.piece1 = {{c, p}};
  } else {
    double lo = c, hi = 0.5;
    bool found = false;
    for (std::size_t i = 1; i <= kScanSteps; ++i) {
      const double d = c + (0.5 - c) * static_cast<double>(i) / kScanSteps;
      if (outside1(d)) {
        hi = d;
        found = true;
        break;
      }
      lo = d;
    }
    if (!found) fail(ErrorKind::Numerical, "past branch never meets the Bloch circle");
    region.d_cross = bisect(outside1, lo, hi);
    const double dc = region.d_cross;
    const auto at_cross = to_past_branches(s, ctx, dc - kBisectTol);
    const QubitPoint cross{dc, at_cross.same_side ? *at_cross.same_side : p};
    auto& out = region.piece1;
    for (std::size_t i = 0; i < half / 4; ++i)
      out.push_back({c + (d_edge - c) * static_cast<double>(i) / (half / 4), p});
    append_arc(out, {d_edge, p}, cross, half / 4);
    for (std::size_t i = 1; i < half / 2; ++i) {
      const double d = dc - (dc - c) * static_cast<double>(i) / (half / 2);
      const auto br = to_past_branches(s, ctx, d);
      if (br.same_side) out.push_back({d, *br.same_side});
    }
    out.push_back({c, p});
  }

  // Piece 2: the opposite-side branch, where it lies inside the ball.
  auto inside2 = [&](double d) {
    const auto br = to_past_branches(s, ctx, d);
    return br.opposite_side && circle_excess(d, *br.opposite_side) <= 0.0;
  };
  std::optional<std::size_t> first, last;
  for (std::size_t i = 1; i < kScanSteps; ++i) {
    const double d = 0.5 * static_cast<double>(i) / kScanSteps;
    if (inside2(d)) {
      if (!first) first = i;
      last = i;
    } else if (first) {
      break;
    }
  }
  if (first) {
    const double step = 0.5 / kScanSteps;
    const double d_first = step * static_cast<double>(*first), d_last = step * static_cast<double>(*last);
    region.d_min = bisect(inside2, d_first - step, d_first);
    region.d_max = bisect([&](double d) { return !inside2(d); }, d_last, d_last + step);
    const double dmin = *region.d_min + kBisectTol, dmax = *region.d_max - kBisectTol;
    auto& out = region.piece2;
    for (std::size_t i = 0; i < half / 2; ++i) {
      const double d = dmin + (dmax - dmin) * static_cast<double>(i) / (half / 2 - 1);
      const auto br = to_past_branches(s, ctx, d);
      if (br.opposite_side) out.push_back({d, *br.opposite_side});
    }
    if (out.size() >= 2) {
      const QubitPoint end = out.back(), start = out.front();
      append_arc(out, end, start, half / 2);
    } else {
      region.d_min.reset();
      region.d_max.reset();
      out.clear();
    }
  }
  return region;
}

bool inside_outline(const std::vector<QubitPoint>& outline, const QubitPoint& pt) {
  const std::size_t n = outline.size();
  if (n == 0) return false;
  if (n == 1) return std::hypot(outline[0].d - pt.d, outline[0].q - pt.q) <= 1e-12;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const QubitPoint& a = outline[i];
    const QubitPoint& b = outline[j];
    const double ex = b.d - a.d, ey = b.q - a.q;
    const double len2 = ex * ex + ey * ey;
    const double t = len2 > 0.0 ? std::clamp(((pt.d - a.d) * ex + (pt.q - a.q) * ey) / len2, 0.0, 1.0) : 0.0;
    if (std::hypot(a.d + t * ex - pt.d, a.q + t * ey - pt.q) <= 1e-12) return true;
    if ((a.q > pt.q) != (b.q > pt.q) && pt.d < a.d + (pt.q - a.q) * ex / ey) inside = !inside;
  }
  return inside;
}

}  // namespace thermocone

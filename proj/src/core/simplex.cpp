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

#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace thermocone {

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Future: return "future";
    case Relation::Past: return "past";
    case Relation::Incomparable: return "incomparable";
    case Relation::Equivalent: return "equivalent";
  }
  return "unknown";
}

namespace {

void check_entries(const std::vector<double>& e) {
  require(!e.empty(), ErrorKind::InvalidArgument, "probability vector must be non-empty");
  double sum = 0.0;
  for (double v : e) {
    require(std::isfinite(v), ErrorKind::InvalidArgument, "probability vector has non-finite entry");
    sum += v;
  }
  require(std::abs(sum - 1.0) <= kSumTolerance, ErrorKind::InvalidArgument,
          "probability vector must sum to 1 (got " + std::to_string(sum) + ")");
}

double ratio_of(double p, double g) {
  if (g > 0.0) return p / g;
  if (p > 0.0) return std::numeric_limits<double>::infinity();
  if (p < 0.0) return -std::numeric_limits<double>::infinity();
  return 0.0;
}

void sort_levels(std::span<const double> p, std::span<const double> gamma,
                 std::vector<std::size_t>& order, std::vector<double>& ratio) {
  const std::size_t d = p.size();
  order.resize(d);
  ratio.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    order[i] = i;
    ratio[i] = ratio_of(p[i], gamma[i]);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });
}

void build_elbows(std::span<const double> v, std::span<const double> gamma,
                  std::span<const std::size_t> sequence, std::vector<CurvePoint>& out) {
  const std::size_t d = v.size();
  out.resize(d + 1);
  out[0] = {0.0, 0.0};
  double x = 0.0, y = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    x += gamma[sequence[r]];
    y += v[sequence[r]];
    out[r + 1] = {x, y};
  }
  out[d] = {1.0, 1.0};
}

double curve_value(std::span<const CurvePoint> e, double x) {
  auto it = std::upper_bound(e.begin(), e.end(), x,
                             [](double v, const CurvePoint& c) { return v < c.x; });
  if (it == e.begin()) return e.front().y;
  if (it == e.end()) return e.back().y;
  const CurvePoint& hi = *it;
  const CurvePoint& lo = *(it - 1);
  if (lo.x == x) return lo.y;
  return lo.y + (x - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
}

bool dominates(std::span<const CurvePoint> a, std::span<const CurvePoint> b, double tol) {
  for (const auto& c : b)
    if (curve_value(a, c.x) < curve_value(b, c.x) - tol) return false;
  for (const auto& c : a)
    if (curve_value(a, c.x) < curve_value(b, c.x) - tol) return false;
  return true;
}

Relation relation_from(bool p_over_q, bool q_over_p) {
  if (p_over_q && q_over_p) return Relation::Equivalent;
  if (p_over_q) return Relation::Future;
  if (q_over_p) return Relation::Past;
  return Relation::Incomparable;
}

}  // namespace

ProbVector ProbVector::strict(std::vector<double> entries) {
  check_entries(entries);
  for (double& v : entries) {
    require(v >= -kNegativeTolerance, ErrorKind::InvalidArgument,
            "probability vector has negative entry");
    if (v < 0.0) v = 0.0;
  }
  return ProbVector(std::move(entries), false);
}

ProbVector ProbVector::quasi(std::vector<double> entries) {
  check_entries(entries);
  return ProbVector(std::move(entries), true);
}

ProbVector uniform_vector(std::size_t d) {
  require(d >= 1, ErrorKind::InvalidArgument, "dimension must be positive");
  return ProbVector::strict(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

ProbVector sharp_vector(std::size_t d, std::size_t level) {
  require(level < d, ErrorKind::InvalidArgument, "sharp state level out of range");
  std::vector<double> v(d, 0.0);
  v[level] = 1.0;
  return ProbVector::strict(std::move(v));
}

std::vector<double> sorted_descending(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

GibbsContext GibbsContext::uniform(std::size_t d) {
  return finite(std::vector<double>(d, 0.0), 0.0);
}

GibbsContext GibbsContext::finite(std::vector<double> energies, double beta) {
  require(!energies.empty(), ErrorKind::InvalidArgument, "energy spectrum must be non-empty");
  require(!std::isnan(beta) && beta >= 0.0, ErrorKind::InvalidArgument,
          "inverse temperature must be non-negative");
  if (std::isinf(beta)) return zero_temperature(std::move(energies));
  for (double e : energies)
    require(std::isfinite(e), ErrorKind::InvalidArgument, "energies must be finite");
  const double emin = *std::min_element(energies.begin(), energies.end());
  std::vector<double> w(energies.size());
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-beta * (energies[i] - emin));
    s += w[i];
  }
  for (double& v : w) v /= s;
  GibbsContext c;
  c.energies_ = std::move(energies);
  c.beta_ = beta;
  c.infinite_ = false;
  c.gibbs_ = ProbVector::strict(std::move(w));
  c.log_partition_ = -beta * emin + std::log(s);
  c.partition_ = std::exp(c.log_partition_);
  return c;
}

GibbsContext GibbsContext::zero_temperature(std::vector<double> energies) {
  require(!energies.empty(), ErrorKind::InvalidArgument, "energy spectrum must be non-empty");
  for (double e : energies)
    require(std::isfinite(e), ErrorKind::InvalidArgument, "energies must be finite");
  const double emin = *std::min_element(energies.begin(), energies.end());
  const auto ground = static_cast<double>(std::count(energies.begin(), energies.end(), emin));
  std::vector<double> w(energies.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = energies[i] == emin ? 1.0 / ground : 0.0;
  GibbsContext c;
  c.energies_ = std::move(energies);
  c.beta_ = std::numeric_limits<double>::infinity();
  c.infinite_ = true;
  c.gibbs_ = ProbVector::strict(std::move(w));
  c.partition_ = std::numeric_limits<double>::quiet_NaN();
  c.log_partition_ = std::numeric_limits<double>::quiet_NaN();
  return c;
}

GibbsContext GibbsContext::from_distribution(std::vector<double> gibbs) {
  ProbVector g = ProbVector::strict(std::move(gibbs));
  GibbsContext c;
  c.energies_.resize(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    c.energies_[i] = g[i] > 0.0 ? -std::log(g[i]) : std::numeric_limits<double>::infinity();
  c.beta_ = 1.0;
  c.infinite_ = false;
  c.gibbs_ = std::move(g);
  c.partition_ = 1.0;
  c.log_partition_ = 0.0;
  return c;
}

bool GibbsContext::has_vanishing_weights() const noexcept {
  const auto& g = gibbs_.values();
  return std::any_of(g.begin(), g.end(), [](double v) { return v <= 0.0; });
}

BetaOrder BetaOrder::from_sequence(std::vector<std::size_t> levels_by_rank) {
  const std::size_t d = levels_by_rank.size();
  BetaOrder b;
  b.ranks_.assign(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const std::size_t l = levels_by_rank[r];
    require(l < d && b.ranks_[l] == d, ErrorKind::InvalidArgument,
            "chamber sequence must be a permutation");
    b.ranks_[l] = r;
  }
  b.sequence_ = std::move(levels_by_rank);
  return b;
}

BetaOrder BetaOrder::identity(std::size_t d) {
  std::vector<std::size_t> s(d);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return from_sequence(std::move(s));
}

BetaOrder beta_order(std::span<const double> p, std::span<const double> gamma) {
  require(p.size() == gamma.size(), ErrorKind::DimensionMismatch,
          "state and Gibbs dimensions differ");
  std::vector<std::size_t> order;
  std::vector<double> ratio;
  sort_levels(p, gamma, order, ratio);
  return BetaOrder::from_sequence(std::move(order));
}

BetaOrder beta_order(const ProbVector& p, const GibbsContext& ctx) {
  return beta_order(p.entries(), ctx.gibbs().entries());
}

std::vector<BetaOrder> all_chambers(std::size_t d) {
  require(d >= 1 && d <= kMaxChamberDim, ErrorKind::Unsupported,
          "chamber enumeration supports dimensions 1.." + std::to_string(kMaxChamberDim));
  std::vector<std::size_t> s(d);
  std::iota(s.begin(), s.end(), std::size_t{0});
  std::vector<BetaOrder> out;
  do {
    out.push_back(BetaOrder::from_sequence(s));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

double LorenzCurve::value_at(double x) const {
  if (elbows_.empty()) return 0.0;
  return curve_value(elbows_, x);
}

LorenzCurve chamber_curve(std::span<const double> v, std::span<const double> gamma,
                          const BetaOrder& chamber) {
  require(v.size() == gamma.size() && v.size() == chamber.dim(), ErrorKind::DimensionMismatch,
          "curve inputs have mismatched dimensions");
  std::vector<CurvePoint> e;
  build_elbows(v, gamma, chamber.sequence(), e);
  return LorenzCurve(std::move(e));
}

LorenzCurve thermo_curve(const ProbVector& p, const GibbsContext& ctx) {
  return chamber_curve(p.entries(), ctx.gibbs().entries(), beta_order(p, ctx));
}

bool curve_dominates(const LorenzCurve& a, const LorenzCurve& b, double tol) {
  return dominates(a.elbows(), b.elbows(), tol);
}

bool thermomajorises(const ProbVector& p, const ProbVector& q, const GibbsContext& ctx) {
  require(p.dim() == ctx.dim() && q.dim() == ctx.dim(), ErrorKind::DimensionMismatch,
          "state and Gibbs dimensions differ");
  return curve_dominates(thermo_curve(p, ctx), thermo_curve(q, ctx));
}

bool majorises(std::span<const double> p, std::span<const double> q, double tol) {
  require(p.size() == q.size(), ErrorKind::DimensionMismatch, "vectors have different dimensions");
  const auto ps = sorted_descending(p);
  const auto qs = sorted_descending(q);
  double a = 0.0, b = 0.0;
  for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
    a += ps[k];
    b += qs[k];
    if (a < b - tol) return false;
  }
  return true;
}

Relation classify(const ProbVector& q, const ProbVector& p, const GibbsContext& ctx) {
  require(p.dim() == ctx.dim() && q.dim() == ctx.dim(), ErrorKind::DimensionMismatch,
          "state and Gibbs dimensions differ");
  const LorenzCurve fp = thermo_curve(p, ctx);
  const LorenzCurve fq = thermo_curve(q, ctx);
  return relation_from(curve_dominates(fp, fq), curve_dominates(fq, fp));
}

RelationClassifier::RelationClassifier(const ProbVector& p, const GibbsContext& ctx)
    : p_(p), ctx_(ctx), p_curve_(thermo_curve(p, ctx)) {
  require(p.dim() == ctx.dim(), ErrorKind::DimensionMismatch, "state and Gibbs dimensions differ");
}

Relation RelationClassifier::operator()(std::span<const double> q) {
  require(q.size() == p_.dim(), ErrorKind::DimensionMismatch, "state dimension mismatch");
  const auto gamma = ctx_.gibbs().entries();
  sort_levels(q, gamma, order_, ratio_);
  build_elbows(q, gamma, order_, q_elbows_);
  const auto& pe = p_curve_.elbows();
  return relation_from(dominates(pe, q_elbows_, kCurveTolerance),
                       dominates(q_elbows_, pe, kCurveTolerance));
}

}  // namespace thermocone

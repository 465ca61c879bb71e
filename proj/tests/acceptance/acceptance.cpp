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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
// the number of failed criteria. Every tolerance and budget is fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cones.hpp"
#include "entanglement.hpp"
#include "lattice.hpp"
#include "oracles.hpp"
#include "probabilistic.hpp"
#include "qubit.hpp"
#include "random_states.hpp"
#include "simplex.hpp"
#include "volumes.hpp"
#include "wishart.hpp"

using namespace thermocone;

namespace {

constexpr double kSumTol = 1e-9;
constexpr double kSigmas = 3.0;
constexpr double kTangentTol = 1e-12;
constexpr double kRoundTripTol = 1e-14;
// Closed-form anchors evaluate polynomials at 1/3; allow a few ulp.
constexpr double kAnchorTol = 1e-15;
constexpr double kQubitTol = 1e-6;
constexpr double kKsMinP = 0.01;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

ProbVector pv(std::vector<double> v) { return ProbVector::strict(std::move(v)); }

std::vector<double> energies(std::size_t d) {
  std::vector<double> e(d);
  std::iota(e.begin(), e.end(), 0.0);
  return e;
}

GibbsContext context(std::size_t d, double beta) {
  return beta == 0.0 ? GibbsContext::uniform(d) : GibbsContext::finite(energies(d), beta);
}

double binomial_se(double v, std::size_t n) { return std::sqrt(std::max(v * (1.0 - v), 0.0) / double(n)); }

// Convex mixture of points with flat Dirichlet weights.
std::vector<double> mixture(tc_test::StateGen& gen, const std::vector<Point>& pts) {
  const auto w = gen.simplex(pts.size());
  std::vector<double> q(pts.front().size(), 0.0);
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += w[k] * pts[k][i];
  double s = 0.0;
  for (double& x : q) s += x = std::max(x, 0.0);
  for (double& x : q) x /= s;
  return q;
}

// ---- 1 ----
void closed_form_identity(Outcome& out) {
  const std::size_t n_states = 1000, n_mc_states = 20, n_mc = 1000000;
  tc_test::StateGen gen(101);
  std::vector<ProbVector> states;
  double worst_sum = 0.0;
  for (std::size_t i = 0; i < n_states; ++i) {
    states.push_back(pv(gen.simplex(3)));
    const auto c = closed_form_d3(states.back());
    worst_sum = std::max(worst_sum, std::abs(c.v_future + c.v_past + c.v_incomparable - 1.0));
  }
  out.require(worst_sum <= kSumTol, "volumes sum to one");

  const auto ctx = GibbsContext::uniform(3);
  const auto samples = uniform_samples(3, n_mc, 102);
  double worst_z = 0.0;
  for (std::size_t i = 0; i < n_mc_states; ++i) {
    const auto c = closed_form_d3(states[i]);
    const auto m = volumes_from_samples(states[i], ctx, samples);
    const double exact[3] = {c.v_future, c.v_past, c.v_incomparable};
    const double mc[3] = {m.v_future, m.v_past, m.v_incomparable};
    for (int k = 0; k < 3; ++k) {
      const double se = binomial_se(exact[k], n_mc);
      const double z = se > 0 ? std::abs(mc[k] - exact[k]) / se : (mc[k] == exact[k] ? 0.0 : INFINITY);
      worst_z = std::max(worst_z, z);
    }
  }
  out.require(worst_z <= kSigmas, "Monte Carlo within 3 sigma");
  out.detail << "max |sum-1| = " << worst_sum << " over " << n_states << " states; max deviation "
             << worst_z << " sigma over " << n_mc_states << " states at " << n_mc << " samples";
}

// ---- 2 ----
void anchors(Outcome& out) {
  const auto sharp = closed_form_d3(pv({1, 0, 0}));
  const auto eta = closed_form_d3(uniform_vector(3));
  out.require(sharp.v_future == 1.0, "v_future(sharp) == 1");
  out.require(std::abs(eta.v_past - 1.0) <= kAnchorTol, "v_past(uniform) == 1");
  std::size_t checked = 0;
  for (std::size_t d : {3u, 4u}) {
    const auto samples = uniform_samples(d, 100000, 103);
    for (double beta : {0.0, 0.25, 0.5, 1.0, 2.0, 5.0}) {
      const auto ctx = context(d, beta);
      const auto f = exact_future_volume(ctx.gibbs(), ctx);
      const auto m = volumes_from_samples(ctx.gibbs(), ctx, samples);
      out.require(f.v_future == 0.0, "exact v_future(gibbs) == 0 at beta " + std::to_string(beta));
      out.require(m.v_future == 0.0 && 1.0 - m.v_past == 0.0,
                  "sampled v_future(gibbs) == 0 and v_past == 1 at beta " + std::to_string(beta));
      ++checked;
    }
  }
  out.detail << "v_future(sharp) = " << sharp.v_future << ", 1 - v_past(uniform) = " << 1.0 - eta.v_past
             << "; Gibbs anchors at " << checked << " (d, beta) pairs";
}

// ---- 3 ----
void tangent_identity(Outcome& out) {
  tc_test::StateGen gen(104);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = pv(gen.simplex(3));
    const auto t = tangent_vectors_uniform(p);
    worst = std::max(worst, tc_test::max_abs_diff(t[1].entries, sorted_descending(p.entries())));
  }
  out.require(worst <= kTangentTol, "t(2) equals p");

  std::size_t bad = 0, curves = 0;
  for (std::size_t d : {3u, 4u, 5u}) {
    for (double beta : {0.0, 0.7}) {
      const auto ctx = context(d, beta);
      for (int i = 0; i < 200; ++i) {
        const auto p = pv(gen.simplex(d));
        const auto own = beta_order(p, ctx);
        const auto fp = thermo_curve(p, ctx);
        const auto& e = fp.elbows();
        for (const auto& t : tangent_vectors_thermal(p, ctx, own)) {
          ++curves;
          const auto ft = chamber_curve(t.entries, ctx.gibbs().entries(), own);
          for (std::size_t k : {t.level - 1, t.level})
            if (std::abs(ft.value_at(e[k].x) - e[k].y) > kTangentTol) ++bad;
          for (const auto& x : e)
            if (ft.value_at(x.x) < x.y - kTangentTol) ++bad;
          for (const auto& x : ft.elbows())
            if (x.y < fp.value_at(x.x) - kTangentTol) ++bad;
        }
      }
    }
  }
  out.require(bad == 0, "tangency and dominance");
  out.detail << "max |t(2)-p| = " << worst << "; " << curves << " tangent curves, " << bad << " violations";
}

// ---- 4 ----
void region_oracle(Outcome& out) {
  tc_test::StateGen gen(105);
  std::size_t points = 0, bad = 0;
  for (std::size_t d : {3u, 4u}) {
    for (double beta : {0.0, 0.5, 1.0}) {
      const auto ctx = context(d, beta);
      for (int s = 0; s < 5; ++s) {
        const auto p = pv(gen.simplex(d));
        const ConeRegion region(p, ctx);
        RelationClassifier cls(p, ctx);
        for (int i = 0; i < 20000; ++i) {
          const auto q = gen.simplex(d);
          if (region.locate(q) != cls(q)) ++bad;
          ++points;
        }
      }
    }
  }
  out.require(bad == 0, "no disagreements");
  out.detail << points << " points over 6 (d, beta) settings, " << bad << " disagreements";
}

// ---- 5 ----
void lattice_identities(Outcome& out) {
  tc_test::StateGen gen(106);
  double worst = 0.0;
  std::size_t bad = 0;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t d = 3 + gen.index(3);
    const auto ctx = context(d, i % 4 == 0 ? 0.0 : gen.uniform(0.1, 2.0));
    const auto p = pv(gen.simplex(d));
    const auto v = embed(p, ctx);
    worst = std::max(worst, tc_test::max_abs_diff(project(v, beta_order(p, ctx)).values(), p.values()));
    for (const auto& pi : all_chambers(d)) {
      const auto r = project(v, pi);
      if (!thermomajorises(p, r, ctx)) ++bad;
      if (!embedded_majorises(v, embed(r, v.grid, ctx))) ++bad;
    }
  }
  out.require(worst <= kRoundTripTol, "project(embed(p)) == p");
  out.require(bad == 0, "projections lie below p");

  std::size_t join_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t d = 2 + gen.index(6);
    const auto p = gen.simplex(d), q = gen.simplex(d);
    const auto j = join_uniform(pv(p), pv(q));
    if (!tc_test::majorises_by_heads(j.values(), p) || !tc_test::majorises_by_heads(j.values(), q)) ++join_bad;
  }
  out.require(join_bad == 0, "join is an upper bound");
  out.detail << "max round-trip error " << worst << "; " << bad << " projection and " << join_bad
             << " join violations over 10000 pairs";
}

// ---- 6 ----
void probabilistic(Outcome& out) {
  const auto p = pv({0.7, 0.2, 0.1});
  const int res = 60;
  std::vector<std::vector<double>> grid;
  for (int i = 0; i <= res; ++i)
    for (int j = 0; i + j <= res; ++j) grid.push_back({double(i) / res, double(j) / res, double(res - i - j) / res});

  auto in_future = [](ProbRelation r) { return r == ProbRelation::Future || r == ProbRelation::Interconvertible; };
  auto in_past = [](ProbRelation r) { return r == ProbRelation::Past || r == ProbRelation::Interconvertible; };

  std::vector<ProbRelation> prev;
  std::size_t nest_bad = 0, empty_inter = 0;
  double p_star = -1.0;
  bool stays_empty = true;
  std::size_t incomparable_at_one = 0;
  for (int step = 0; step <= 100; ++step) {
    const double P = 1.0 - 0.005 * step;
    std::vector<ProbRelation> cur;
    std::size_t inter = 0, incomparable = 0;
    for (const auto& q : grid) {
      cur.push_back(prob_classify(pv(q), p, P));
      if (cur.back() == ProbRelation::Interconvertible) ++inter;
      if (cur.back() == ProbRelation::Incomparable) ++incomparable;
    }
    if (step == 0) incomparable_at_one = incomparable;
    if (step > 0) {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (in_future(prev[i]) && !in_future(cur[i])) ++nest_bad;
        if (in_past(prev[i]) && !in_past(cur[i])) ++nest_bad;
      }
      if (inter == 0) ++empty_inter;
    }
    if (incomparable == 0 && p_star < 0) p_star = P;
    if (incomparable != 0 && p_star >= 0) stays_empty = false;
    prev = std::move(cur);
  }
  out.require(nest_bad == 0, "cones nest as P decreases");
  out.require(empty_inter == 0, "interconvertible region non-empty for P < 1");
  out.require(incomparable_at_one > 0 && p_star > 0 && stays_empty, "incomparable set empties below some P*");

  tc_test::StateGen gen(107);
  std::size_t certain = 0, vidal_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t d = 3 + gen.index(3);
    auto a = gen.simplex(d);
    std::vector<double> b;
    if (i % 2 == 0) {
      b = gen.simplex(d);
    } else {
      // A random convex mixture of permutations of a is majorised by a.
      b.assign(d, 0.0);
      const auto w = gen.simplex(4);
      for (double wk : w) {
        auto perm = a;
        std::shuffle(perm.begin(), perm.end(), gen.engine());
        for (std::size_t k = 0; k < d; ++k) b[k] += wk * perm[k];
      }
      std::swap(a, b);  // now b majorises a
    }
    const bool oracle = tc_test::majorises_by_heads(b, a);
    const bool one = vidal_probability(pv(a), pv(b)) >= 1.0 - 1e-12;
    if (oracle) ++certain;
    if (oracle != one) ++vidal_bad;
  }
  out.require(vidal_bad == 0, "vidal probability one iff majorised");
  out.detail << "P* = " << p_star << " on a " << grid.size() << "-point grid; " << nest_bad
             << " nesting violations; " << vidal_bad << " Vidal mismatches over 10000 pairs (" << certain
             << " certain)";
}

// ---- 7 ----
void monotonicity(Outcome& out) {
  tc_test::StateGen gen(108);
  const std::size_t n_mc = 100000;
  const auto samples = uniform_samples(3, n_mc, 109);
  const double betas[] = {0.0, 0.5, 1.0, 2.0};
  std::size_t fut_bad = 0, past_bad = 0, pairs = 0;
  for (int s = 0; s < 100; ++s) {
    const auto ctx = context(3, betas[s % 4]);
    const auto p = pv(gen.simplex(3));
    const auto vertices = future_cone(p, ctx).vertices;
    const double fp = exact_future_volume(p, ctx).v_future;
    const auto mp = volumes_from_samples(p, ctx, samples);
    for (int k = 0; k < 10; ++k) {
      const auto q = pv(mixture(gen, vertices));
      const double fq = exact_future_volume(q, ctx).v_future;
      const auto mq = volumes_from_samples(q, ctx, samples);
      if (fq > fp + 1e-12) ++fut_bad;
      if (1.0 - mq.v_past > 1.0 - mp.v_past + kSigmas * std::max(mp.se_past, mq.se_past)) ++past_bad;
      ++pairs;
    }
  }
  out.require(fut_bad == 0, "v_future does not increase");
  out.require(past_bad == 0, "1 - v_past does not increase");
  out.detail << pairs << " source/future pairs; " << fut_bad << " future and " << past_bad << " past violations";
}

// ---- 8 ----
void extremal_properties(Outcome& out) {
  tc_test::StateGen gen(110);
  const std::size_t n_mc = 100000;

  // Non-full-rank states have a past of zero volume.
  double worst_past = 0.0;
  for (std::size_t d : {3u, 4u}) {
    const auto samples = uniform_samples(d, n_mc, 111);
    for (double beta : {0.0, 0.5, 1.0}) {
      const auto ctx = context(d, beta);
      for (int i = 0; i < 10; ++i) {
        const auto m = volumes_from_samples(pv(gen.face(d, 1)), ctx, samples);
        const double bound = kSigmas * std::sqrt(1.0 / double(n_mc));
        worst_past = std::max(worst_past, m.v_past);
        out.require(m.v_past <= bound, "non-full-rank past volume");
      }
    }
  }

  // The Gibbs state with its top level emptied has the largest incomparable
  // region among non-full-rank states.
  std::size_t g_bad = 0;
  const auto samples3 = uniform_samples(3, n_mc, 112);
  for (double beta : {0.5, 1.0}) {
    const auto ctx = context(3, beta);
    std::vector<double> gv = ctx.gibbs().values();
    gv.back() = 0.0;
    const double z = gv[0] + gv[1];
    for (double& x : gv) x /= z;
    const auto g = pv(gv);
    const double fg = exact_future_volume(g, ctx).v_future;
    const auto mg = volumes_from_samples(g, ctx, samples3);
    for (int i = 0; i < 50; ++i) {
      const auto p = pv(gen.face(3, 1));
      if (exact_future_volume(p, ctx).v_future < fg - 1e-12) ++g_bad;
      const auto mp = volumes_from_samples(p, ctx, samples3);
      if (mp.v_incomparable > mg.v_incomparable + kSigmas * std::max(mg.se_incomparable, mp.se_incomparable))
        ++g_bad;
    }
  }
  out.require(g_bad == 0, "emptied Gibbs state maximises the incomparable volume");

  // Passive and maximally active permutations bound the volumes.
  std::size_t perm_bad = 0;
  const std::vector<double> passive{0.52, 0.36, 0.12};
  for (int b = 0; b < 10; ++b) {
    const auto ctx = context(3, 0.2 * b);
    std::vector<double> perm = passive;
    std::sort(perm.begin(), perm.end());
    std::vector<double> fut, past, se;
    std::vector<std::vector<double>> states;
    do {
      states.push_back(perm);
      fut.push_back(exact_future_volume(pv(perm), ctx).v_future);
      const auto m = volumes_from_samples(pv(perm), ctx, samples3);
      past.push_back(m.v_past);
      se.push_back(m.se_past);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto ip = std::find(states.begin(), states.end(), passive) - states.begin();
    const auto ia = std::find(states.begin(), states.end(), std::vector<double>{0.12, 0.36, 0.52}) - states.begin();
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (fut[ip] > fut[k] + 1e-12 || fut[ia] < fut[k] - 1e-12) ++perm_bad;
      const double tol = kSigmas * std::max({se[ip], se[ia], se[k]});
      if (past[ip] < past[k] - tol || past[ia] > past[k] + tol) ++perm_bad;
    }
  }
  out.require(perm_bad == 0, "passive/maximally-active extremality");

  // At zero temperature the past is convex.
  std::size_t convex_bad = 0, tested = 0;
  for (std::size_t d : {3u, 4u}) {
    const auto ctx = GibbsContext::zero_temperature(energies(d));
    for (int s = 0; s < 20; ++s) {
      const auto p = pv(gen.simplex(d));
      std::vector<std::vector<double>> past_pts;
      while (past_pts.size() < 100) {
        auto q = gen.simplex(d);
        const Relation r = classify(pv(q), p, ctx);
        if (r == Relation::Past || r == Relation::Equivalent) past_pts.push_back(std::move(q));
      }
      for (int k = 0; k < 500; ++k) {
        const auto& a = past_pts[gen.index(past_pts.size())];
        const auto& c = past_pts[gen.index(past_pts.size())];
        const double lam = gen.uniform(0.0, 1.0);
        std::vector<double> m(d);
        for (std::size_t i = 0; i < d; ++i) m[i] = lam * a[i] + (1.0 - lam) * c[i];
        if (!thermomajorises(pv(m), p, ctx)) ++convex_bad;
        ++tested;
      }
    }
  }
  out.require(convex_bad == 0, "zero-temperature past is convex");
  out.detail << "max non-full-rank v_past " << worst_past << "; " << g_bad << " incomparable-maximum, " << perm_bad
             << " permutation and " << convex_bad << "/" << tested << " convexity violations";
}

// ---- 9 ----
std::size_t near_centre(const SampleSet& s, double r) {
  const double eta = 1.0 / double(s.dim);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double m = 0.0;
    for (double v : s.row(i)) m = std::max(m, std::abs(v - eta));
    if (m < r) ++hits;
  }
  return hits;
}

void entanglement_sampler(Outcome& out) {
  const std::size_t n = 10000;
  const auto lib = sample_schmidt({3, 6, 113}, n);
  std::mt19937_64 rng(114);
  std::vector<std::vector<double>> oracle(3);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ev = tc_test::wishart_spectrum(rng, 3, 6);
    for (int k = 0; k < 3; ++k) oracle[k].push_back(ev[k]);
  }
  double min_p = 1.0;
  for (int k = 0; k < 3; ++k) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = lib.row(i)[k];
    min_p = std::min(min_p, tc_test::ks_two_sample_p(col, oracle[k]));
  }
  out.require(min_p > kKsMinP, "KS agreement with the Wishart oracle");

  // Fraction within sup-distance 0.08 of the uniform vector; separations are
  // required to exceed 3 binomial sigma.
  const std::size_t m = 50000;
  const double r = 0.08;
  auto frac = [&](std::size_t h) { return double(h) / double(m); };
  auto separated = [&](double lo, double hi) {
    return hi - lo > kSigmas * std::hypot(binomial_se(lo, m), binomial_se(hi, m));
  };
  const double flat = frac(near_centre(uniform_samples(3, m, 115), r));
  std::vector<double> conc;
  for (std::size_t env : {3u, 6u, 12u, 30u}) conc.push_back(frac(near_centre(sample_schmidt({3, env, 116}, m), r)));
  out.require(separated(conc[0], flat), "centre depleted at M = N");
  bool increasing = true;
  for (std::size_t k = 1; k < conc.size(); ++k) increasing = increasing && separated(conc[k - 1], conc[k]);
  out.require(increasing, "centre concentration increases with M");
  out.detail << "min KS p = " << min_p << " at n = " << n << "; centre fraction flat " << flat << ", M=3,6,12,30: "
             << conc[0] << ", " << conc[1] << ", " << conc[2] << ", " << conc[3];
}

// ---- 10 ----
Relation incoherent(double q, double p, double gamma) {
  return classify(pv({q, 1.0 - q}), pv({p, 1.0 - p}), GibbsContext::from_distribution({gamma, 1.0 - gamma}));
}

BlochState random_bloch_xz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double x = u(rng), z = u(rng);
    if (x * x + z * z <= 1.0) return {x, 0.0, z};
  }
}

void qubit(Outcome& out) {
  const QubitThermalContext ctx(1.0 / 3.0);
  const BlochState ref{0.2, 0.0, 0.5};
  const auto g = gp_quantities(ref, ctx);
  const double s57 = std::sqrt(57.0) / 30.0;
  const double exact[] = {s57 + 1.0 / 6.0, s57 - 1.0 / 6.0, 9.0 * (s57 - 1.0 / 6.0 + 1.0 / 9.0) / 8.0,
                          9.0 * (s57 + 1.0 / 6.0 - 1.0 / 9.0) / 8.0};
  const double got[] = {g.r_plus, g.r_minus, g.r1, g.r2};
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(got[k] - exact[k]));
  out.require(worst <= kQubitTol, "R+, R-, R1, R2");

  std::mt19937_64 rng(117);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t hits = 0, violations = 0;
  const auto src = to_population_coherence(ref);
  for (int i = 0; i < 10000; ++i) {
    const auto tgt = random_bloch_xz(rng);
    if (to_reachable(src, to_population_coherence(tgt), ctx)) {
      ++hits;
      const Relation r = gp_classify(tgt, ref, ctx);
      if (r != Relation::Future && r != Relation::Equivalent) ++violations;
    }
  }
  for (int i = 0; i < 10000; ++i) {
    const QubitThermalContext c(0.9 * u(rng));
    const auto s = random_bloch_xz(rng), t = random_bloch_xz(rng);
    if (to_reachable(to_population_coherence(s), to_population_coherence(t), c)) {
      ++hits;
      const Relation r = gp_classify(t, s, c);
      if (r != Relation::Future && r != Relation::Equivalent) ++violations;
    }
  }
  out.require(hits > 0 && violations == 0, "thermal operations inside Gibbs-preserving");

  std::size_t disagree = 0;
  for (int i = 0; i < 10000; ++i) {
    const QubitThermalContext c(0.9 * u(rng));
    const double gam = c.gamma_ground(), p = u(rng), q = u(rng);
    const Relation want = incoherent(q, p, gam);
    if (to_classify({q, 0.0}, {p, 0.0}, c) != want) ++disagree;
    if (gp_classify({0.0, 0.0, 2 * q - 1}, {0.0, 0.0, 2 * p - 1}, c) != want) ++disagree;
  }
  out.require(disagree == 0, "zero-coherence reduction");
  out.detail << "max deviation " << worst << "; " << hits << " reachable targets, " << violations
             << " outside GP; " << disagree << " diagonal disagreements";
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"closed-form volume identity", 120, closed_form_identity},
      {"sharp, uniform and Gibbs anchors", 30, anchors},
      {"tangent identity", 30, tangent_identity},
      {"incomparable-region oracle equivalence", 300, region_oracle},
      {"lattice identities", 60, lattice_identities},
      {"probabilistic cones", 60, probabilistic},
      {"monotonicity", 600, monotonicity},
      {"extremal-state properties", 300, extremal_properties},
      {"entanglement sampler", 300, entanglement_sampler},
      {"qubit cones", 60, qubit},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > criteria[i].budget_s) out.require(false, "runtime budget");
    if (!out.pass) ++failed;
    std::printf("[%s] %2zu %s: %s (%.1f s, budget %.0f s)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                out.detail.str().c_str(), secs, criteria[i].budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

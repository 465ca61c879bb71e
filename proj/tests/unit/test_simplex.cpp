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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "random_states.hpp"
#include "simplex.hpp"

using namespace thermocone;

namespace {
ProbVector pv(std::vector<double> v) { return ProbVector::strict(std::move(v)); }
}  // namespace

TEST_CASE("probability vectors validate their entries") {
  CHECK_THROWS_AS(pv({0.5, 0.4}), Error);
  CHECK_THROWS_AS(pv({1.2, -0.2}), Error);
  CHECK_NOTHROW(ProbVector::quasi({1.2, -0.2}));
  CHECK(pv({0.5, 0.5 + 1e-13}).dim() == 2);
  auto clamped = pv({1.0, -1e-13});
  CHECK(clamped[1] == 0.0);
}

TEST_CASE("gibbs contexts") {
  auto u = GibbsContext::finite({0, 1, 2}, 0.0);
  for (double g : u.gibbs().values()) CHECK(g == doctest::Approx(1.0 / 3));
  auto c = GibbsContext::finite({0, 1, 2}, 1.0);
  const double z = 1 + std::exp(-1.0) + std::exp(-2.0);
  CHECK(c.partition() == doctest::Approx(z).epsilon(1e-14));
  CHECK(c.gamma(2) == doctest::Approx(std::exp(-2.0) / z).epsilon(1e-14));
  auto inf = GibbsContext::finite({0, 0, 3}, INFINITY);
  CHECK(inf.infinite_beta());
  CHECK(inf.gamma(0) == 0.5);
  CHECK(inf.gamma(1) == 0.5);
  CHECK(inf.gamma(2) == 0.0);
  CHECK(inf.has_vanishing_weights());
  CHECK_THROWS_AS(GibbsContext::finite({0, 1}, -1.0), Error);
  auto fd = GibbsContext::from_distribution({2.0 / 3, 1.0 / 3});
  CHECK(fd.gamma(0) == doctest::Approx(2.0 / 3));
}

TEST_CASE("beta order") {
  auto p = pv({0.4, 0.36, 0.24});
  CHECK(beta_order(p, GibbsContext::finite({0, 1, 2}, 0.0)) == BetaOrder::identity(3));
  auto b1 = beta_order(p, GibbsContext::finite({0, 1, 2}, 1.0));
  CHECK(b1.sequence() == std::vector<std::size_t>{2, 1, 0});
  CHECK(b1.rank_of(2) == 0);
  auto ctx = GibbsContext::finite({0, 1, 2}, 0.7);
  CHECK(beta_order(ctx.gibbs(), ctx) == BetaOrder::identity(3));
  CHECK_THROWS_AS(beta_order(pv({0.5, 0.5}), ctx), Error);
  CHECK(all_chambers(4).size() == 24);
}

TEST_CASE("thermomajorisation curves") {
  auto u = GibbsContext::uniform(3);
  auto f = thermo_curve(pv({0.6, 0.3, 0.1}), u);
  REQUIRE(f.elbows().size() == 4);
  CHECK(f.elbows()[1].x == doctest::Approx(1.0 / 3));
  CHECK(f.elbows()[1].y == doctest::Approx(0.6));
  CHECK(f.elbows()[2].x == doctest::Approx(2.0 / 3));
  CHECK(f.elbows()[2].y == doctest::Approx(0.9));
  CHECK(f.elbows()[3].y == 1.0);
  CHECK(f.value_at(0.5) == doctest::Approx(0.75));

  auto ctx = GibbsContext::finite({0, 1, 2}, 0.8);
  auto g = thermo_curve(ctx.gibbs(), ctx);
  for (double x : {0.1, 0.35, 0.8}) CHECK(g.value_at(x) == doctest::Approx(x));

  auto s = thermo_curve(pv({1, 0, 0}), ctx);
  CHECK(s.value_at(ctx.gamma(0)) == doctest::Approx(1.0));
}

TEST_CASE("zero Gibbs weight levels produce a vertical first segment") {
  auto ctx = GibbsContext::zero_temperature({0, 1, 2});
  auto f = thermo_curve(pv({0.2, 0.5, 0.3}), ctx);
  CHECK(f.value_at(0.0) == doctest::Approx(0.8));
  CHECK(f.value_at(1.0) == 1.0);
  CHECK(thermomajorises(pv({0.1, 0.9, 0.0}), pv({0.2, 0.5, 0.3}), ctx));
  CHECK_FALSE(thermomajorises(pv({0.3, 0.4, 0.3}), pv({0.2, 0.5, 0.3}), ctx));
}

TEST_CASE("classification examples") {
  auto u = GibbsContext::uniform(3);
  auto p = pv({0.6, 0.3, 0.1});
  CHECK(classify(pv({0.5, 0.45, 0.05}), p, u) == Relation::Incomparable);
  CHECK(classify(p, p, u) == Relation::Equivalent);
  CHECK(classify(uniform_vector(3), p, u) == Relation::Future);
  CHECK(classify(pv({1, 0, 0}), p, u) == Relation::Past);
  CHECK(std::string(to_string(Relation::Incomparable)) == "incomparable");
  for (std::size_t i = 0; i < 3; ++i) CHECK(thermomajorises(sharp_vector(3, i), p, u));

  // p above q everywhere, c crossing both, at a finite temperature.
  auto ctx = GibbsContext::finite({0, 1, 2}, 1.0);
  auto pp = pv({0.5, 0.3, 0.2});
  auto qq = pv({0.6, 0.28, 0.12});
  auto cc = pv({0.75, 0.15, 0.1});
  CHECK(thermomajorises(pp, qq, ctx));
  CHECK(classify(cc, pp, ctx) == Relation::Incomparable);
  CHECK(classify(cc, qq, ctx) == Relation::Incomparable);
  const auto g = tc_test::gibbs_of({0, 1, 2}, 1.0);
  CHECK(tc_test::thermo_by_abs_sums(pp.values(), qq.values(), g));
  CHECK_FALSE(tc_test::thermo_by_abs_sums(cc.values(), qq.values(), g));
  CHECK_FALSE(tc_test::thermo_by_abs_sums(qq.values(), cc.values(), g));
}

TEST_CASE("thermomajorisation agrees with the absolute-sum criterion") {
  tc_test::StateGen gen(11);
  int disagreements = 0;
  for (int it = 0; it < 10000; ++it) {
    const std::size_t d = 2 + gen.index(5);
    std::vector<double> e(d);
    for (auto& x : e) x = gen.uniform(0.0, 3.0);
    const double beta = gen.uniform(0.0, 2.0);
    auto ctx = GibbsContext::finite(e, beta);
    auto p = gen.simplex(d);
    auto q = gen.simplex(d);
    // Pull q toward gamma half of the time so that comparable pairs are common.
    if (it % 2 == 0)
      for (std::size_t i = 0; i < d; ++i) q[i] = 0.5 * p[i] + 0.5 * ctx.gamma(i);
    const bool lib = thermomajorises(pv(p), pv(q), ctx);
    const bool ref = tc_test::thermo_by_abs_sums(p, q, ctx.gibbs().values());
    if (lib != ref) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("majorisation at zero beta matches sorted head sums") {
  tc_test::StateGen gen(12);
  int disagreements = 0;
  for (int it = 0; it < 10000; ++it) {
    const std::size_t d = 2 + gen.index(5);
    auto p = gen.simplex(d);
    auto q = gen.simplex(d);
    auto u = GibbsContext::uniform(d);
    if (thermomajorises(pv(p), pv(q), u) != tc_test::majorises_by_heads(p, q)) ++disagreements;
    if (majorises(p, q) != tc_test::majorises_by_heads(p, q)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("transitivity and partition on random triples") {
  tc_test::StateGen gen(13);
  int violations = 0;
  int chains = 0;
  for (int it = 0; it < 10000; ++it) {
    const std::size_t d = 2 + gen.index(5);
    auto ctx = GibbsContext::finite(std::vector<double>(d, 0.0), 0.0);
    if (it % 2) {
      std::vector<double> e(d);
      for (auto& x : e) x = gen.uniform(0.0, 2.0);
      ctx = GibbsContext::finite(e, gen.uniform(0.1, 2.0));
    }
    auto p = gen.simplex(d);
    auto q = gen.simplex(d);
    auto r = gen.simplex(d);
    // Mixing toward gamma produces states in the future.
    for (std::size_t i = 0; i < d; ++i) {
      q[i] = 0.7 * q[i] + 0.3 * ctx.gamma(i);
      r[i] = 0.4 * r[i] + 0.6 * ctx.gamma(i);
    }
    const bool pq = thermomajorises(pv(p), pv(q), ctx);
    const bool qr = thermomajorises(pv(q), pv(r), ctx);
    if (pq && qr) {
      ++chains;
      if (!thermomajorises(pv(p), pv(r), ctx)) ++violations;
    }
    RelationClassifier cls(pv(p), ctx);
    if (cls(q) != classify(pv(q), pv(p), ctx)) ++violations;
  }
  CHECK(chains > 100);
  CHECK(violations == 0);
}

TEST_CASE("gibbs state is in the future of every state") {
  tc_test::StateGen gen(14);
  auto ctx = GibbsContext::finite({0, 0.5, 1.3, 2}, 0.9);
  for (int it = 0; it < 200; ++it) {
    auto p = pv(gen.simplex(4));
    CHECK(classify(ctx.gibbs(), p, ctx) == Relation::Future);
    CHECK(classify(p, ctx.gibbs(), ctx) == Relation::Past);
  }
}

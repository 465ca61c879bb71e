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

#include <algorithm>
#include <cmath>
#include <vector>

#include "cones.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "random_states.hpp"

using namespace thermocone;

namespace {

ProbVector pv(std::vector<double> v) { return ProbVector::strict(std::move(v)); }

bool contains_point(const std::vector<Point>& set, const Point& p, double tol = 1e-9) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Point& q) { return tc_test::max_abs_diff(p, q) <= tol; });
}

bool same_point_set(const std::vector<Point>& a, const std::vector<Point>& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Point& p) { return contains_point(b, p, tol); });
}

bool satisfies(const std::vector<HalfSpace>& hs, const std::vector<double>& q, double tol = 1e-12) {
  for (const auto& h : hs) {
    double s = -h.b;
    for (std::size_t i = 0; i < q.size(); ++i) s += h.a[i] * q[i];
    if (s < -tol) return false;
  }
  return true;
}

GibbsContext random_context(tc_test::StateGen& gen, std::size_t d, double beta) {
  std::vector<double> e(d);
  for (auto& x : e) x = gen.uniform(0.0, 3.0);
  return GibbsContext::finite(e, beta);
}

}  // namespace

TEST_CASE("uniform tangent vectors") {
  auto t = tangent_vectors_uniform(pv({0.6, 0.3, 0.1}));
  REQUIRE(t.size() == 3);
  CHECK(tc_test::max_abs_diff(t[0].entries, {0.6, 0.6, -0.2}) < 1e-15);
  CHECK(tc_test::max_abs_diff(t[1].entries, {0.6, 0.3, 0.1}) < 1e-15);
  CHECK(tc_test::max_abs_diff(t[2].entries, {0.8, 0.1, 0.1}) < 1e-15);

  // Partial order among the d = 3 tangents.
  CHECK_FALSE(majorises(t[0].entries, t[2].entries));
  CHECK_FALSE(majorises(t[2].entries, t[0].entries));
  CHECK(majorises(t[0].entries, t[1].entries));
  CHECK(majorises(t[2].entries, t[1].entries));
  const std::vector<double> sharp{1, 0, 0};
  CHECK(majorises(sharp, project_to_simplex(t[0]).values()));
  CHECK(majorises(sharp, t[2].entries));
}

TEST_CASE("d = 4 tangent partial order") {
  auto t = tangent_vectors_uniform(pv({0.43, 0.37, 0.18, 0.02}));
  const auto t1 = project_to_simplex(t[0]).values();
  const auto t2 = project_to_simplex(t[1]).values();
  CHECK(majorises(t1, t2));
  CHECK(majorises(t[3].entries, t[2].entries));
  std::vector<double> mid(4);
  for (std::size_t i = 0; i < 4; ++i) mid[i] = 0.5 * (t2[i] + t[2].entries[i]);
  for (const auto& other : {t1, t2, t[2].entries, t[3].entries}) {
    CHECK_FALSE(majorises(other, mid));
    CHECK_FALSE(majorises(mid, other));
  }
}

TEST_CASE("projection sweep") {
  auto id3 = BetaOrder::identity(3);
  CHECK(tc_test::max_abs_diff(project_to_simplex(std::vector<double>{0.6, 0.6, -0.2}, id3).values(),
                              {0.6, 0.4, 0.0}) < 1e-15);
  CHECK(tc_test::max_abs_diff(
            project_to_simplex(std::vector<double>{0.9, 0.3, -0.1, -0.1}, BetaOrder::identity(4)).values(),
            {0.9, 0.1, 0.0, 0.0}) < 1e-15);
  CHECK(project_to_simplex(std::vector<double>{0.5, 0.3, 0.2}, id3).values() ==
        std::vector<double>{0.5, 0.3, 0.2});
  // Chamber order decides which neighbour absorbs the deficit.
  auto rev = BetaOrder::from_sequence({2, 1, 0});
  CHECK(tc_test::max_abs_diff(project_to_simplex(std::vector<double>{-0.2, 0.6, 0.6}, rev).values(),
                              {0.0, 0.4, 0.6}) < 1e-15);
  CHECK_THROWS_AS(project_to_simplex(std::vector<double>{-0.5, 0.75, 0.75}, id3), Error);
}

TEST_CASE("thermal tangents") {
  tc_test::StateGen gen(31);
  SUBCASE("zero beta reduces to the uniform construction") {
    auto ctx = GibbsContext::uniform(4);
    auto p = pv(gen.simplex(4));
    auto own = beta_order(p, ctx);
    auto uni = tangent_vectors_uniform(p);
    auto th = tangent_vectors_thermal(p, ctx, own);
    for (std::size_t n = 0; n < 4; ++n)
      for (std::size_t r = 0; r < 4; ++r)
        CHECK(th[n].entries[own.level_at(r)] == doctest::Approx(uni[n].entries[r]).epsilon(1e-13));
  }
  SUBCASE("non-full-rank states give a sharp last tangent") {
    auto ctx = GibbsContext::finite({0, 1, 2}, 0.7);
    auto p = pv({0.5, 0.5, 0.0});
    for (const auto& pi : all_chambers(3)) {
      auto t = tangent_vectors_thermal(p, ctx, pi);
      std::vector<double> sharp(3, 0.0);
      sharp[pi.level_at(0)] = 1.0;
      CHECK(tc_test::max_abs_diff(t[2].entries, sharp) < 1e-14);
    }
  }
  SUBCASE("tangency in the state's own chamber") {
    int bad = 0;
    for (int it = 0; it < 600; ++it) {
      const std::size_t d = 3 + static_cast<std::size_t>(it % 3);
      auto ctx = random_context(gen, d, it % 2 ? 0.0 : gen.uniform(0.1, 2.0));
      auto p = pv(gen.simplex(d));
      auto own = beta_order(p, ctx);
      const auto fp = thermo_curve(p, ctx);
      for (const auto& t : tangent_vectors_thermal(p, ctx, own)) {
        double sum = 0.0;
        for (double v : t.entries) sum += v;
        if (std::abs(sum - 1.0) > 1e-12) ++bad;
        const auto ft = chamber_curve(t.entries, ctx.gibbs().entries(), own);
        const auto& e = fp.elbows();
        for (std::size_t k : {t.level - 1, t.level})
          if (std::abs(ft.value_at(e[k].x) - e[k].y) > 1e-12) ++bad;
        for (const auto& x : e)
          if (ft.value_at(x.x) < x.y - 1e-12) ++bad;
        for (const auto& x : ft.elbows())
          if (x.y < fp.value_at(x.x) - 1e-12) ++bad;
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("future cone vertices") {
  auto u = GibbsContext::uniform(3);
  auto fc = future_cone(pv({0.6, 0.3, 0.1}), u);
  CHECK(fc.vertices.size() == 6);
  for (const auto& perm : std::vector<Point>{{0.6, 0.3, 0.1}, {0.1, 0.6, 0.3}, {0.3, 0.1, 0.6}})
    CHECK(contains_point(fc.vertices, perm, 1e-15));
  CHECK(future_cone(pv({0.5, 0.25, 0.25}), u).vertices.size() == 3);

  auto ctx = GibbsContext::finite({0, 1, 2}, 0.5);
  auto g = future_cone(ctx.gibbs(), ctx);
  REQUIRE(g.vertices.size() == 1);
  CHECK(tc_test::max_abs_diff(g.vertices[0], ctx.gibbs().values()) < 1e-15);

  auto p = pv({0.4, 0.36, 0.24});
  auto f = future_cone(p, ctx);
  // Orders (0,1,2) and (0,2,1) both sample the last linear piece of the curve
  // and give the same vertex.
  CHECK(f.vertices.size() == 5);
  const auto hs = future_constraints(p, ctx);
  for (const auto& v : f.vertices) {
    CHECK(thermomajorises(p, pv(v), ctx));
    CHECK(satisfies(hs, v));
  }
  CHECK(satisfies(hs, ctx.gibbs().values()));
  // The facet description and the vertex list describe the same polytope.
  CHECK(same_point_set(enumerate_vertices(hs, 3), f.vertices));
}

TEST_CASE("future cone vertex and facet descriptions agree") {
  tc_test::StateGen gen(32);
  for (int it = 0; it < 60; ++it) {
    const std::size_t d = 3 + static_cast<std::size_t>(it % 2);
    auto ctx = random_context(gen, d, gen.uniform(0.0, 1.5));
    auto p = pv(gen.simplex(d));
    auto f = future_cone(p, ctx);
    CHECK(same_point_set(extreme_points(f.vertices), extreme_points(enumerate_vertices(future_constraints(p, ctx), d))));
  }
}

TEST_CASE("region oracle agrees with direct classification") {
  tc_test::StateGen gen(33);
  for (std::size_t d : {3u, 4u}) {
    for (double beta : {0.0, 0.5, 1.0}) {
      auto ctx = random_context(gen, d, beta);
      for (int s = 0; s < 4; ++s) {
        auto p = pv(gen.simplex(d));
        ConeRegion region(p, ctx);
        int bad = 0;
        for (int it = 0; it < 500; ++it) {
          auto q = gen.simplex(d);
          if (region.locate(q) != classify(pv(q), p, ctx)) ++bad;
        }
        CHECK(bad == 0);
      }
    }
  }
}

TEST_CASE("region oracle on a regular grid at zero beta") {
  auto ctx = GibbsContext::uniform(3);
  auto p = pv({0.6, 0.3, 0.1});
  ConeRegion region(p, ctx);
  RelationClassifier cls(p, ctx);
  int bad = 0;
  const int n = 200;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      std::vector<double> q{double(i) / n, double(j) / n, double(n - i - j) / n};
      if (region.locate(q) != cls(q)) ++bad;
    }
  CHECK(bad == 0);
}

TEST_CASE("past vertices") {
  auto ctx = GibbsContext::finite({0, 2, 3}, 0.5);
  auto p = pv({0.7, 0.2, 0.1});
  auto r = past_and_incomparable(p, ctx);
  CHECK(r.tangents.size() == 18);
  CHECK(r.incomparable.size() == 12);
  std::vector<Point> all;
  for (const auto& c : r.past) {
    for (const auto& v : c.vertices) {
      CHECK(thermomajorises(pv(v), p, ctx));
      all.push_back(v);
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<double> s(3, 0.0);
    s[i] = 1.0;
    CHECK(contains_point(all, s));
  }
  // Convex mixtures inside a chamber stay in the past.
  tc_test::StateGen gen(34);
  int bad = 0;
  for (const auto& c : r.past) {
    for (int it = 0; it < 200; ++it) {
      auto w = gen.simplex(c.vertices.size());
      std::vector<double> q(3, 0.0);
      for (std::size_t k = 0; k < w.size(); ++k)
        for (std::size_t i = 0; i < 3; ++i) q[i] += w[k] * c.vertices[k][i];
      if (!thermomajorises(pv(q), p, ctx)) ++bad;
    }
  }
  CHECK(bad == 0);
  CHECK_THROWS_AS(past_and_incomparable(pv({0.2, 0.2, 0.2, 0.2, 0.2}), GibbsContext::uniform(5)), Error);
}

TEST_CASE("non-full-rank states have no interior past") {
  auto ctx = GibbsContext::finite({0, 1, 2}, 0.8);
  ConeRegion region(pv({0.3, 0.7, 0.0}), ctx);
  tc_test::StateGen gen(35);
  for (int it = 0; it < 2000; ++it) CHECK(region.locate(gen.simplex(3)) != Relation::Past);
}

TEST_CASE("beta swaps") {
  auto u = GibbsContext::uniform(2);
  CHECK(beta_swap(pv({0.7, 0.3}), u, 1).values() == std::vector<double>{0.3, 0.7});
  auto ctx = GibbsContext::finite({0, 1, 2}, 1.0);
  CHECK(tc_test::max_abs_diff(beta_swap(ctx.gibbs(), ctx, 2).values(), ctx.gibbs().values()) < 1e-15);
  auto p = pv({0.7, 0.2, 0.1});
  for (std::size_t k : {1u, 2u}) CHECK(thermomajorises(p, beta_swap(p, ctx, k), ctx));
  CHECK_THROWS_AS(beta_swap(p, ctx, 0), Error);
}

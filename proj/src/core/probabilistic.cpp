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

#include "probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lattice.hpp"

namespace thermocone {

const char* to_string(ProbRelation r) noexcept {
  switch (r) {
    case ProbRelation::Future: return "future";
    case ProbRelation::Past: return "past";
    case ProbRelation::Interconvertible: return "interconvertible";
    case ProbRelation::Incomparable: return "incomparable";
  }
  return "unknown";
}

namespace {

void check_probability(double P) {
  require(P > 0.0 && P <= 1.0, ErrorKind::InvalidArgument, "probability must lie in (0, 1]");
}

std::vector<double> tails(const std::vector<double>& sorted) {
  std::vector<double> t(sorted.size() + 1, 0.0);
  for (std::size_t k = sorted.size(); k-- > 0;) t[k] = t[k + 1] + sorted[k];
  return t;
}

}  // namespace

double vidal_probability(const ProbVector& p, const ProbVector& q) {
  require(p.dim() == q.dim(), ErrorKind::DimensionMismatch, "vectors have different dimensions");
  const auto tp = tails(sorted_descending(p.entries()));
  const auto tq = tails(sorted_descending(q.entries()));
  double best = 1.0;
  for (std::size_t k = 1; k < p.dim(); ++k) {
    if (tq[k] <= 0.0) continue;
    best = std::min(best, tp[k] / tq[k]);
  }
  return best;
}

ProbVector tilde_distribution(const ProbVector& p, double P) {
  check_probability(P);
  auto v = sorted_descending(p.entries());
  for (double& x : v) x *= P;
  v[0] += 1.0 - P;
  return ProbVector::strict(std::move(v));
}

ProbVector hat_distribution(const ProbVector& p, double P) {
  check_probability(P);
  const auto s = sorted_descending(p.entries());
  const std::size_t d = s.size();
  std::vector<double> r(d);
  double head = 0.0, prev = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    head += s[k];
    const double h = k + 1 == d ? 1.0 : (head - 1.0) / P + 1.0;
    r[k] = h - prev;
    prev = h;
  }
  flatten_to_concave(r, std::vector<double>(d, 1.0));
  for (double& x : r) x = std::max(x, 0.0);
  double sum = 0.0;
  for (double x : r) sum += x;
  for (double& x : r) x /= sum;
  return ProbVector::strict(std::move(r));
}

ProbRelation prob_classify(const ProbVector& q, const ProbVector& p, double P) {
  require(p.dim() == q.dim(), ErrorKind::DimensionMismatch, "vectors have different dimensions");
  const bool future = majorises(q.entries(), hat_distribution(p, P).entries());
  const bool past = majorises(tilde_distribution(p, P).entries(), q.entries());
  if (future && past) return ProbRelation::Interconvertible;
  if (future) return ProbRelation::Future;
  if (past) return ProbRelation::Past;
  return ProbRelation::Incomparable;
}

}  // namespace thermocone

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

#pragma once

// Probability vectors, Gibbs contexts, beta-orderings and thermomajorisation
// curves. Everything in here is an immutable value type.

#include <cstddef>
#include <span>
#include <vector>

#include "common.hpp"

namespace thermocone {

class ProbVector {
 public:
  ProbVector() = default;

  // Entries must sum to one and be non-negative; negatives down to
  // -kNegativeTolerance are clamped to zero.
  static ProbVector strict(std::vector<double> entries);
  // Entries must sum to one; signs are unconstrained.
  static ProbVector quasi(std::vector<double> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  bool is_quasi() const noexcept { return quasi_; }
  std::span<const double> entries() const noexcept { return entries_; }
  const std::vector<double>& values() const noexcept { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  ProbVector(std::vector<double> e, bool quasi) : entries_(std::move(e)), quasi_(quasi) {}

  std::vector<double> entries_;
  bool quasi_ = false;
};

ProbVector uniform_vector(std::size_t d);
ProbVector sharp_vector(std::size_t d, std::size_t level);

std::vector<double> sorted_descending(std::span<const double> v);

// Energy spectrum plus inverse temperature. beta may be +infinity, in which
// case the Gibbs distribution is uniform over the ground-energy levels.
class GibbsContext {
 public:
  static GibbsContext uniform(std::size_t d);
  static GibbsContext finite(std::vector<double> energies, double beta);
  static GibbsContext zero_temperature(std::vector<double> energies);
  // Builds a context with the given fixed point; the energies are -ln(gamma_i)
  // at a nominal beta of one.
  static GibbsContext from_distribution(std::vector<double> gibbs);

  std::size_t dim() const noexcept { return energies_.size(); }
  double beta() const noexcept { return beta_; }
  bool infinite_beta() const noexcept { return infinite_; }
  const std::vector<double>& energies() const noexcept { return energies_; }
  const ProbVector& gibbs() const noexcept { return gibbs_; }
  double gamma(std::size_t level) const { return gibbs_[level]; }
  // Z = sum_i exp(-beta E_i); +inf/0 are possible for extreme spectra, use
  // log_partition() in that case. Undefined (NaN) for infinite beta.
  double partition() const noexcept { return partition_; }
  double log_partition() const noexcept { return log_partition_; }
  // True when some level has zero Gibbs weight (zero temperature or underflow).
  bool has_vanishing_weights() const noexcept;

 private:
  GibbsContext() = default;

  std::vector<double> energies_;
  double beta_ = 0.0;
  bool infinite_ = false;
  ProbVector gibbs_;
  double partition_ = 0.0;
  double log_partition_ = 0.0;
};

// A chamber of the simplex: the order in which levels appear on a
// thermomajorisation curve. sequence()[rank] is the level at that rank.
class BetaOrder {
 public:
  BetaOrder() = default;
  static BetaOrder from_sequence(std::vector<std::size_t> levels_by_rank);
  static BetaOrder identity(std::size_t d);

  std::size_t dim() const noexcept { return sequence_.size(); }
  std::size_t level_at(std::size_t rank) const { return sequence_[rank]; }
  std::size_t rank_of(std::size_t level) const { return ranks_[level]; }
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  friend bool operator==(const BetaOrder& a, const BetaOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> ranks_;
};

// Sorts p_i/gamma_i non-increasingly, ties by ascending level index.
BetaOrder beta_order(const ProbVector& p, const GibbsContext& ctx);
BetaOrder beta_order(std::span<const double> p, std::span<const double> gamma);

// All d! chambers in lexicographic order of their level sequences.
std::vector<BetaOrder> all_chambers(std::size_t d);

struct CurvePoint {
  double x;
  double y;
};

// Piecewise-linear concave curve through its elbows, (0,0) first and (1,1)
// last. Zero-width segments are allowed; value_at() returns the upper value at
// such vertical jumps.
class LorenzCurve {
 public:
  LorenzCurve() = default;
  explicit LorenzCurve(std::vector<CurvePoint> elbows) : elbows_(std::move(elbows)) {}

  const std::vector<CurvePoint>& elbows() const noexcept { return elbows_; }
  double value_at(double x) const;

 private:
  std::vector<CurvePoint> elbows_;
};

LorenzCurve thermo_curve(const ProbVector& p, const GibbsContext& ctx);
// Curve of an arbitrary (possibly quasi-probability) vector laid out in the
// given chamber.
LorenzCurve chamber_curve(std::span<const double> v, std::span<const double> gamma,
                          const BetaOrder& chamber);

// a >= b at the union of both elbow sets, with slack tol.
bool curve_dominates(const LorenzCurve& a, const LorenzCurve& b, double tol = kCurveTolerance);

bool thermomajorises(const ProbVector& p, const ProbVector& q, const GibbsContext& ctx);
// Plain majorisation on sorted partial sums.
bool majorises(std::span<const double> p, std::span<const double> q, double tol = kCurveTolerance);

// Where q sits relative to p: Future iff p thermomajorises q only, Past iff q
// thermomajorises p only.
Relation classify(const ProbVector& q, const ProbVector& p, const GibbsContext& ctx);

// Repeated classification against a fixed reference state. Keeps scratch
// buffers, so one instance per thread.
class RelationClassifier {
 public:
  RelationClassifier(const ProbVector& p, const GibbsContext& ctx);

  Relation operator()(std::span<const double> q);
  const ProbVector& reference() const noexcept { return p_; }
  const GibbsContext& context() const noexcept { return ctx_; }

 private:
  ProbVector p_;
  GibbsContext ctx_;
  LorenzCurve p_curve_;
  std::vector<std::size_t> order_;
  std::vector<double> ratio_;
  std::vector<CurvePoint> q_elbows_;
};

}  // namespace thermocone

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

// Future, past and incomparable regions of a state: tangent vectors, vertex
// lists and a membership oracle.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polytope.hpp"
#include "simplex.hpp"

namespace thermocone {

// Quasi-probability vector whose curve touches the state's curve along its
// level-th segment (level counts from 1). Entries are in physical level order.
struct TangentVector {
  std::vector<double> entries;
  std::size_t level = 0;
  BetaOrder chamber;
};

enum class PolytopeKind { Future, PastChamber, IncomparablePiece };

const char* to_string(PolytopeKind k) noexcept;

struct ConePolytope {
  PolytopeKind kind = PolytopeKind::Future;
  std::optional<BetaOrder> chamber;
  // For incomparable pieces: the pair (piece, piece + 1) of tangent levels.
  std::size_t piece = 0;
  std::vector<Point> vertices;
};

// Tangents of the sorted state at uniform Gibbs weights, in sorted order.
std::vector<TangentVector> tangent_vectors_uniform(const ProbVector& p);
// Tangents of p's thermomajorisation curve laid out in the given chamber.
std::vector<TangentVector> tangent_vectors_thermal(const ProbVector& p, const GibbsContext& ctx,
                                                   const BetaOrder& chamber);

// Pairwise sweep from the last chamber position down to the second, moving
// negative mass onto the preceding entry.
ProbVector project_to_simplex(std::span<const double> entries, const BetaOrder& chamber);
ProbVector project_to_simplex(const TangentVector& t);

// Extreme points of the future cone, one candidate per chamber, deduplicated.
ConePolytope future_cone(const ProbVector& p, const GibbsContext& ctx);
// Same construction for an arbitrary curve (used for quasi-probability tangents).
std::vector<Point> future_vertices(const LorenzCurve& f, const GibbsContext& ctx);
// Facet inequalities q(S) <= f_p(gamma(S)) and q_i >= 0.
std::vector<HalfSpace> future_constraints(const ProbVector& p, const GibbsContext& ctx);

// Membership oracle for the union over chambers and neighbouring tangent pairs
// of conv(future(t_i) u future(t_{i+1})); everything outside it is past.
class ConeRegion {
 public:
  ConeRegion(const ProbVector& p, const GibbsContext& ctx);

  // q lies strictly inside the union of tangent-pair hulls.
  bool in_tangent_hull(std::span<const double> q) const;
  Relation locate(std::span<const double> q) const;
  // True when zero Gibbs weights make the tangent construction degenerate; the
  // oracle then answers from direct curve comparison.
  bool direct_fallback() const noexcept { return fallback_; }
  const ProbVector& state() const noexcept { return p_; }

 private:
  struct Chamber {
    std::vector<double> xs;                 // cumulative Gibbs weights, d + 1
    std::vector<std::vector<double>> ys;    // tangent curve values at xs, per level
  };

  double chamber_value(const Chamber& c, std::size_t level, double x) const;

  ProbVector p_;
  GibbsContext ctx_;
  LorenzCurve p_curve_;
  bool fallback_ = false;
  std::vector<Chamber> chambers_;
};

struct PastAndIncomparable {
  std::vector<ConePolytope> past;          // one per chamber with a non-empty past
  std::vector<ConePolytope> incomparable;  // hull extreme points per tangent pair
  std::vector<TangentVector> tangents;     // all chambers
};

// Exact vertex output; dimension limited to kMaxPastVertexDim.
PastAndIncomparable past_and_incomparable(const ProbVector& p, const GibbsContext& ctx);

// Elementary two-level Gibbs-preserving swap between level 0 and level k. The
// level with the larger Gibbs weight plays the role of the first level.
ProbVector beta_swap(const ProbVector& p, const GibbsContext& ctx, std::size_t k);

}  // namespace thermocone

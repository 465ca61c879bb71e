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

// Probabilistic cones in the entanglement orientation: p -> q is possible
// with certainty iff q majorises p.

#include "simplex.hpp"

namespace thermocone {

// Maximal probability of converting p into q: minimum over k of the ratio of
// tail sums E_k(p) / E_k(q) of the sorted vectors. Terms with both tails zero
// are skipped; a zero denominator with positive numerator never binds.
double vidal_probability(const ProbVector& p, const ProbVector& q);

// q can reach p with probability >= P iff tilde majorises q.
ProbVector tilde_distribution(const ProbVector& p, double P);
// p can reach q with probability >= P iff q majorises hat. Heads are the least
// concave majorant of (k, (P_k - 1) / P + 1).
ProbVector hat_distribution(const ProbVector& p, double P);

enum class ProbRelation { Future, Past, Interconvertible, Incomparable };

const char* to_string(ProbRelation r) noexcept;

ProbRelation prob_classify(const ProbVector& q, const ProbVector& p, double P);

}  // namespace thermocone

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

// Small-dimension polytope geometry on the hyperplane sum(x) = 1.

#include <cstddef>
#include <vector>

#include "common.hpp"

namespace thermocone {

using Point = std::vector<double>;

// a . x >= b
struct HalfSpace {
  std::vector<double> a;
  double b;
};

// Drops points within tol (max-norm) of an earlier point; keeps first-seen order.
std::vector<Point> dedupe_points(const std::vector<Point>& pts, double tol = kVertexTolerance);

// Vertices of {x : sum(x) = 1, a . x >= b for all constraints} by solving every
// (d-1)-subset of constraints. Intended for d <= 4 and a few dozen constraints.
std::vector<Point> enumerate_vertices(const std::vector<HalfSpace>& constraints, std::size_t d,
                                      double tol = 1e-10);

// Extreme points of the convex hull of points on the sum = 1 hyperplane, for
// d = 2, 3 or 4.
std::vector<Point> extreme_points(const std::vector<Point>& pts);

// Sutherland-Hodgman clip of a d = 3 polygon to the simplex (x_i >= 0).
std::vector<Point> clip_to_simplex3(const std::vector<Point>& polygon);

// Area of a d = 3 convex point set relative to the simplex, by the shoelace
// formula in planar barycentric coordinates.
double relative_area3(const std::vector<Point>& pts);

// (d-1)-dimensional volume of the polytope with the given vertices and facet
// inequalities, relative to the standard simplex. Recurses over the face
// lattice; every facet must be supported by one of the constraints.
double relative_volume(const std::vector<Point>& vertices, const std::vector<HalfSpace>& constraints);

// Volume of the standard (d-1)-simplex embedded in R^d: sqrt(d) / (d-1)!.
double simplex_volume(std::size_t d);

}  // namespace thermocone

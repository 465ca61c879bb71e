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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thermocone {

// Normalisation tolerance for probability vectors.
inline constexpr double kSumTolerance = 1e-9;
// Negativity allowed (and clamped) in strict probability vectors.
inline constexpr double kNegativeTolerance = 1e-12;
// Slack used when comparing Lorenz curves.
inline constexpr double kCurveTolerance = 1e-12;
// Per-coordinate tolerance for vertex deduplication.
inline constexpr double kVertexTolerance = 1e-10;

// Largest dimension for which all d! chambers are enumerated.
inline constexpr std::size_t kMaxChamberDim = 8;
// Largest dimension for the 2^d - 1 segment embedding.
inline constexpr std::size_t kMaxEmbeddingDim = 12;
// Largest dimension with exact past/incomparable vertex output.
inline constexpr std::size_t kMaxPastVertexDim = 4;
// Largest dimension for exact future-cone volumes.
inline constexpr std::size_t kMaxExactVolumeDim = 6;

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  Numerical,
  Unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

// Position of a state relative to a reference state.
enum class Relation {
  Future,
  Past,
  Incomparable,
  Equivalent,
};

const char* to_string(Relation r) noexcept;

}  // namespace thermocone

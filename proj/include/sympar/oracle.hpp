// Copyright 2026 The Sympar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMPAR_ORACLE_HPP_
#define SYMPAR_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "sympar/classifier.hpp"
#include "sympar/matrix.hpp"

namespace sympar {

struct SearchConfig {
  int restarts = 200;
  int steps_per_restart = 500;
  double step_scale = 0.3;
  std::uint64_t seed = 0;
  double accept_tol = 1e-6;
  // Trial conjugators with a larger condition number are rejected. Orbits
  // of the conjugation action are not closed, so without a bound the
  // infimum of the distance between a degenerate pair is zero.
  double max_condition = 5.0;
  int threads = 0;  // 0: hardware concurrency, capped at 8

  bool valid() const;
};

// Projector distance of the Sigma spans plus that of the h spans.
double group_distance(const GroupSpec& a, const GroupSpec& b);

struct SearchResult {
  std::optional<Mat2> conjugator;  // maps a onto b when present
  double best_distance = 0.0;
  int restart = -1;  // restart that produced the best point
};

// Random-restart (1+1) evolution strategy over g = expm2(M) Lambda^k.
// Deterministic for a fixed config regardless of thread count.
SearchResult search_conjugator(const GroupSpec& a, const GroupSpec& b,
                               const SearchConfig& cfg = {});

}  // namespace sympar

#endif  // SYMPAR_ORACLE_HPP_

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

#ifndef SYMPAR_TOLERANCES_HPP_
#define SYMPAR_TOLERANCES_HPP_

namespace sympar {

struct Tolerances {
  // Relative singular-value threshold, scaled by max(1, largest singular
  // value).
  double rank = 1e-9;
  // Span residuals, bracket closure and certificate checks.
  double residual = 1e-8;
  // Smallest |det| accepted for a group element.
  double det_floor = 1e-12;
  // Agreement of recovered continuous parameters.
  double param_tol = 1e-6;

  bool valid() const {
    return rank > 0 && residual > 0 && det_floor > 0 && param_tol > 0;
  }
};

}  // namespace sympar

#endif  // SYMPAR_TOLERANCES_HPP_

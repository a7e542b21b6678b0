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

#ifndef SYMPAR_LORENTZ_HPP_
#define SYMPAR_LORENTZ_HPP_

#include "sympar/matrix.hpp"
#include "sympar/tolerances.hpp"

namespace sympar {

// The projective Lorentz representation L(g) = phi^{-1} g^dagger phi, as a
// 3x3 matrix on (x, y, t). L(gh) = L(g) L(h), ker L = {+I, -I} and the image
// is R+ x O+(2,1).
Mat3 lorentz_of(const Mat2& g, const Tolerances& tol = {});

// diag(-1, -1, 1).
Mat3 lorentz_metric();

// g = N(t) A(s) K(theta) with N(t) = [[1, 0], [t, 1]],
// A(s) = diag(e^{s/2}, e^{-s/2}) and K(theta) the rotation by theta/2.
// theta lies in [0, 4*pi): the half-angle covers all of SO(2), so -I is
// reached at theta = 2*pi.
struct IwasawaSL2 {
  double t = 0.0;
  double s = 0.0;
  double theta = 0.0;
};

enum class IwasawaKind { kN, kA, kK };

Mat2 iwasawa_factor(IwasawaKind kind, double param);
Mat2 recompose(const IwasawaSL2& f);

// Throws kNotUnimodular unless |det g - 1| < tol.residual.
IwasawaSL2 iwasawa_sl2(const Mat2& g, const Tolerances& tol = {});

// L applied to the SL(2,R) factor of the given kind.
Mat3 lorentz_iwasawa(IwasawaKind kind, double param);

// True iff M = rho * M0 with rho > 0 and M0 in O+(2,1).
bool is_orthochronous_scaled(const Mat3& m, const Tolerances& tol = {});

}  // namespace sympar

#endif  // SYMPAR_LORENTZ_HPP_

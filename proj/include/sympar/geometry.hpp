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

#ifndef SYMPAR_GEOMETRY_HPP_
#define SYMPAR_GEOMETRY_HPP_

#include "sympar/matrix.hpp"
#include "sympar/tolerances.hpp"

namespace sympar {

// Named elements of gl(2,R) and GL(2,R).
namespace gens {

inline Mat2 I() { return Mat2::identity(); }
// Rotation generator: exp(sJ) is the rotation by -s.
inline Mat2 J() { return {{0.0, 1.0, -1.0, 0.0}}; }
inline Mat2 X() { return {{0.0, 0.0, 1.0, 0.0}}; }
inline Mat2 Y() { return {{0.0, 0.0, 0.0, 1.0}}; }
inline Mat2 Z() { return {{1.0, 0.0, 0.0, 0.0}}; }
inline Mat2 Lambda() { return Mat2::diag(1.0, -1.0); }

// Counter-clockwise rotation [[cos, -sin], [sin, cos]].
Mat2 rotation(double theta);
// Exact rotation by pi/2.
inline Mat2 quarter_turn() { return {{0.0, -1.0, 1.0, 0.0}}; }

}  // namespace gens

// Line representatives sigma_1, sigma_0, sigma_-1.
namespace reps {

inline Sym2 sigma_pos() { return {1.0, 0.0, 1.0}; }
inline Sym2 sigma_null() { return {1.0, 0.0, 0.0}; }
inline Sym2 sigma_neg() { return {0.0, 1.0, 0.0}; }

}  // namespace reps

// The isometry R^3 -> Sym(2,R): (x, y, t) |-> [[t + x, y], [y, t - x]].
Sym2 phi(const Vec3& v);
Sym2 phi(double x, double y, double t);
Vec3 phi_inv(const Sym2& s);

// Half-trace inner product on Sym(2,R); phi is an isometry onto it from the
// Euclidean R^3.
double inner(const Sym2& a, const Sym2& b);
double norm(const Sym2& s);

// Lorentz form t^2 - x^2 - y^2.
double eta(const Vec3& v);

// h^dagger(sigma) = h^{-T} sigma h^{-1}. Throws kSingularMatrix when
// |det h| <= tol.det_floor.
Sym2 dagger(const Mat2& h, const Sym2& sigma, const Tolerances& tol = {});

// d/ds at s = 0 of dagger(exp(sA), sigma), i.e. -(A^T sigma + sigma A).
Sym2 dagger_derivative(const Mat2& a, const Sym2& sigma);

inline Mat2 bracket(const Mat2& a, const Mat2& b) { return a * b - b * a; }

// Ad(g)(A) = g A g^{-1}.
Mat2 adjoint(const Mat2& g, const Mat2& a);

// exp(sA) from the closed form for 2x2 matrices.
Mat2 expm2(const Mat2& a, double s = 1.0);

struct LanglandsFactors {
  Sym2 sigma;
  Mat2 m;    // det m = 1
  double a;  // a > 0 and h = a m
};

// Splits (sigma, h) into the N, M and A factors. Requires det h > 0;
// throws kNegativeDeterminant otherwise (kSingularMatrix below the floor).
LanglandsFactors langlands_factor(const Sym2& sigma, const Mat2& h,
                                  const Tolerances& tol = {});

// Largest over smallest singular value.
double condition_number(const Mat2& m);

}  // namespace sympar

#endif  // SYMPAR_GEOMETRY_HPP_

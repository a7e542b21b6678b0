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

#ifndef SYMPAR_SUBALGEBRA_HPP_
#define SYMPAR_SUBALGEBRA_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sympar/matrix.hpp"
#include "sympar/orbit.hpp"
#include "sympar/span.hpp"
#include "sympar/tolerances.hpp"

namespace sympar {

// Normal-form families of subalgebras of the stabilizer algebras
// h_1 = span{I, J}, h_0 = span{I, X, Y} and h_-1 = span{Z, Y}.
enum class Family {
  // h_1
  kFullH1,
  kSO2,
  kRotDil,  // I + alpha J, alpha >= 0
  // h_0
  kFullH0,
  kDiagLambda,   // lambda I + Y
  kShear,        // X
  kDilShear,     // I + X
  kScalar,       // I
  kPlaneLambda,  // <X, lambda I + Y>
  kPlaneIY,      // <I, Y>
  kPlaneIX,      // <I, X>
  // h_-1
  kFullHneg1,
  kDiagBeta,  // Z + beta Y, beta in [-1, 1]
};

std::string_view to_string(Family f);

enum class ParamKind { kAlpha, kLambda, kBeta };

std::string_view to_string(ParamKind k);
std::optional<ParamKind> param_kind_from_string(std::string_view s);

struct Parameter {
  ParamKind kind;
  double value;
};

std::optional<ParamKind> family_param(Family f);
EtaType family_eta(Family f);

// Generators of the normal form on the line side.
std::vector<Mat2> family_generators(Family f, double param = 0.0);

struct SubalgNormalForm {
  EtaType eta_type;
  Family family;
  std::optional<Parameter> param;
  Mat2 conjugator;  // Ad(conjugator)(input) = normal form span
  double residual;
};

// Reduces gens to an orthonormal basis and checks bracket closure. Throws
// kZeroAlgebra or kNotClosed (the message names the offending bracket).
Subalgebra validate_subalgebra(std::span<const Mat2> gens,
                               const Tolerances& tol = {});

// Largest out-of-span residual of [A_i, A_j] over the orthonormal basis of
// span(gens).
double closure_residual(std::span<const Mat2> gens, const Tolerances& tol = {});

// dagger_derivative(A, sigma) lies in Sigma for every generator pair.
bool check_invariance(const Subspace& sigma, const Subalgebra& h,
                      const Tolerances& tol = {});
double invariance_residual(const Subspace& sigma, const Subalgebra& h);

// {I, J}, {I, X, Y} or {Z, Y}; transposed for the plane side.
Subalgebra stabilizer_algebra(EtaType e, bool transposed = false);

SubalgNormalForm normalize_in_h1(const Subalgebra& h,
                                 const Tolerances& tol = {});
SubalgNormalForm normalize_in_h0(const Subalgebra& h,
                                 const Tolerances& tol = {});
SubalgNormalForm normalize_in_hneg1(const Subalgebra& h,
                                    const Tolerances& tol = {});
SubalgNormalForm normalize_in(EtaType e, const Subalgebra& h,
                              const Tolerances& tol = {});

}  // namespace sympar

#endif  // SYMPAR_SUBALGEBRA_HPP_

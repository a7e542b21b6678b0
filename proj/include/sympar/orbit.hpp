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

#ifndef SYMPAR_ORBIT_HPP_
#define SYMPAR_ORBIT_HPP_

#include <optional>
#include <string_view>

#include "sympar/matrix.hpp"
#include "sympar/span.hpp"
#include "sympar/tolerances.hpp"

namespace sympar {

// Orbits of R+ x O+(2,1) on R^3.
enum class OrbitClass {
  kPresent,     // the origin
  kFuture,      // eta > 0, t > 0
  kPast,        // eta > 0, t < 0
  kFutureCone,  // eta = 0, t > 0
  kPastCone,    // eta = 0, t < 0
  kElsewhere,   // eta < 0
};

// Projective type of a line span(sigma): sign of det sigma.
enum class EtaType { kPos, kNull, kNeg };

std::string_view to_string(OrbitClass c);
std::string_view to_string(EtaType e);
std::optional<EtaType> eta_type_from_string(std::string_view s);

// sigma_1, sigma_0 or sigma_-1.
Sym2 representative(EtaType e);
// Orthogonal complement of the representative line.
Subspace representative_plane(EtaType e);

// |eta| < tol.residual * (1 + |u|^2) counts as zero.
OrbitClass classify_vector(const Vec3& u, const Tolerances& tol = {});

// Eta type of a nonzero symmetric matrix; the null band is
// |lambda_min| <= tol.rank * |lambda_max|.
EtaType eta_type_of(const Sym2& sigma, const Tolerances& tol = {});

struct LineCanon {
  EtaType eta_type;
  Mat2 conjugator;   // dagger(conjugator, generator) = scale * sigma_eta
  double scale;
  double residual;   // span distance to the representative after the move
};

// Conjugator carrying a line onto span(sigma_eta).
LineCanon canonicalize_line(const Subspace& sigma, const Tolerances& tol = {});

// Conjugator carrying a plane onto sigma_eta^perp; eta_type refers to the
// complementary line.
LineCanon canonicalize_plane(const Subspace& sigma,
                             const Tolerances& tol = {});

// Distance of dagger(g, sigma_eta) from span(sigma_eta), relative to its
// norm.
double stabilizer_residual(EtaType e, const Mat2& g, const Tolerances& tol = {});

// g preserves span(sigma_eta) under the dagger action. This is the full
// span stabilizer; it includes elements outside the connected H_eta.
bool stabilizer_membership(EtaType e, const Mat2& g,
                           const Tolerances& tol = {});

}  // namespace sympar

#endif  // SYMPAR_ORBIT_HPP_

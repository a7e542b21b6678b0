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

#ifndef SYMPAR_CLASSIFIER_HPP_
#define SYMPAR_CLASSIFIER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sympar/catalog.hpp"
#include "sympar/span.hpp"
#include "sympar/tolerances.hpp"

namespace sympar {

// A group Sigma x| H of class E_2, held as its two spans.
struct GroupSpec {
  Subspace sigma;
  Subalgebra h;

  // Validates everything: nonzero spans, bracket closure, dim Sigma <= 2
  // (kDimensionOutOfScope for 3) and invariance of Sigma under h
  // (kNotInvariant).
  static GroupSpec make(std::span<const Sym2> sigma_gens,
                        std::span<const Mat2> h_gens,
                        const Tolerances& tol = {});
};

// Conjugation by g: (g^dagger Sigma, g H g^{-1}).
GroupSpec conjugate(const GroupSpec& spec, const Mat2& g);

// (Sigma^perp, h^T).
GroupSpec dual(const GroupSpec& spec);

// The catalog representative, as a spec.
GroupSpec catalog_spec(const CatalogEntry& e, double param = 0.0);

struct Certificate {
  Mat2 conjugator;
  double residual_sigma;
  double residual_h;
};

struct Classification {
  CanonicalLabel label;
  Certificate certificate;
};

Classification classify(const GroupSpec& spec, const Tolerances& tol = {});

struct VerifyReport {
  bool pass = false;
  double residual_sigma = 0.0;
  double residual_h = 0.0;
  std::vector<std::string> failures;
};

// Recomputes both span residuals from scratch; never trusts the stored ones.
VerifyReport verify(const GroupSpec& spec, const CanonicalLabel& label,
                    const Certificate& cert, const Tolerances& tol = {});

struct InvariantVector {
  int dim_sigma = 0;
  std::array<int, 3> eta_inertia{};  // (n+, n-, n0) of eta on phi^{-1}(Sigma)
  int dim_h = 0;
  int dim_derived = 0;
  int dim_traceless = 0;
  LabelId family_id = LabelId::L5_1;
  std::optional<Parameter> param;

  // Equality with parameters compared within param_tol.
  bool same_as(const InvariantVector& o, double param_tol) const;
};

InvariantVector invariants(const GroupSpec& spec, const Tolerances& tol = {});

// n elements (sigma, h) of the representative group: sigma random in Sigma,
// h = exp of a random element of the algebra. kBadParams when the parameter
// is missing, unexpected or out of range.
std::vector<std::pair<Sym2, Mat2>> sample_group(const CanonicalLabel& label,
                                                int n, std::uint64_t seed);

// (sigma, h)(sigma', h') = (sigma + h^dagger(sigma'), h h').
std::pair<Sym2, Mat2> group_multiply(const std::pair<Sym2, Mat2>& a,
                                     const std::pair<Sym2, Mat2>& b);

}  // namespace sympar

#endif  // SYMPAR_CLASSIFIER_HPP_

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

#ifndef SYMPAR_CATALOG_HPP_
#define SYMPAR_CATALOG_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympar/matrix.hpp"
#include "sympar/orbit.hpp"
#include "sympar/span.hpp"
#include "sympar/subalgebra.hpp"

namespace sympar {

// The 26 classes, in the printed order of the classification list: one
// 5-dimensional group, then six 4-dimensional, twelve 3-dimensional and
// seven 2-dimensional ones.
enum class LabelId {
  L5_1,
  L4_1, L4_2, L4_3, L4_4, L4_5, L4_6,
  L3_1, L3_2, L3_3, L3_4, L3_5, L3_6, L3_7, L3_8, L3_9, L3_10, L3_11, L3_12,
  L2_1, L2_2, L2_3, L2_4, L2_5, L2_6, L2_7,
};

inline constexpr int kCatalogSize = 26;

std::string to_string(LabelId id);
std::optional<LabelId> label_from_string(std::string_view s);

// A matrix depending affinely on the family parameter: constant + p * slope.
struct AffineMat2 {
  Mat2 constant;
  Mat2 slope;  // zero for parameter-free generators

  Mat2 at(double p) const { return constant + p * slope; }
  bool has_slope() const { return slope.max_abs() != 0.0; }
};

struct CatalogEntry {
  LabelId id;
  int dim_total;
  EtaType eta_type;
  bool plane;  // Sigma is sigma_eta^perp rather than the line sigma_eta
  Family family;
  std::optional<ParamKind> param;
  std::vector<Sym2> sigma_generators;
  std::vector<AffineMat2> h_generators;
  LabelId dual;  // (Sigma^perp, h^T)

  std::vector<Mat2> h_at(double p) const;
};

struct CanonicalLabel {
  LabelId id;
  int dim_total;
  std::optional<Parameter> param;
};

const std::array<CatalogEntry, kCatalogSize>& catalog();
const CatalogEntry& catalog_entry(LabelId id);
// Lookup by normal-form data; throws kUnrecognizedSubalgebra if absent.
const CatalogEntry& catalog_lookup(EtaType e, bool plane, Family f);

// Allowed range of a parameter; alpha >= 0, beta in [-1, 1], lambda free.
bool param_in_range(ParamKind k, double v, double slack = 0.0);

// Representative spans for a label at a parameter value.
Subspace catalog_sigma(const CatalogEntry& e);
Subalgebra catalog_h(const CatalogEntry& e, double param = 0.0);

// Distance of h from the connected group exactly as displayed in the
// classification list (closed-form matrices, not exponentials). Zero for
// members; used as an independent check of exp(h).
double displayed_group_residual(const CatalogEntry& e, double param,
                                const Mat2& h);

}  // namespace sympar

#endif  // SYMPAR_CATALOG_HPP_

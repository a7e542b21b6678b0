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

#include "sympar/catalog.hpp"

#include <cmath>
#include <numbers>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"

namespace sympar {

namespace {

constexpr std::array<const char*, kCatalogSize> kNames = {
    "L5.1", "L4.1", "L4.2", "L4.3",  "L4.4",  "L4.5",  "L4.6",
    "L3.1", "L3.2", "L3.3", "L3.4",  "L3.5",  "L3.6",  "L3.7",
    "L3.8", "L3.9", "L3.10", "L3.11", "L3.12", "L2.1", "L2.2",
    "L2.3", "L2.4", "L2.5", "L2.6",  "L2.7"};

struct Row {
  LabelId id;
  EtaType eta;
  bool plane;
  Family family;
};

constexpr EtaType kP = EtaType::kPos;
constexpr EtaType kN = EtaType::kNull;
constexpr EtaType kM = EtaType::kNeg;

constexpr std::array<Row, kCatalogSize> kRows = {{
    {LabelId::L5_1, kN, true, Family::kFullH0},
    {LabelId::L4_1, kP, true, Family::kFullH1},
    {LabelId::L4_2, kN, false, Family::kFullH0},
    {LabelId::L4_3, kN, true, Family::kPlaneLambda},
    {LabelId::L4_4, kN, true, Family::kPlaneIY},
    {LabelId::L4_5, kN, true, Family::kPlaneIX},
    {LabelId::L4_6, kM, true, Family::kFullHneg1},
    {LabelId::L3_1, kP, false, Family::kFullH1},
    {LabelId::L3_2, kP, true, Family::kRotDil},
    {LabelId::L3_3, kP, true, Family::kSO2},
    {LabelId::L3_4, kN, false, Family::kPlaneLambda},
    {LabelId::L3_5, kN, false, Family::kPlaneIY},
    {LabelId::L3_6, kN, false, Family::kPlaneIX},
    {LabelId::L3_7, kN, true, Family::kDiagLambda},
    {LabelId::L3_8, kN, true, Family::kShear},
    {LabelId::L3_9, kN, true, Family::kDilShear},
    {LabelId::L3_10, kN, true, Family::kScalar},
    {LabelId::L3_11, kM, false, Family::kFullHneg1},
    {LabelId::L3_12, kM, true, Family::kDiagBeta},
    {LabelId::L2_1, kP, false, Family::kRotDil},
    {LabelId::L2_2, kP, false, Family::kSO2},
    {LabelId::L2_3, kN, false, Family::kDiagLambda},
    {LabelId::L2_4, kN, false, Family::kShear},
    {LabelId::L2_5, kN, false, Family::kDilShear},
    {LabelId::L2_6, kN, false, Family::kScalar},
    {LabelId::L2_7, kM, false, Family::kDiagBeta},
}};

// Displayed generators of sigma_eta^perp.
std::vector<Sym2> plane_generators(EtaType e) {
  switch (e) {
    case EtaType::kPos: return {{1, 0, -1}, {0, 1, 0}};
    case EtaType::kNull: return {{0, 1, 0}, {0, 0, 1}};
    case EtaType::kNeg: return {{1, 0, 0}, {0, 0, 1}};
  }
  return {};
}

std::vector<AffineMat2> affine_generators(Family f, bool transposed) {
  const std::vector<Mat2> at0 = family_generators(f, 0.0);
  const std::vector<Mat2> at1 = family_generators(f, 1.0);
  std::vector<AffineMat2> out;
  for (size_t k = 0; k < at0.size(); ++k) {
    AffineMat2 g{at0[k], at1[k] - at0[k]};
    if (transposed) {
      g.constant = g.constant.transpose();
      g.slope = g.slope.transpose();
    }
    out.push_back(g);
  }
  return out;
}

std::array<CatalogEntry, kCatalogSize> build_catalog() {
  std::array<CatalogEntry, kCatalogSize> out;
  for (int k = 0; k < kCatalogSize; ++k) {
    const Row& row = kRows[k];
    CatalogEntry& e = out[k];
    e.id = row.id;
    e.eta_type = row.eta;
    e.plane = row.plane;
    e.family = row.family;
    e.param = family_param(row.family);
    e.sigma_generators = row.plane ? plane_generators(row.eta)
                                   : std::vector<Sym2>{representative(row.eta)};
    e.h_generators = affine_generators(row.family, row.plane);
    e.dim_total = static_cast<int>(e.sigma_generators.size() +
                                   e.h_generators.size());
    e.dual = row.id;
    for (const Row& other : kRows) {
      if (other.family == row.family && other.plane != row.plane) {
        e.dual = other.id;
      }
    }
  }
  return out;
}

// Per-family membership in the displayed connected group on the line side.
// All residuals are relative to the size of h.
double line_side_residual(Family f, double p, const Mat2& h) {
  const double n = h.norm();
  const double h00 = h(0, 0), h01 = h(0, 1), h10 = h(1, 0), h11 = h(1, 1);
  constexpr double kOutside = 1.0;
  auto conformal_defect = [&] {
    return (std::fabs(h00 - h11) + std::fabs(h01 + h10)) / n;
  };
  auto positive_diag = [&] { return h00 > 0 && h11 > 0; };
  switch (f) {
    case Family::kFullH1:
      // e^t R_theta
      return conformal_defect();
    case Family::kSO2:
      return conformal_defect() + std::fabs(h.det() - 1.0);
    case Family::kRotDil: {
      // exp(t (I + alpha J)) = e^t R_{-t alpha}
      const double t = 0.5 * std::log(h.det());
      const double angle = std::atan2(h10, h00);
      const double w = std::remainder(angle + t * p, 2.0 * std::numbers::pi);
      return conformal_defect() + std::fabs(w);
    }
    case Family::kFullH0:
      // [[a, 0], [b, c]], a, c > 0
      if (!positive_diag()) return kOutside;
      return std::fabs(h01) / n;
    case Family::kPlaneLambda: {
      // [[e^{t lambda}, 0], [s, e^{t (lambda + 1)}]]
      if (!positive_diag()) return kOutside;
      const double t = std::log(h11 / h00);
      return std::fabs(h01) / n + std::fabs(std::log(h00) - t * p);
    }
    case Family::kPlaneIY:
    case Family::kFullHneg1:
      // diag(e^t, e^s)
      if (!positive_diag()) return kOutside;
      return (std::fabs(h01) + std::fabs(h10)) / n;
    case Family::kPlaneIX:
      // [[e^t, 0], [s, e^t]]
      if (!positive_diag()) return kOutside;
      return (std::fabs(h01) + std::fabs(h00 - h11)) / n;
    case Family::kDiagLambda: {
      // e^{t lambda} diag(1, e^t)
      if (!positive_diag()) return kOutside;
      const double t = std::log(h11 / h00);
      return (std::fabs(h01) + std::fabs(h10)) / n +
             std::fabs(std::log(h00) - t * p);
    }
    case Family::kShear:
      // [[1, 0], [t, 1]]
      return std::fabs(h00 - 1) + std::fabs(h11 - 1) + std::fabs(h01) / n;
    case Family::kDilShear: {
      // e^t [[1, 0], [t, 1]]
      if (!positive_diag()) return kOutside;
      const double t = std::log(h00);
      return (std::fabs(h01) + std::fabs(h00 - h11) +
              std::fabs(h10 - t * h00)) / n;
    }
    case Family::kScalar:
      // e^t I
      if (!positive_diag()) return kOutside;
      return (std::fabs(h01) + std::fabs(h10) + std::fabs(h00 - h11)) / n;
    case Family::kDiagBeta: {
      // diag(e^t, e^{t beta})
      if (!positive_diag()) return kOutside;
      const double t = std::log(h00);
      return (std::fabs(h01) + std::fabs(h10)) / n +
             std::fabs(std::log(h11) - t * p);
    }
  }
  return kOutside;
}

}  // namespace

std::string to_string(LabelId id) { return kNames[static_cast<int>(id)]; }

std::optional<LabelId> label_from_string(std::string_view s) {
  for (int k = 0; k < kCatalogSize; ++k) {
    if (s == kNames[k]) return static_cast<LabelId>(k);
  }
  return std::nullopt;
}

std::vector<Mat2> CatalogEntry::h_at(double p) const {
  std::vector<Mat2> out;
  for (const AffineMat2& g : h_generators) out.push_back(g.at(p));
  return out;
}

const std::array<CatalogEntry, kCatalogSize>& catalog() {
  static const std::array<CatalogEntry, kCatalogSize> kCatalog =
      build_catalog();
  return kCatalog;
}

const CatalogEntry& catalog_entry(LabelId id) {
  return catalog()[static_cast<int>(id)];
}

const CatalogEntry& catalog_lookup(EtaType e, bool plane, Family f) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.eta_type == e && entry.plane == plane && entry.family == f) {
      return entry;
    }
  }
  throw Error(ErrorCode::kUnrecognizedSubalgebra, "no catalog entry");
}

bool param_in_range(ParamKind k, double v, double slack) {
  if (!std::isfinite(v)) return false;
  switch (k) {
    case ParamKind::kAlpha: return v >= -slack;
    case ParamKind::kLambda: return true;
    case ParamKind::kBeta: return v >= -1.0 - slack && v <= 1.0 + slack;
  }
  return false;
}

Subspace catalog_sigma(const CatalogEntry& e) {
  return Subspace::from_generators(e.sigma_generators);
}

Subalgebra catalog_h(const CatalogEntry& e, double param) {
  const std::vector<Mat2> g = e.h_at(param);
  return Subalgebra::from_span(mat_span(g));
}

double displayed_group_residual(const CatalogEntry& e, double param,
                                const Mat2& h) {
  if (!(h.norm() > 0.0)) return 1.0;
  // Plane-side groups are transposes of the line-side ones.
  return line_side_residual(e.family, param, e.plane ? h.transpose() : h);
}

}  // namespace sympar

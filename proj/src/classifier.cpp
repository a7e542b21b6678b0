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

#include "sympar/classifier.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"
#include "sympar/orbit.hpp"
#include "sympar/subalgebra.hpp"

namespace sympar {

GroupSpec GroupSpec::make(std::span<const Sym2> sigma_gens,
                          std::span<const Mat2> h_gens,
                          const Tolerances& tol) {
  Subspace sigma = Subspace::from_generators(sigma_gens, tol);
  if (sigma.dim() == 3) {
    throw Error(ErrorCode::kDimensionOutOfScope,
                "Sigma = Sym(2,R) is outside the classification");
  }
  GroupSpec spec{std::move(sigma), validate_subalgebra(h_gens, tol)};
  const double r = invariance_residual(spec.sigma, spec.h);
  if (r > tol.residual) {
    std::ostringstream msg;
    msg << "Sigma is not invariant under h (residual " << r << ")";
    throw Error(ErrorCode::kNotInvariant, msg.str());
  }
  return spec;
}

GroupSpec conjugate(const GroupSpec& spec, const Mat2& g) {
  return {dagger(g, spec.sigma), conjugate(g, spec.h)};
}

GroupSpec dual(const GroupSpec& spec) {
  return {ortho_complement(spec.sigma), transpose(spec.h)};
}

GroupSpec catalog_spec(const CatalogEntry& e, double param) {
  return {catalog_sigma(e), catalog_h(e, param)};
}

namespace {

// Identity when Sigma already is a representative; avoids rounding noise in
// the conjugator for catalog inputs.
std::optional<EtaType> exact_representative(const Subspace& sigma) {
  for (EtaType e : {EtaType::kPos, EtaType::kNull, EtaType::kNeg}) {
    const Sym2 line[1] = {representative(e)};
    const Subspace rep = sigma.dim() == 1
                             ? Subspace::from_generators(line)
                             : representative_plane(e);
    if (distance(sigma, rep) <= 1e-15) return e;
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const GroupSpec& spec, const Tolerances& tol) {
  const int ds = spec.sigma.dim();
  if (ds == 3) {
    throw Error(ErrorCode::kDimensionOutOfScope, "dim Sigma = 3");
  }
  if (ds != 1 && ds != 2) {
    throw Error(ErrorCode::kBadDimension, "dim Sigma must be 1 or 2");
  }
  const bool plane = ds == 2;

  EtaType eta;
  Mat2 g1 = Mat2::identity();
  if (auto e = exact_representative(spec.sigma)) {
    eta = *e;
  } else {
    const LineCanon lc = plane ? canonicalize_plane(spec.sigma, tol)
                               : canonicalize_line(spec.sigma, tol);
    eta = lc.eta_type;
    g1 = lc.conjugator;
  }

  const Subalgebra moved = conjugate(g1, spec.h);
  Mat2 g2;
  SubalgNormalForm nf;
  if (plane) {
    // The plane stabilizer is the transpose of the line one: normalize the
    // transposed algebra, then map the conjugator by g -> g^{-T}.
    nf = normalize_in(eta, transpose(moved), tol);
    g2 = nf.conjugator.transpose().inverse();
  } else {
    nf = normalize_in(eta, moved, tol);
    g2 = nf.conjugator;
  }

  const CatalogEntry& entry = catalog_lookup(eta, plane, nf.family);
  Classification out;
  out.label = {entry.id, entry.dim_total, nf.param};
  out.certificate.conjugator = g2 * g1;
  const double p = nf.param ? nf.param->value : 0.0;
  const Subspace rep_sigma = catalog_sigma(entry);
  const Subalgebra rep_h = catalog_h(entry, p);
  if (distance(spec.sigma, rep_sigma) + distance(spec.h, rep_h) <= 1e-14) {
    out.certificate.conjugator = Mat2::identity();
  }
  out.certificate.residual_sigma =
      distance(dagger(out.certificate.conjugator, spec.sigma, tol),
               rep_sigma);
  out.certificate.residual_h =
      distance(conjugate(out.certificate.conjugator, spec.h), rep_h);
  if (out.certificate.residual_sigma > tol.residual ||
      out.certificate.residual_h > tol.residual) {
    std::ostringstream msg;
    msg << "certificate residuals (" << out.certificate.residual_sigma << ", "
        << out.certificate.residual_h << ") exceed " << tol.residual;
    throw Error(ErrorCode::kIllConditioned, msg.str());
  }
  return out;
}

VerifyReport verify(const GroupSpec& spec, const CanonicalLabel& label,
                    const Certificate& cert, const Tolerances& tol) {
  VerifyReport report;
  const CatalogEntry& entry = catalog_entry(label.id);
  double p = 0.0;
  bool params_ok = true;
  if (entry.param) {
    if (!label.param || label.param->kind != *entry.param) {
      report.failures.push_back("label " + to_string(label.id) +
                                " needs parameter " +
                                std::string(to_string(*entry.param)));
      params_ok = false;
    } else {
      p = label.param->value;
      if (!param_in_range(*entry.param, p, tol.param_tol)) {
        report.failures.push_back("parameter out of range");
        params_ok = false;
      }
    }
  } else if (label.param) {
    report.failures.push_back("label " + to_string(label.id) +
                              " takes no parameter");
    params_ok = false;
  }
  if (label.dim_total != entry.dim_total) {
    report.failures.push_back("dimension does not match the catalog");
  }
  if (spec.sigma.dim() != static_cast<int>(entry.sigma_generators.size()) ||
      spec.h.dim() != static_cast<int>(entry.h_generators.size())) {
    report.failures.push_back("span dimensions do not match the catalog");
    report.residual_sigma = report.residual_h = INFINITY;
    return report;
  }
  if (!(std::fabs(cert.conjugator.det()) > tol.det_floor)) {
    report.failures.push_back("conjugator is singular");
    report.residual_sigma = report.residual_h = INFINITY;
    return report;
  }
  report.residual_sigma = distance(dagger(cert.conjugator, spec.sigma, tol),
                                   catalog_sigma(entry));
  report.residual_h = params_ok ? distance(conjugate(cert.conjugator, spec.h),
                                           catalog_h(entry, p))
                                : INFINITY;
  if (!(report.residual_sigma < tol.residual)) {
    std::ostringstream msg;
    msg << "sigma residual " << report.residual_sigma;
    report.failures.push_back(msg.str());
  }
  if (params_ok && !(report.residual_h < tol.residual)) {
    std::ostringstream msg;
    msg << "h residual " << report.residual_h;
    report.failures.push_back(msg.str());
  }
  report.pass = report.failures.empty();
  return report;
}

bool InvariantVector::same_as(const InvariantVector& o,
                              double param_tol) const {
  if (dim_sigma != o.dim_sigma || eta_inertia != o.eta_inertia ||
      dim_h != o.dim_h || dim_derived != o.dim_derived ||
      dim_traceless != o.dim_traceless || family_id != o.family_id ||
      param.has_value() != o.param.has_value()) {
    return false;
  }
  if (!param) return true;
  return param->kind == o.param->kind &&
         std::fabs(param->value - o.param->value) <=
             param_tol * std::max(1.0, std::fabs(param->value));
}

InvariantVector invariants(const GroupSpec& spec, const Tolerances& tol) {
  InvariantVector v;
  v.dim_sigma = spec.sigma.dim();
  v.dim_h = spec.h.dim();

  // Gram matrix of eta on the orthonormal basis of phi^{-1}(Sigma).
  const auto& u = spec.sigma.span().basis();
  const Eigen::Matrix3d metric = Eigen::Vector3d(-1, -1, 1).asDiagonal();
  const Eigen::MatrixXd gram = u.transpose() * metric * u;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    const double ev = es.eigenvalues()(k);
    if (ev > tol.rank) {
      ++v.eta_inertia[0];
    } else if (ev < -tol.rank) {
      ++v.eta_inertia[1];
    } else {
      ++v.eta_inertia[2];
    }
  }

  std::vector<Mat2> brackets;
  const auto& g = spec.h.generators();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) brackets.push_back(bracket(g[i], g[j]));
  v.dim_derived = mat_span(brackets, tol).dim();

  double max_trace = 0.0;
  for (const Mat2& a : g) max_trace = std::fmax(max_trace, std::fabs(a.trace()));
  v.dim_traceless = v.dim_h - (max_trace > tol.rank ? 1 : 0);

  const Classification c = classify(spec, tol);
  v.family_id = c.label.id;
  v.param = c.label.param;
  return v;
}

std::vector<std::pair<Sym2, Mat2>> sample_group(const CanonicalLabel& label,
                                                int n, std::uint64_t seed) {
  const CatalogEntry& entry = catalog_entry(label.id);
  double p = 0.0;
  if (entry.param) {
    if (!label.param || label.param->kind != *entry.param ||
        !param_in_range(*entry.param, label.param->value)) {
      throw Error(ErrorCode::kBadParams,
                  "label " + to_string(label.id) + " needs a valid " +
                      std::string(to_string(*entry.param)));
    }
    p = label.param->value;
  } else if (label.param) {
    throw Error(ErrorCode::kBadParams,
                "label " + to_string(label.id) + " takes no parameter");
  }
  if (n < 0) throw Error(ErrorCode::kBadParams, "negative sample count");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const std::vector<Mat2> hgens = entry.h_at(p);
  std::vector<std::pair<Sym2, Mat2>> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    Sym2 s;
    for (const Sym2& g : entry.sigma_generators) s = s + normal(rng) * g;
    Mat2 a;
    for (const Mat2& g : hgens) a = a + normal(rng) * g;
    out.emplace_back(s, expm2(a));
  }
  return out;
}

std::pair<Sym2, Mat2> group_multiply(const std::pair<Sym2, Mat2>& a,
                                     const std::pair<Sym2, Mat2>& b) {
  return {a.first + dagger(a.second, b.first), a.second * b.second};
}

}  // namespace sympar

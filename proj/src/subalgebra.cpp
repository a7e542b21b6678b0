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

#include "sympar/subalgebra.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"

namespace sympar {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kFullH1: return "Full-H1";
    case Family::kSO2: return "SO2";
    case Family::kRotDil: return "Rot-Dil";
    case Family::kFullH0: return "Full-H0";
    case Family::kDiagLambda: return "Diag-lambda";
    case Family::kShear: return "Shear";
    case Family::kDilShear: return "Dil-Shear";
    case Family::kScalar: return "Scalar";
    case Family::kPlaneLambda: return "Plane-lambda";
    case Family::kPlaneIY: return "Plane-IY";
    case Family::kPlaneIX: return "Plane-IX";
    case Family::kFullHneg1: return "Full-Hneg1";
    case Family::kDiagBeta: return "Diag-beta";
  }
  return "?";
}

std::string_view to_string(ParamKind k) {
  switch (k) {
    case ParamKind::kAlpha: return "alpha";
    case ParamKind::kLambda: return "lambda";
    case ParamKind::kBeta: return "beta";
  }
  return "?";
}

std::optional<ParamKind> param_kind_from_string(std::string_view s) {
  if (s == "alpha") return ParamKind::kAlpha;
  if (s == "lambda") return ParamKind::kLambda;
  if (s == "beta") return ParamKind::kBeta;
  return std::nullopt;
}

std::optional<ParamKind> family_param(Family f) {
  switch (f) {
    case Family::kRotDil: return ParamKind::kAlpha;
    case Family::kDiagLambda:
    case Family::kPlaneLambda: return ParamKind::kLambda;
    case Family::kDiagBeta: return ParamKind::kBeta;
    default: return std::nullopt;
  }
}

EtaType family_eta(Family f) {
  switch (f) {
    case Family::kFullH1:
    case Family::kSO2:
    case Family::kRotDil: return EtaType::kPos;
    case Family::kFullHneg1:
    case Family::kDiagBeta: return EtaType::kNeg;
    default: return EtaType::kNull;
  }
}

std::vector<Mat2> family_generators(Family f, double param) {
  using namespace gens;
  switch (f) {
    case Family::kFullH1: return {I(), J()};
    case Family::kSO2: return {J()};
    case Family::kRotDil: return {I() + param * J()};
    case Family::kFullH0: return {I(), X(), Y()};
    case Family::kDiagLambda: return {param * I() + Y()};
    case Family::kShear: return {X()};
    case Family::kDilShear: return {I() + X()};
    case Family::kScalar: return {I()};
    case Family::kPlaneLambda: return {X(), param * I() + Y()};
    case Family::kPlaneIY: return {I(), Y()};
    case Family::kPlaneIX: return {I(), X()};
    case Family::kFullHneg1: return {Z(), Y()};
    case Family::kDiagBeta: return {Z() + param * Y()};
  }
  return {};
}

double closure_residual(std::span<const Mat2> gens, const Tolerances& tol) {
  const Span<4> span = mat_span(gens, tol);
  double worst = 0.0;
  for (int i = 0; i < span.dim(); ++i) {
    for (int j = i + 1; j < span.dim(); ++j) {
      const Mat2 b = bracket(mat_from_coords(span.column(i)),
                             mat_from_coords(span.column(j)));
      worst = std::fmax(worst, span.residual(coords(b)));
    }
  }
  return worst;
}

Subalgebra validate_subalgebra(std::span<const Mat2> gens,
                               const Tolerances& tol) {
  if (gens.empty()) {
    throw Error(ErrorCode::kZeroAlgebra, "no generators");
  }
  const Span<4> span = mat_span(gens, tol);
  if (span.dim() == 0) {
    throw Error(ErrorCode::kZeroAlgebra, "generators span {0}");
  }
  const double worst = closure_residual(gens, tol);
  if (worst > tol.residual) {
    // Name the input pair whose bracket leaves the span by the most.
    size_t bi = 0, bj = 0;
    double br = -1.0;
    for (size_t i = 0; i < gens.size(); ++i) {
      for (size_t j = i + 1; j < gens.size(); ++j) {
        const double scale = gens[i].norm() * gens[j].norm();
        if (scale == 0.0) continue;
        const double r =
            span.residual(coords(bracket(gens[i], gens[j]))) / scale;
        if (r > br) {
          br = r;
          bi = i;
          bj = j;
        }
      }
    }
    std::ostringstream msg;
    msg << "bracket [h" << bi << ", h" << bj << "] = "
        << bracket(gens[bi], gens[bj]) << " leaves the span (residual "
        << worst << ")";
    throw Error(ErrorCode::kNotClosed, msg.str());
  }
  return Subalgebra::from_span(span);
}

double invariance_residual(const Subspace& sigma, const Subalgebra& h) {
  double worst = 0.0;
  for (const Mat2& a : h.generators()) {
    for (const Sym2& s : sigma.generators()) {
      worst = std::fmax(worst, sigma.residual(dagger_derivative(a, s)));
    }
  }
  return worst;
}

bool check_invariance(const Subspace& sigma, const Subalgebra& h,
                      const Tolerances& tol) {
  return invariance_residual(sigma, h) <= tol.residual;
}

Subalgebra stabilizer_algebra(EtaType e, bool transposed) {
  Family full = Family::kFullH0;
  if (e == EtaType::kPos) full = Family::kFullH1;
  if (e == EtaType::kNeg) full = Family::kFullHneg1;
  std::vector<Mat2> g = family_generators(full);
  if (transposed) {
    for (Mat2& m : g) m = m.transpose();
  }
  return Subalgebra::from_span(mat_span(g));
}

namespace {

void require_contained(EtaType e, const Subalgebra& h, const Tolerances& tol) {
  const Subalgebra full = stabilizer_algebra(e);
  for (const Mat2& a : h.generators()) {
    if (full.residual(a) > tol.residual) {
      std::ostringstream msg;
      msg << "generator " << a << " is not in the stabilizer algebra of "
          << to_string(e);
      throw Error(ErrorCode::kNotContained, msg.str());
    }
  }
  if (h.dim() > full.dim()) {
    throw Error(ErrorCode::kNotContained, "dimension too large");
  }
}

SubalgNormalForm finish(EtaType e, Family f, std::optional<Parameter> param,
                        const Mat2& conj, const Subalgebra& h) {
  SubalgNormalForm out{e, f, param, conj, 0.0};
  const std::vector<Mat2> target =
      family_generators(f, param ? param->value : 0.0);
  out.residual = distance(conjugate(conj, h),
                          Subalgebra::from_span(mat_span(target)));
  return out;
}

// Coordinates of a lower triangular matrix in the basis (I, X, Y).
std::array<double, 3> h0_coords(const Mat2& a) {
  return {a(0, 0), a(1, 0), a(1, 1) - a(0, 0)};
}

Mat2 lower_unipotent(double b) { return {{1.0, 0.0, b, 1.0}}; }

}  // namespace

SubalgNormalForm normalize_in_h1(const Subalgebra& h, const Tolerances& tol) {
  require_contained(EtaType::kPos, h, tol);
  const EtaType e = EtaType::kPos;
  if (h.dim() == 2) return finish(e, Family::kFullH1, {}, Mat2::identity(), h);
  const Mat2& a = h.generators().front();
  const double x = 0.5 * (a(0, 0) + a(1, 1));
  const double alpha = 0.5 * (a(0, 1) - a(1, 0));
  if (std::fabs(x) <= tol.rank * std::hypot(x, alpha)) {
    return finish(e, Family::kSO2, {}, Mat2::identity(), h);
  }
  const double ratio = alpha / x;
  // Lambda J Lambda = -J flips the sign of alpha.
  if (ratio < 0) {
    return finish(e, Family::kRotDil, Parameter{ParamKind::kAlpha, -ratio},
                  gens::Lambda(), h);
  }
  return finish(e, Family::kRotDil, Parameter{ParamKind::kAlpha, ratio},
                Mat2::identity(), h);
}

SubalgNormalForm normalize_in_h0(const Subalgebra& h, const Tolerances& tol) {
  require_contained(EtaType::kNull, h, tol);
  const EtaType e = EtaType::kNull;
  const Mat2 id = Mat2::identity();
  if (h.dim() == 3) return finish(e, Family::kFullH0, {}, id, h);

  if (h.dim() == 1) {
    const auto [ci, cx, cy] = h0_coords(h.generators().front());
    const double cut = tol.rank * std::sqrt(ci * ci + cx * cx + cy * cy);
    if (std::fabs(cy) > cut) {
      // h [lambda:mu:1] h^{-1} = [lambda : mu - b : 1] for a = c = 1.
      return finish(e, Family::kDiagLambda,
                    Parameter{ParamKind::kLambda, ci / cy},
                    lower_unipotent(cx / cy), h);
    }
    if (std::fabs(cx) > cut) {
      if (std::fabs(ci) > cut) {
        // diag(1, r) X diag(1, r)^{-1} = r X.
        return finish(e, Family::kDilShear, {}, Mat2::diag(1.0, ci / cx), h);
      }
      return finish(e, Family::kShear, {}, id, h);
    }
    return finish(e, Family::kScalar, {}, id, h);
  }

  // dim 2: work with the plane's normal in (I, X, Y) coordinates.
  const auto u = h0_coords(h.generators()[0]);
  const auto v = h0_coords(h.generators()[1]);
  const std::array<double, 3> n = {u[1] * v[2] - u[2] * v[1],
                                   u[2] * v[0] - u[0] * v[2],
                                   u[0] * v[1] - u[1] * v[0]};
  const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  const double cut = tol.rank * nn;
  if (std::fabs(n[0]) <= cut) {
    // Abelian, contains I.
    if (std::fabs(n[1]) > cut) {
      const double mu = -n[2] / n[1];  // mu X + Y lies in the plane
      return finish(e, Family::kPlaneIY, {}, lower_unipotent(mu), h);
    }
    return finish(e, Family::kPlaneIX, {}, id, h);
  }
  if (std::fabs(n[1]) > tol.param_tol * nn) {
    throw Error(ErrorCode::kUnrecognizedSubalgebra,
                "plane in h_0 neither contains I nor X");
  }
  // <X, lambda I + Y>; lambda is fixed modulo the derived algebra span{X}.
  return finish(e, Family::kPlaneLambda,
                Parameter{ParamKind::kLambda, -n[2] / n[0]}, id, h);
}

SubalgNormalForm normalize_in_hneg1(const Subalgebra& h,
                                    const Tolerances& tol) {
  require_contained(EtaType::kNeg, h, tol);
  const EtaType e = EtaType::kNeg;
  if (h.dim() == 2) {
    return finish(e, Family::kFullHneg1, {}, Mat2::identity(), h);
  }
  const Mat2& a = h.generators().front();
  const double p = a(0, 0);
  const double q = a(1, 1);
  if (std::fabs(q) > std::fabs(p)) {
    // R_{pi/2} exchanges the diagonal entries.
    return finish(e, Family::kDiagBeta, Parameter{ParamKind::kBeta, p / q},
                  gens::quarter_turn(), h);
  }
  return finish(e, Family::kDiagBeta, Parameter{ParamKind::kBeta, q / p},
                Mat2::identity(), h);
}

SubalgNormalForm normalize_in(EtaType e, const Subalgebra& h,
                              const Tolerances& tol) {
  switch (e) {
    case EtaType::kPos: return normalize_in_h1(h, tol);
    case EtaType::kNull: return normalize_in_h0(h, tol);
    case EtaType::kNeg: return normalize_in_hneg1(h, tol);
  }
  throw Error(ErrorCode::kUnrecognizedSubalgebra, "unknown eta type");
}

}  // namespace sympar

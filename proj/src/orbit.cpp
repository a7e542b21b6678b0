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

#include "sympar/orbit.hpp"

#include <cmath>
#include <numbers>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"

namespace sympar {

std::string_view to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::kPresent: return "Present";
    case OrbitClass::kFuture: return "Future";
    case OrbitClass::kPast: return "Past";
    case OrbitClass::kFutureCone: return "FutureCone";
    case OrbitClass::kPastCone: return "PastCone";
    case OrbitClass::kElsewhere: return "Elsewhere";
  }
  return "?";
}

std::string_view to_string(EtaType e) {
  switch (e) {
    case EtaType::kPos: return "Pos";
    case EtaType::kNull: return "Null";
    case EtaType::kNeg: return "Neg";
  }
  return "?";
}

std::optional<EtaType> eta_type_from_string(std::string_view s) {
  if (s == "Pos") return EtaType::kPos;
  if (s == "Null") return EtaType::kNull;
  if (s == "Neg") return EtaType::kNeg;
  return std::nullopt;
}

Sym2 representative(EtaType e) {
  switch (e) {
    case EtaType::kPos: return reps::sigma_pos();
    case EtaType::kNull: return reps::sigma_null();
    case EtaType::kNeg: return reps::sigma_neg();
  }
  return {};
}

Subspace representative_plane(EtaType e) {
  const Sym2 line[1] = {representative(e)};
  return ortho_complement(Subspace::from_generators(line));
}

OrbitClass classify_vector(const Vec3& u, const Tolerances& tol) {
  const double n2 = u.x * u.x + u.y * u.y + u.t * u.t;
  if (n2 == 0.0 || std::sqrt(n2) <= tol.det_floor) return OrbitClass::kPresent;
  const double e = eta(u);
  if (std::fabs(e) < tol.residual * (1.0 + n2)) {
    return u.t > 0 ? OrbitClass::kFutureCone : OrbitClass::kPastCone;
  }
  if (e < 0) return OrbitClass::kElsewhere;
  return u.t > 0 ? OrbitClass::kFuture : OrbitClass::kPast;
}

namespace {

// Ratio |lambda_min| / |lambda_max| with the sign of det.
double signed_eigen_ratio(const Sym2& s) {
  const double mean = 0.5 * (s.p + s.r);
  const double rad = std::hypot(0.5 * (s.p - s.r), s.q);
  const double big = std::fabs(mean) + rad;
  if (big == 0.0) return 0.0;
  return s.det() / (big * big);
}

// Flip sign so that the first clearly nonzero of (t, x, y) is positive.
Sym2 sign_normalized(const Sym2& s, const Tolerances& tol) {
  const Vec3 v = phi_inv(s);
  const double cut = tol.rank * v.norm();
  for (double c : {v.t, v.x, v.y}) {
    if (std::fabs(c) > cut) return c > 0 ? s : -1.0 * s;
  }
  return s;
}

Mat2 pos_conjugator(const Sym2& s) {
  // Symmetric square root of a positive definite 2x2 matrix.
  const double rd = std::sqrt(s.det());
  const double denom = std::sqrt(s.trace() + 2.0 * rd);
  return (1.0 / denom) * Mat2{{s.p + rd, s.q, s.q, s.r + rd}};
}

Mat2 null_conjugator(const Sym2& s) {
  // s = c w w^T with |w| = 1 and c = trace; choose w at angle in
  // [-pi/2, pi/2) so the rotation below is as close to I as possible.
  double w1;
  double w2;
  if (s.p >= s.r) {
    w1 = s.p;
    w2 = s.q;
  } else {
    w1 = s.q;
    w2 = s.r;
  }
  const double n = std::hypot(w1, w2);
  w1 /= n;
  w2 /= n;
  if (w1 < 0 || (w1 == 0 && w2 > 0)) {
    w1 = -w1;
    w2 = -w2;
  }
  const double c = s.trace();
  // R w = e1, so R (w w^T) R^T = sigma_0.
  const Mat2 r{{w1, w2, -w2, w1}};
  return std::sqrt(c) * r;
}

Mat2 neg_conjugator(const Sym2& s) {
  const double mean = 0.5 * (s.p + s.r);
  const double rad = std::hypot(0.5 * (s.p - s.r), s.q);
  const double l1 = mean + rad;  // > 0
  const double l2 = mean - rad;  // < 0
  double e1;
  double e2;
  // Two candidate eigenvectors for l1; keep the better conditioned one.
  const double a1 = s.q, a2 = l1 - s.p;
  const double b1 = l1 - s.r, b2 = s.q;
  if (std::hypot(a1, a2) >= std::hypot(b1, b2)) {
    e1 = a1;
    e2 = a2;
  } else {
    e1 = b1;
    e2 = b2;
  }
  const double n = std::hypot(e1, e2);
  e1 /= n;
  e2 /= n;
  if (e1 < 0 || (e1 == 0 && e2 < 0)) {
    e1 = -e1;
    e2 = -e2;
  }
  const Mat2 qt{{e1, e2, -e2, e1}};  // Q^T with Q = [e, e_perp]
  const Mat2 d = Mat2::diag(std::sqrt(l1), std::sqrt(-l2));
  return gens::rotation(std::numbers::pi / 4) * d * qt;
}

}  // namespace

EtaType eta_type_of(const Sym2& sigma, const Tolerances& tol) {
  const double ratio = signed_eigen_ratio(sigma);
  if (std::fabs(ratio) <= tol.rank) return EtaType::kNull;
  if (std::fabs(ratio) < 10.0 * tol.rank) {
    throw Error(ErrorCode::kIllConditioned,
                "determinant sits at the edge of the null band");
  }
  return ratio > 0 ? EtaType::kPos : EtaType::kNeg;
}

LineCanon canonicalize_line(const Subspace& sigma, const Tolerances& tol) {
  if (sigma.dim() != 1) {
    throw Error(ErrorCode::kBadDimension, "expected a line");
  }
  const Sym2 gen = sigma.generators().front();
  if (!(norm(gen) > tol.rank)) {
    throw Error(ErrorCode::kZeroSubspace, "line generator vanishes");
  }
  const Sym2 s = sign_normalized(gen, tol);
  LineCanon out;
  out.eta_type = eta_type_of(s, tol);
  switch (out.eta_type) {
    case EtaType::kPos: out.conjugator = pos_conjugator(s); break;
    case EtaType::kNull: out.conjugator = null_conjugator(s); break;
    case EtaType::kNeg: out.conjugator = neg_conjugator(s); break;
  }
  const Sym2 rep = representative(out.eta_type);
  const Sym2 moved = dagger(out.conjugator, gen, tol);
  out.scale = inner(moved, rep) / inner(rep, rep);
  out.residual = norm(moved - out.scale * rep) / norm(moved);
  return out;
}

LineCanon canonicalize_plane(const Subspace& sigma, const Tolerances& tol) {
  if (sigma.dim() != 2) {
    throw Error(ErrorCode::kBadDimension, "expected a plane");
  }
  const LineCanon line = canonicalize_line(ortho_complement(sigma), tol);
  LineCanon out = line;
  // (g^dagger S)^perp = (g^{-T})^dagger (S^perp).
  out.conjugator = line.conjugator.transpose().inverse();
  out.scale = 1.0;
  out.residual = distance(dagger(out.conjugator, sigma, tol),
                          representative_plane(line.eta_type));
  return out;
}

double stabilizer_residual(EtaType e, const Mat2& g, const Tolerances& tol) {
  const Sym2 rep = representative(e);
  const Sym2 moved = dagger(g, rep, tol);
  const double c = inner(moved, rep) / inner(rep, rep);
  return norm(moved - c * rep) / norm(moved);
}

bool stabilizer_membership(EtaType e, const Mat2& g, const Tolerances& tol) {
  return stabilizer_residual(e, g, tol) <= tol.residual;
}

}  // namespace sympar

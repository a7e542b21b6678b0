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

#include "sympar/lorentz.hpp"

#include <cmath>
#include <numbers>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"

namespace sympar {

Mat3 lorentz_of(const Mat2& g, const Tolerances& tol) {
  Mat3 m;
  const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int j = 0; j < 3; ++j) {
    const Vec3 col = phi_inv(dagger(g, phi(basis[j]), tol));
    m(0, j) = col.x;
    m(1, j) = col.y;
    m(2, j) = col.t;
  }
  return m;
}

Mat3 lorentz_metric() { return Mat3::diag(-1.0, -1.0, 1.0); }

Mat2 iwasawa_factor(IwasawaKind kind, double param) {
  switch (kind) {
    case IwasawaKind::kN:
      return {{1.0, 0.0, param, 1.0}};
    case IwasawaKind::kA:
      return Mat2::diag(std::exp(param / 2), std::exp(-param / 2));
    case IwasawaKind::kK:
      return gens::rotation(param / 2);
  }
  return Mat2::identity();
}

Mat2 recompose(const IwasawaSL2& f) {
  return iwasawa_factor(IwasawaKind::kN, f.t) *
         iwasawa_factor(IwasawaKind::kA, f.s) *
         iwasawa_factor(IwasawaKind::kK, f.theta);
}

IwasawaSL2 iwasawa_sl2(const Mat2& g, const Tolerances& tol) {
  if (!(std::fabs(g.det() - 1.0) < tol.residual)) {
    throw Error(ErrorCode::kNotUnimodular, "Iwasawa split needs det g = 1");
  }
  // LQ split g = L * K: K's first row is the normalized first row of g and L
  // is lower triangular with positive diagonal.
  const double r0 = std::hypot(g(0, 0), g(0, 1));
  const double c = g(0, 0) / r0;
  const double s = -g(0, 1) / r0;
  // K = [[c, -s], [s, c]], so L = g K^T.
  const double l00 = r0;
  const double l10 = g(1, 0) * c - g(1, 1) * s;
  IwasawaSL2 out;
  out.s = 2.0 * std::log(l00);
  out.t = l10 / l00;
  double half = std::atan2(s, c);
  if (half < 0) half += 2.0 * std::numbers::pi;
  out.theta = 2.0 * half;
  return out;
}

Mat3 lorentz_iwasawa(IwasawaKind kind, double param) {
  return lorentz_of(iwasawa_factor(kind, param));
}

bool is_orthochronous_scaled(const Mat3& m, const Tolerances& tol) {
  const Mat3 d = lorentz_metric();
  const Mat3 gram = m.transpose() * d * m;
  const double rho2 = gram(2, 2);
  if (!(rho2 > 0.0) || !(m(2, 2) > 0.0)) return false;
  return (gram - rho2 * d).max_abs() <= tol.residual * rho2;
}

}  // namespace sympar

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

#include "sympar/geometry.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "sympar/error.hpp"

namespace sympar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kNegativeDeterminant: return "NegativeDeterminant";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kZeroSubspace: return "ZeroSubspace";
    case ErrorCode::kIllConditioned: return "IllConditioned";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kZeroAlgebra: return "ZeroAlgebra";
    case ErrorCode::kNotContained: return "NotContained";
    case ErrorCode::kUnrecognizedSubalgebra: return "UnrecognizedSubalgebra";
    case ErrorCode::kNotInvariant: return "NotInvariant";
    case ErrorCode::kDimensionOutOfScope: return "DimensionOutOfScope";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.t << ")";
}

std::ostream& operator<<(std::ostream& os, const Sym2& s) {
  return os << "[[" << s.p << ", " << s.q << "], [" << s.q << ", " << s.r
            << "]]";
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0)
            << ", " << m(1, 1) << "]]";
}

std::ostream& operator<<(std::ostream& os, const Mat3& m) {
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[") << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2)
       << "]";
  }
  return os << "]";
}

namespace gens {

Mat2 rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{c, -s, s, c}};
}

}  // namespace gens

Sym2 phi(const Vec3& v) { return {v.t + v.x, v.y, v.t - v.x}; }

Sym2 phi(double x, double y, double t) { return phi(Vec3{x, y, t}); }

Vec3 phi_inv(const Sym2& s) {
  return {0.5 * (s.p - s.r), s.q, 0.5 * (s.p + s.r)};
}

double inner(const Sym2& a, const Sym2& b) {
  return 0.5 * (a.p * b.p + 2.0 * a.q * b.q + a.r * b.r);
}

double norm(const Sym2& s) { return std::sqrt(inner(s, s)); }

double eta(const Vec3& v) { return v.t * v.t - v.x * v.x - v.y * v.y; }

Sym2 dagger(const Mat2& h, const Sym2& sigma, const Tolerances& tol) {
  const double d = h.det();
  if (!(std::fabs(d) > tol.det_floor)) {
    std::ostringstream msg;
    msg << "dagger action needs |det h| > " << tol.det_floor << ", got " << d;
    throw Error(ErrorCode::kSingularMatrix, msg.str());
  }
  const Mat2 hinv = h.inverse();
  const Mat2 out = hinv.transpose() * Mat2::from(sigma) * hinv;
  return out.sym();
}

Sym2 dagger_derivative(const Mat2& a, const Sym2& sigma) {
  const Mat2 s = Mat2::from(sigma);
  return (-(a.transpose() * s + s * a)).sym();
}

Mat2 adjoint(const Mat2& g, const Mat2& a) { return g * a * g.inverse(); }

Mat2 expm2(const Mat2& a, double s) {
  const Mat2 b = s * a;
  const double tau = 0.5 * b.trace();
  const Mat2 c = b - tau * Mat2::identity();
  // c is traceless, so c^2 = -det(c) I.
  const double d = c.det();
  double even;
  double odd;
  if (std::fabs(d) < 1e-12) {
    even = 1.0 - d / 2.0;
    odd = 1.0 - d / 6.0;
  } else if (d > 0.0) {
    const double w = std::sqrt(d);
    even = std::cos(w);
    odd = std::sin(w) / w;
  } else {
    const double w = std::sqrt(-d);
    even = std::cosh(w);
    odd = std::sinh(w) / w;
  }
  return std::exp(tau) * (even * Mat2::identity() + odd * c);
}

LanglandsFactors langlands_factor(const Sym2& sigma, const Mat2& h,
                                  const Tolerances& tol) {
  const double d = h.det();
  if (std::fabs(d) <= tol.det_floor) {
    throw Error(ErrorCode::kSingularMatrix, "h is not invertible");
  }
  if (d < 0.0) {
    throw Error(ErrorCode::kNegativeDeterminant,
                "m (aI) always has positive determinant");
  }
  const double a = std::sqrt(d);
  return {sigma, (1.0 / a) * h, a};
}

double condition_number(const Mat2& m) {
  // Singular values of a 2x2 from the Frobenius norm and |det|.
  const double f2 = m.a[0] * m.a[0] + m.a[1] * m.a[1] + m.a[2] * m.a[2] +
                    m.a[3] * m.a[3];
  const double d = std::fabs(m.det());
  const double disc = std::sqrt(std::fmax(0.0, f2 * f2 - 4.0 * d * d));
  const double smax2 = 0.5 * (f2 + disc);
  if (d == 0.0) return INFINITY;
  const double smin2 = d * d / smax2;
  return std::sqrt(smax2 / smin2);
}

}  // namespace sympar

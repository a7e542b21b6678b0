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

#ifndef SYMPAR_MATRIX_HPP_
#define SYMPAR_MATRIX_HPP_

#include <array>
#include <cmath>
#include <ostream>

namespace sympar {

// Lorentz coordinates; t is the time-like coordinate and is stored last.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + t * t); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : t); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.t + b.t};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.t - b.t};
  }
  friend Vec3 operator*(double s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.t};
  }
};

// The symmetric matrix [[p, q], [q, r]].
struct Sym2 {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;

  double det() const { return p * r - q * q; }
  double trace() const { return p + r; }

  friend Sym2 operator+(const Sym2& a, const Sym2& b) {
    return {a.p + b.p, a.q + b.q, a.r + b.r};
  }
  friend Sym2 operator-(const Sym2& a, const Sym2& b) {
    return {a.p - b.p, a.q - b.q, a.r - b.r};
  }
  friend Sym2 operator*(double s, const Sym2& a) {
    return {s * a.p, s * a.q, s * a.r};
  }
};

// Row-major 2x2 matrix.
struct Mat2 {
  std::array<double, 4> a{};

  static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  static Mat2 diag(double d0, double d1) { return {{d0, 0.0, 0.0, d1}}; }
  static Mat2 from(const Sym2& s) { return {{s.p, s.q, s.q, s.r}}; }

  double& operator()(int i, int j) { return a[2 * i + j]; }
  double operator()(int i, int j) const { return a[2 * i + j]; }

  double det() const { return a[0] * a[3] - a[1] * a[2]; }
  double trace() const { return a[0] + a[3]; }
  double norm() const {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
  }
  double max_abs() const {
    return std::fmax(std::fmax(std::fabs(a[0]), std::fabs(a[1])),
                     std::fmax(std::fabs(a[2]), std::fabs(a[3])));
  }
  Mat2 transpose() const { return {{a[0], a[2], a[1], a[3]}}; }
  // Caller is responsible for det() != 0.
  Mat2 inverse() const {
    const double d = det();
    return {{a[3] / d, -a[1] / d, -a[2] / d, a[0] / d}};
  }
  // Symmetric part, read as a Sym2.
  Sym2 sym() const { return {a[0], 0.5 * (a[1] + a[2]), a[3]}; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2],
             x.a[3] + y.a[3]}};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {{x.a[0] - y.a[0], x.a[1] - y.a[1], x.a[2] - y.a[2],
             x.a[3] - y.a[3]}};
  }
  friend Mat2 operator-(const Mat2& x) {
    return {{-x.a[0], -x.a[1], -x.a[2], -x.a[3]}};
  }
  friend Mat2 operator*(double s, const Mat2& x) {
    return {{s * x.a[0], s * x.a[1], s * x.a[2], s * x.a[3]}};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {{x.a[0] * y.a[0] + x.a[1] * y.a[2],
             x.a[0] * y.a[1] + x.a[1] * y.a[3],
             x.a[2] * y.a[0] + x.a[3] * y.a[2],
             x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Row-major 3x3 matrix acting on Vec3 in (x, y, t) order.
struct Mat3 {
  std::array<double, 9> a{};

  static Mat3 identity() {
    return {{1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0}};
  }
  static Mat3 diag(double d0, double d1, double d2) {
    return {{d0, 0.0, 0.0, 0.0, d1, 0.0, 0.0, 0.0, d2}};
  }

  double& operator()(int i, int j) { return a[3 * i + j]; }
  double operator()(int i, int j) const { return a[3 * i + j]; }

  Mat3 transpose() const {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = (*this)(j, i);
    return m;
  }
  double max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::fmax(m, std::fabs(v));
    return m;
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
    return m;
  }
  friend Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (int k = 0; k < 9; ++k) m.a[k] = x.a[k] - y.a[k];
    return m;
  }
  friend Mat3 operator*(double s, const Mat3& x) {
    Mat3 m;
    for (int k = 0; k < 9; ++k) m.a[k] = s * x.a[k];
    return m;
  }
  friend Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.t,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.t,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.t};
  }
};

std::ostream& operator<<(std::ostream& os, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Sym2& s);
std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Mat3& m);

}  // namespace sympar

#endif  // SYMPAR_MATRIX_HPP_

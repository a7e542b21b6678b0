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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"
#include "sympar/selftest.hpp"
#include "sympar/span.hpp"

namespace sympar {
namespace {

void expect_near(const Mat2& a, const Mat2& b, double tol) {
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(a.a[i], b.a[i], tol) << a << " vs " << b;
}

void expect_near(const Sym2& a, const Sym2& b, double tol) {
  expect_near(Mat2::from(a), Mat2::from(b), tol);
}

// Truncated exponential series.
Mat2 taylor_exp(const Mat2& a, int terms) {
  Mat2 sum = Mat2::identity(), term = Mat2::identity();
  for (int k = 1; k < terms; ++k) {
    term = (1.0 / k) * (term * a);
    sum = sum + term;
  }
  return sum;
}

TEST(Phi, Representatives) {
  expect_near(phi(0, 0, 1), Sym2{1, 0, 1}, 0);
  expect_near(phi(1, 0, 1), Sym2{2, 0, 0}, 0);
  expect_near(phi(0, 1, 0), Sym2{0, 1, 0}, 0);
}

TEST(Phi, Inverse) {
  const Vec3 a = phi_inv({1, 0, 1});
  EXPECT_EQ(a.x, 0); EXPECT_EQ(a.y, 0); EXPECT_EQ(a.t, 1);
  const Vec3 b = phi_inv({0, 1, 0});
  EXPECT_EQ(b.x, 0); EXPECT_EQ(b.y, 1); EXPECT_EQ(b.t, 0);
  // t + x = 3, t - x = 1, y = 1
  const Vec3 c = phi_inv({3, 1, 1});
  EXPECT_EQ(c.x, 1); EXPECT_EQ(c.y, 1); EXPECT_EQ(c.t, 2);
}

TEST(Phi, RoundTripAndDeterminant) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0, 3);
  for (int k = 0; k < 10000; ++k) {
    const Vec3 v{n(rng), n(rng), n(rng)};
    const Sym2 s = phi(v);
    EXPECT_NEAR(s.det(), eta(v), 1e-12 * (1 + v.norm() * v.norm()));
    const Vec3 w = phi_inv(s);
    EXPECT_NEAR((w - v).norm(), 0.0, 1e-14 * (1 + v.norm()));
  }
}

TEST(Inner, Values) {
  EXPECT_DOUBLE_EQ(inner(reps::sigma_pos(), reps::sigma_pos()), 1.0);
  EXPECT_DOUBLE_EQ(inner(reps::sigma_null(), reps::sigma_neg()), 0.0);
  EXPECT_DOUBLE_EQ(inner(reps::sigma_pos(), reps::sigma_null()), 0.5);
  const Vec3 u{0.3, -1.2, 2.0};
  EXPECT_NEAR(inner(phi(u), phi(u)), 0.09 + 1.44 + 4.0, 1e-14);
}

TEST(Eta, Values) {
  EXPECT_EQ(eta({0, 0, 1}), 1);
  EXPECT_EQ(eta({1, 0, 1}), 0);
  EXPECT_EQ(eta({0, 1, 0}), -1);
}

TEST(Dagger, Examples) {
  const Sym2 s{1.5, -0.5, 2.0};
  expect_near(dagger(Mat2::identity(), s), s, 0);
  expect_near(dagger(Mat2::diag(2, 1), reps::sigma_null()), Sym2{0.25, 0, 0}, 1e-15);
  expect_near(dagger(3.0 * Mat2::identity(), s), (1.0 / 9.0) * s, 1e-15);
  EXPECT_THROW(dagger(Mat2{{1, 2, 2, 4}}, s), Error);
}

TEST(Dagger, LeftActionAndDeterminant) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n;
  for (int k = 0; k < 1000; ++k) {
    const Mat2 g = selftest::random_matrix(rng, 1e3);
    const Mat2 h = selftest::random_matrix(rng, 1e3);
    const Sym2 s{n(rng), n(rng), n(rng)};
    const Sym2 lhs = dagger(g * h, s);
    const Sym2 rhs = dagger(g, dagger(h, s));
    const double scale = std::fmax(1.0, norm(lhs));
    EXPECT_LT(norm(lhs - rhs) / scale, 1e-10);
    const double d = dagger(g, s).det();
    const double want = s.det() / (g.det() * g.det());
    EXPECT_NEAR(d, want, 1e-9 * std::fmax(std::fabs(want), 1.0 / (g.det() * g.det())));
  }
}

TEST(Dagger, DualityIdentity) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> n;
  for (int k = 0; k < 500; ++k) {
    const Mat2 h = selftest::random_matrix(rng, 1e2);
    const Sym2 s{n(rng), n(rng), n(rng)}, t{n(rng), n(rng), n(rng)};
    const double rhs = inner(dagger(h, s), t);
    EXPECT_NEAR(inner(dagger(h.transpose(), t), s), rhs, 1e-10 * std::fmax(1.0, std::fabs(rhs)));
  }
}

TEST(DaggerDerivative, Examples) {
  expect_near(dagger_derivative(gens::I(), reps::sigma_pos()), -2.0 * reps::sigma_pos(), 0);
  expect_near(dagger_derivative(gens::J(), reps::sigma_pos()), Sym2{}, 0);
  // Finite-difference value for X on sigma_0 is zero: exp(sX) fixes E11.
  expect_near(dagger_derivative(gens::X(), reps::sigma_null()), Sym2{}, 0);
}

TEST(DaggerDerivative, FiniteDifferences) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> n;
  const double h = 1e-5;
  for (int k = 0; k < 200; ++k) {
    const Mat2 a{{n(rng), n(rng), n(rng), n(rng)}};
    const Sym2 s{n(rng), n(rng), n(rng)};
    const Sym2 fd = (0.5 / h) * (dagger(expm2(a, h), s) - dagger(expm2(a, -h), s));
    EXPECT_LT(norm(fd - dagger_derivative(a, s)), 1e-8);
  }
}

TEST(Bracket, Examples) {
  expect_near(bracket(gens::X(), gens::Y()), -gens::X(), 0);
  expect_near(bracket(gens::I(), Mat2{{1, 2, 3, 4}}), Mat2{}, 0);
  expect_near(bracket(0.7 * gens::I() + gens::X(), -1.3 * gens::I() + gens::Y()), -gens::X(), 1e-15);
}

TEST(Bracket, JacobiIdentity) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> n;
  for (int k = 0; k < 100; ++k) {
    const Mat2 a{{n(rng), n(rng), n(rng), n(rng)}};
    const Mat2 b{{n(rng), n(rng), n(rng), n(rng)}};
    const Mat2 c{{n(rng), n(rng), n(rng), n(rng)}};
    expect_near(bracket(a, b), -bracket(b, a), 0);
    const Mat2 j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    EXPECT_LT(j.max_abs(), 1e-12);
  }
}

Subspace line(const Sym2& s) {
  const Sym2 g[1] = {s};
  return Subspace::from_generators(g);
}

Subspace plane(const Sym2& a, const Sym2& b) {
  const Sym2 g[2] = {a, b};
  return Subspace::from_generators(g);
}

TEST(OrthoComplement, Representatives) {
  EXPECT_LT(distance(ortho_complement(line(reps::sigma_pos())), plane({1, 0, -1}, {0, 1, 0})), 1e-14);
  EXPECT_LT(distance(ortho_complement(line(reps::sigma_null())), plane({0, 1, 0}, {0, 0, 1})), 1e-14);
  EXPECT_LT(distance(ortho_complement(line(reps::sigma_neg())), plane({1, 0, 0}, {0, 0, 1})), 1e-14);
}

TEST(OrthoComplement, InvolutionAndOrthogonality) {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> n;
  for (int k = 0; k < 100; ++k) {
    const Subspace s = line({n(rng), n(rng), n(rng)});
    const Subspace c = ortho_complement(s);
    EXPECT_EQ(c.dim(), 2);
    for (const Sym2& a : c.generators()) EXPECT_NEAR(inner(a, s.generators()[0]), 0.0, 1e-12);
    EXPECT_LT(distance(ortho_complement(c), s), 1e-10);
  }
  const Sym2 all[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_THROW(ortho_complement(Subspace::from_generators(all)), Error);
}

TEST(Expm2, ClosedForms) {
  for (double t = -4; t <= 4; t += 0.5) {
    expect_near(expm2(gens::J(), t), Mat2{{std::cos(t), std::sin(t), -std::sin(t), std::cos(t)}}, 1e-14);
    for (double l : {-2.0, 0.0, 1.5}) {
      expect_near(expm2(l * gens::I() + gens::Y(), t),
                  std::exp(t * l) * Mat2::diag(1, std::exp(t)), 1e-12 * std::exp(std::fabs(t) * 3.5));
    }
  }
  // Nilpotent branch.
  expect_near(expm2(gens::X(), 2.5), Mat2{{1, 0, 2.5, 1}}, 0);
}

TEST(Expm2, MatchesTaylorSeries) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 500; ++k) {
    const Mat2 a{{u(rng), u(rng), u(rng), u(rng)}};
    expect_near(expm2(a), taylor_exp(a, 30), 1e-10);
    EXPECT_NEAR(expm2(a).det(), std::exp(a.trace()), 1e-9 * std::exp(a.trace()));
  }
  // Near the branch point of the traceless determinant.
  for (double d : {1e-13, -1e-13, 1e-9, -1e-9}) {
    const Mat2 a{{0.3, 1.0, d, 0.3}};
    expect_near(expm2(a), taylor_exp(a, 30), 1e-12);
  }
}

TEST(Langlands, Examples) {
  const Sym2 s{1, 2, 3};
  LanglandsFactors f = langlands_factor(s, 2.0 * Mat2::identity());
  EXPECT_DOUBLE_EQ(f.a, 2.0);
  expect_near(f.m, Mat2::identity(), 1e-15);
  expect_near(f.sigma, s, 0);
  f = langlands_factor(s, Mat2{{1, 0, 3, 4}});
  EXPECT_DOUBLE_EQ(f.a, 2.0);
  expect_near(f.m, Mat2{{0.5, 0, 1.5, 2}}, 1e-15);
  EXPECT_NEAR(f.m.det(), 1.0, 1e-15);
  try {
    langlands_factor(s, gens::Lambda());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeDeterminant);
  }
}

TEST(Geometry, ConditionNumber) {
  EXPECT_DOUBLE_EQ(condition_number(Mat2::diag(1, 4)), 4.0);
  EXPECT_NEAR(condition_number(gens::rotation(0.4)), 1.0, 1e-14);
}

}  // namespace
}  // namespace sympar

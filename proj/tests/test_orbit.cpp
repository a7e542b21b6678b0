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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"
#include "sympar/lorentz.hpp"
#include "sympar/orbit.hpp"
#include "sympar/selftest.hpp"

namespace sympar {
namespace {

Subspace line(const Sym2& s) {
  const Sym2 g[1] = {s};
  return Subspace::from_generators(g);
}

Subspace plane(const Sym2& a, const Sym2& b) {
  const Sym2 g[2] = {a, b};
  return Subspace::from_generators(g);
}

// Symmetric square root through an eigendecomposition.
Mat2 sqrt_spd(const Sym2& s) {
  Eigen::Matrix2d m;
  m << s.p, s.q, s.q, s.r;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  const Eigen::Matrix2d r = es.eigenvectors() *
                            es.eigenvalues().cwiseSqrt().asDiagonal() *
                            es.eigenvectors().transpose();
  return {{r(0, 0), r(0, 1), r(1, 0), r(1, 1)}};
}

TEST(ClassifyVector, Examples) {
  EXPECT_EQ(classify_vector({0, 0, 1}), OrbitClass::kFuture);
  EXPECT_EQ(classify_vector({1, 0, 1}), OrbitClass::kFutureCone);
  EXPECT_EQ(classify_vector({0, 1, 0}), OrbitClass::kElsewhere);
  EXPECT_EQ(classify_vector({0, 0, 0}), OrbitClass::kPresent);
  EXPECT_EQ(classify_vector({0, 0, -2}), OrbitClass::kPast);
  EXPECT_EQ(classify_vector({0, -3, -3}), OrbitClass::kPastCone);
}

TEST(ClassifyVector, InvariantUnderAction) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> n;
  for (int k = 0; k < 10000; ++k) {
    const Vec3 u{n(rng), n(rng), n(rng)};
    Mat2 g = selftest::random_matrix(rng, 1e2);
    if (g.det() < 0) g = g * gens::Lambda();
    const double scale = std::exp(n(rng));
    EXPECT_EQ(classify_vector(scale * (lorentz_of(g) * u)), classify_vector(u));
  }
}

TEST(EtaTypeOf, Signs) {
  EXPECT_EQ(eta_type_of({2, 1, 3}), EtaType::kPos);
  EXPECT_EQ(eta_type_of({-2, 1, -3}), EtaType::kPos);
  EXPECT_EQ(eta_type_of({1, 2, 4}), EtaType::kNull);
  EXPECT_EQ(eta_type_of({1, 2, 1}), EtaType::kNeg);
}

TEST(CanonicalizeLine, Examples) {
  LineCanon c = canonicalize_line(line(reps::sigma_pos()));
  EXPECT_EQ(c.eta_type, EtaType::kPos);
  EXPECT_LT((c.conjugator - Mat2::identity()).max_abs(), 1e-15);
  EXPECT_NEAR(c.scale, 1.0, 1e-15);

  const Subspace e22 = line({0, 0, 1});
  c = canonicalize_line(e22);
  EXPECT_EQ(c.eta_type, EtaType::kNull);
  // Proportional to the quarter turn.
  const Mat2 q = gens::quarter_turn();
  const double k = c.conjugator(1, 0) / q(1, 0);
  EXPECT_LT((c.conjugator - k * q).max_abs(), 1e-15);
  const Sym2 d = dagger(c.conjugator, e22.generators()[0]);
  EXPECT_LT(norm(d - c.scale * reps::sigma_null()), 1e-15);

  const Subspace s = line({5, 3, 5});
  c = canonicalize_line(s);
  EXPECT_EQ(c.eta_type, EtaType::kPos);
  const Sym2 gen = s.generators()[0];
  EXPECT_LT((c.conjugator - sqrt_spd(gen)).max_abs(), 1e-14);
  EXPECT_LT(norm(dagger(c.conjugator, gen) - reps::sigma_pos()), 1e-14);
}

TEST(CanonicalizeLine, Neg) {
  const LineCanon c = canonicalize_line(line({1, 2, -3}));
  EXPECT_EQ(c.eta_type, EtaType::kNeg);
  EXPECT_LT(c.residual, 1e-12);
}

TEST(CanonicalizeLine, RepresentativesAreFixed) {
  for (EtaType e : {EtaType::kPos, EtaType::kNull, EtaType::kNeg}) {
    const Sym2 rep = representative(e);
    const LineCanon c = canonicalize_line(line(rep));
    EXPECT_EQ(c.eta_type, e);
    EXPECT_LT(line(dagger(c.conjugator, rep)).residual(rep) / norm(rep), 1e-12);
  }
}

TEST(CanonicalizeLine, Equivariance) {
  std::mt19937_64 rng(32);
  std::normal_distribution<double> n;
  for (int k = 0; k < 1000; ++k) {
    const Sym2 s{n(rng), n(rng), n(rng)};
    const Mat2 h = selftest::random_matrix(rng, 1e2);
    const LineCanon a = canonicalize_line(line(s));
    const LineCanon b = canonicalize_line(line(dagger(h, s)));
    EXPECT_EQ(a.eta_type, b.eta_type);
    EXPECT_EQ(a.eta_type, s.det() > 0 ? EtaType::kPos : EtaType::kNeg);
    const Sym2 rep = representative(a.eta_type);
    EXPECT_LT(distance(dagger(a.conjugator, line(s)), line(rep)), 1e-10);
    EXPECT_LT(a.residual, 1e-8);
  }
}

TEST(CanonicalizeLine, Errors) {
  const Sym2 zero[1] = {Sym2{}};
  EXPECT_THROW(Subspace::from_generators(zero), Error);
  EXPECT_THROW(canonicalize_line(plane({1, 0, 0}, {0, 1, 0})), Error);
}

TEST(CanonicalizePlane, Examples) {
  LineCanon c = canonicalize_plane(representative_plane(EtaType::kPos));
  EXPECT_EQ(c.eta_type, EtaType::kPos);
  EXPECT_LT((c.conjugator - Mat2::identity()).max_abs(), 1e-14);

  const Subspace s = plane(reps::sigma_pos(), {1, 0, -1});
  c = canonicalize_plane(s);
  EXPECT_EQ(c.eta_type, EtaType::kNeg);
  EXPECT_LT(distance(dagger(c.conjugator, s), representative_plane(EtaType::kNeg)), 1e-12);
}

TEST(CanonicalizePlane, RoundTrip) {
  std::mt19937_64 rng(33);
  for (EtaType e : {EtaType::kPos, EtaType::kNull, EtaType::kNeg}) {
    for (int k = 0; k < 300; ++k) {
      const Mat2 h = selftest::random_matrix(rng, 1e2);
      const Subspace s = dagger(h, representative_plane(e));
      const LineCanon c = canonicalize_plane(s);
      EXPECT_EQ(c.eta_type, e);
      EXPECT_LT(distance(dagger(c.conjugator, s), representative_plane(e)), 1e-8);
    }
  }
}

TEST(CanonicalizePlane, DualityConsistency) {
  std::mt19937_64 rng(34);
  std::normal_distribution<double> n;
  for (int k = 0; k < 300; ++k) {
    const Mat2 g = selftest::random_matrix(rng, 1e2);
    const Subspace s = line({n(rng), n(rng), n(rng)});
    const Subspace lhs = ortho_complement(dagger(g, s));
    const Subspace rhs = dagger(g.transpose().inverse(), ortho_complement(s));
    EXPECT_LT(distance(lhs, rhs), 1e-9);
  }
}

TEST(Stabilizer, Examples) {
  EXPECT_TRUE(stabilizer_membership(EtaType::kPos, std::exp(0.7) * gens::rotation(1.1)));
  EXPECT_TRUE(stabilizer_membership(EtaType::kNull, Mat2{{2, 0, -3, 0.5}}));
  EXPECT_TRUE(stabilizer_membership(EtaType::kNeg, gens::rotation(std::numbers::pi / 2)));
  EXPECT_FALSE(stabilizer_membership(EtaType::kNull, Mat2{{1, 1, 0, 1}}));
  EXPECT_FALSE(stabilizer_membership(EtaType::kPos, Mat2::diag(2, 1)));
  EXPECT_THROW(stabilizer_membership(EtaType::kPos, Mat2{}), Error);
}

}  // namespace
}  // namespace sympar

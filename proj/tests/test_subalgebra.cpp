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
#include "sympar/subalgebra.hpp"

namespace sympar {
namespace {

using gens::I;
using gens::J;
using gens::X;
using gens::Y;
using gens::Z;

Subalgebra alg(std::initializer_list<Mat2> g) {
  const std::vector<Mat2> v(g);
  return validate_subalgebra(v);
}

Subspace line(const Sym2& s) {
  const Sym2 g[1] = {s};
  return Subspace::from_generators(g);
}

// Ad(conjugator) carries the input onto the family span.
double soundness(const Subalgebra& h, const SubalgNormalForm& nf) {
  const double p = nf.param ? nf.param->value : 0.0;
  const std::vector<Mat2> fam = family_generators(nf.family, p);
  return distance(conjugate(nf.conjugator, h), Subalgebra::from_span(mat_span(fam)));
}

void expect_near(const Mat2& a, const Mat2& b, double tol) {
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(a.a[i], b.a[i], tol) << a << " vs " << b;
}

TEST(Validate, Examples) {
  EXPECT_EQ(alg({X(), Y()}).dim(), 2);
  EXPECT_EQ(alg({I()}).dim(), 1);
  EXPECT_EQ(alg({I(), 2.0 * I()}).dim(), 1);
  try {
    alg({X(), J()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotClosed);
    EXPECT_NE(std::string(e.what()).find("[h0, h1]"), std::string::npos) << e.what();
  }
  try {
    alg({Mat2{}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroAlgebra);
  }
}

TEST(Validate, BracketObstruction) {
  for (double mu : {-2.0, -0.3, 0.1, 1.0, 4.0}) {
    for (double l : {-1.0, 0.0, 2.5}) {
      const std::vector<Mat2> g = {mu * I() + X(), l * I() + Y()};
      // Raw generators; closure_residual itself works on an orthonormal basis.
      const Subalgebra span = Subalgebra::from_span(mat_span(g));
      EXPECT_GT(span.residual(bracket(g[0], g[1])), 0.1 * std::fabs(mu) / (1 + std::fabs(l)));
      EXPECT_GT(closure_residual(g), 1e-3);
      EXPECT_THROW(validate_subalgebra(g), Error);
    }
  }
}

TEST(Invariance, Examples) {
  EXPECT_TRUE(check_invariance(line(reps::sigma_pos()), alg({J()})));
  EXPECT_TRUE(check_invariance(line(reps::sigma_null()), alg({X(), Y(), I()})));
  EXPECT_FALSE(check_invariance(line(reps::sigma_pos()), alg({X()})));
}

TEST(Invariance, GroupLevelSampling) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1, 1);
  for (EtaType e : {EtaType::kPos, EtaType::kNull, EtaType::kNeg}) {
    const Subalgebra h = stabilizer_algebra(e);
    const Subspace s = line(representative(e));
    ASSERT_TRUE(check_invariance(s, h));
    for (int k = 0; k < 100; ++k) {
      Mat2 a;
      for (const Mat2& g : h.generators()) a = a + u(rng) * g;
      const Sym2 d = dagger(expm2(a), representative(e));
      EXPECT_LT(s.residual(d) / norm(d), 1e-12);
    }
  }
}

TEST(StabilizerAlgebra, Bases) {
  EXPECT_LT(distance(stabilizer_algebra(EtaType::kPos), alg({I(), J()})), 1e-14);
  EXPECT_LT(distance(stabilizer_algebra(EtaType::kNull), alg({I(), X(), Y()})), 1e-14);
  EXPECT_LT(distance(stabilizer_algebra(EtaType::kNeg), alg({Z(), Y()})), 1e-14);
  EXPECT_LT(distance(stabilizer_algebra(EtaType::kNull, true),
                     alg({I(), X().transpose(), Y()})), 1e-14);
}

TEST(NormalizeH1, Examples) {
  SubalgNormalForm nf = normalize_in_h1(alg({J()}));
  EXPECT_EQ(nf.family, Family::kSO2);
  expect_near(nf.conjugator, I(), 0);

  nf = normalize_in_h1(alg({I() - 3.0 * J()}));
  EXPECT_EQ(nf.family, Family::kRotDil);
  ASSERT_TRUE(nf.param);
  EXPECT_NEAR(nf.param->value, 3.0, 1e-12);
  expect_near(nf.conjugator, gens::Lambda(), 0);

  EXPECT_EQ(normalize_in_h1(alg({I(), J()})).family, Family::kFullH1);
  EXPECT_THROW(normalize_in_h1(alg({X()})), Error);
}

TEST(NormalizeH0, Examples) {
  SubalgNormalForm nf = normalize_in_h0(alg({2.0 * I() + 3.0 * X() + Y()}));
  EXPECT_EQ(nf.family, Family::kDiagLambda);
  EXPECT_NEAR(nf.param->value, 2.0, 1e-12);
  expect_near(nf.conjugator, Mat2{{1, 0, 3, 1}}, 1e-12);

  nf = normalize_in_h0(alg({X(), 5.0 * I() + 7.0 * X() + Y()}));
  EXPECT_EQ(nf.family, Family::kPlaneLambda);
  EXPECT_NEAR(nf.param->value, 5.0, 1e-12);

  nf = normalize_in_h0(alg({I(), 4.0 * X() + Y()}));
  EXPECT_EQ(nf.family, Family::kPlaneIY);
  expect_near(nf.conjugator, Mat2{{1, 0, 4, 1}}, 1e-12);

  EXPECT_EQ(normalize_in_h0(alg({I(), X()})).family, Family::kPlaneIX);
  EXPECT_EQ(normalize_in_h0(alg({I(), X(), Y()})).family, Family::kFullH0);
  EXPECT_EQ(normalize_in_h0(alg({-2.5 * X()})).family, Family::kShear);
  EXPECT_EQ(normalize_in_h0(alg({I()})).family, Family::kScalar);

  nf = normalize_in_h0(alg({-2.0 * I() + 3.0 * X()}));
  EXPECT_EQ(nf.family, Family::kDilShear);
  EXPECT_LT(soundness(alg({-2.0 * I() + 3.0 * X()}), nf), 1e-12);
  EXPECT_THROW(normalize_in_h0(alg({J()})), Error);
}

TEST(NormalizeHneg1, Examples) {
  SubalgNormalForm nf = normalize_in_hneg1(alg({Mat2::diag(3, 1)}));
  EXPECT_EQ(nf.family, Family::kDiagBeta);
  EXPECT_NEAR(nf.param->value, 1.0 / 3.0, 1e-12);
  expect_near(nf.conjugator, I(), 0);

  nf = normalize_in_hneg1(alg({Mat2::diag(1, -2)}));
  EXPECT_NEAR(nf.param->value, -0.5, 1e-12);
  expect_near(nf.conjugator, gens::quarter_turn(), 0);

  EXPECT_EQ(normalize_in_hneg1(alg({Z(), Y()})).family, Family::kFullHneg1);
  EXPECT_THROW(normalize_in_hneg1(alg({X()})), Error);
}

// Random lower-triangular element of the span-sigma_0 stabilizer, including
// sign elements.
Mat2 random_h0_group(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.3, 3.0);
  std::normal_distribution<double> n;
  const double a = u(rng) * (rng() % 2 ? 1 : -1);
  const double c = u(rng) * (rng() % 2 ? 1 : -1);
  return {{a, 0, n(rng), c}};
}

TEST(NormalizeH0, SoundnessAndParameterInvariance) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> n;
  int planes = 0;
  for (int k = 0; k < 10000; ++k) {
    // Random closed subalgebra of h_0, by cell.
    std::vector<Mat2> g;
    switch (k % 6) {
      case 0: g = {n(rng) * I() + n(rng) * X() + n(rng) * Y()}; break;
      case 1: g = {n(rng) * I() + n(rng) * X()}; break;
      case 2: g = {n(rng) * X(), n(rng) * I() + n(rng) * X() + Y()}; break;
      case 3: g = {I(), n(rng) * X() + Y()}; break;
      case 4: g = {I() + n(rng) * X(), n(rng) * X()}; break;
      case 5: g = {I(), X(), Y()}; break;
    }
    const Subalgebra h = validate_subalgebra(g);
    const SubalgNormalForm nf = normalize_in_h0(h);
    EXPECT_LT(soundness(h, nf), 1e-8);
    planes += h.dim() == 2;

    const Mat2 c = random_h0_group(rng);
    const SubalgNormalForm moved = normalize_in_h0(conjugate(c, h));
    EXPECT_EQ(moved.family, nf.family);
    if (nf.param) {
      EXPECT_NEAR(moved.param->value, nf.param->value,
                  1e-6 * std::fmax(1.0, std::fabs(nf.param->value)));
    }
  }
  EXPECT_GT(planes, 4000);
}

TEST(NormalizeH1, ParameterInvariance) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> n;
  for (int k = 0; k < 1000; ++k) {
    const Subalgebra h = alg({n(rng) * I() + n(rng) * J()});
    const SubalgNormalForm nf = normalize_in_h1(h);
    EXPECT_LT(soundness(h, nf), 1e-8);
    Mat2 c = std::exp(n(rng)) * gens::rotation(n(rng));
    if (k % 2) c = c * gens::Lambda();
    const SubalgNormalForm moved = normalize_in_h1(conjugate(c, h));
    EXPECT_EQ(moved.family, nf.family);
    if (nf.param) {
      EXPECT_NEAR(moved.param->value, nf.param->value,
                  1e-9 * std::fmax(1.0, std::fabs(nf.param->value)));
    }
  }
}

TEST(NormalizeHneg1, ParameterInvariance) {
  std::mt19937_64 rng(44);
  std::normal_distribution<double> n;
  for (int k = 0; k < 1000; ++k) {
    const Subalgebra h = alg({Mat2::diag(n(rng), n(rng))});
    const SubalgNormalForm nf = normalize_in_hneg1(h);
    EXPECT_LT(soundness(h, nf), 1e-8);
    EXPECT_GE(nf.param->value, -1.0);
    EXPECT_LE(nf.param->value, 1.0);
    Mat2 c = Mat2::diag(std::exp(n(rng)), -std::exp(n(rng)));
    if (k % 2) c = c * gens::quarter_turn();
    const SubalgNormalForm moved = normalize_in_hneg1(conjugate(c, h));
    EXPECT_EQ(moved.family, nf.family);
    EXPECT_NEAR(moved.param->value, nf.param->value, 1e-9);
  }
}

TEST(Normalize, BasisIndependence) {
  const Subalgebra a = alg({X(), 0.5 * I() + Y()});
  const Subalgebra b = alg({3.0 * X() - 2.0 * (0.5 * I() + Y()), 0.5 * I() + Y() + X()});
  const SubalgNormalForm na = normalize_in_h0(a), nb = normalize_in_h0(b);
  EXPECT_EQ(na.family, nb.family);
  EXPECT_NEAR(na.param->value, nb.param->value, 1e-9);
}

TEST(FamilyGenerators, ExponentialsMatchDisplayedGroups) {
  for (double t = -2; t <= 2; t += 0.5) {
    for (double a : {0.0, 0.5, 2.0}) {
      // exp(t (I + alpha J)) = e^t R_{-t alpha}
      expect_near(expm2(family_generators(Family::kRotDil, a)[0], t),
                  std::exp(t) * gens::rotation(-t * a), 1e-10 * std::exp(std::fabs(t)));
    }
    for (double b : {-1.0, 0.0, 0.5}) {
      expect_near(expm2(family_generators(Family::kDiagBeta, b)[0], t),
                  Mat2::diag(std::exp(t), std::exp(t * b)), 1e-10 * std::exp(std::fabs(t)));
    }
    expect_near(expm2(family_generators(Family::kDilShear)[0], t),
                std::exp(t) * Mat2{{1, 0, t, 1}}, 1e-10 * std::exp(std::fabs(t)));
    expect_near(expm2(family_generators(Family::kShear)[0], t), Mat2{{1, 0, t, 1}}, 1e-14);
  }
}

}  // namespace
}  // namespace sympar

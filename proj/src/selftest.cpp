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

#include "sympar/selftest.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "sympar/catalog.hpp"
#include "sympar/classifier.hpp"
#include "sympar/error.hpp"
#include "sympar/geometry.hpp"
#include "sympar/json_io.hpp"
#include "sympar/lorentz.hpp"
#include "sympar/oracle.hpp"
#include "sympar/orbit.hpp"

namespace sympar::selftest {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double draw_param(std::mt19937_64& rng, ParamKind k) {
  switch (k) {
    case ParamKind::kAlpha: return uniform(rng, 0.0, 3.0);
    case ParamKind::kLambda: return uniform(rng, -3.0, 3.0);
    case ParamKind::kBeta: return uniform(rng, -1.0, 1.0);
  }
  return 0.0;
}

Mat2 random_in(std::mt19937_64& rng, const Subalgebra& h, double scale) {
  Mat2 a;
  for (const Mat2& g : h.generators()) a = a + uniform(rng, -scale, scale) * g;
  return a;
}

// Raw generators of g . (catalog representative), mixed by a random
// invertible combination so the input is not orthonormal.
GroupSpec random_conjugate_spec(std::mt19937_64& rng, const CatalogEntry& e,
                                double p, const Mat2& g) {
  std::normal_distribution<double> normal;
  const Mat2 ginv = g.inverse();
  std::vector<Sym2> sg;
  for (const Sym2& s : e.sigma_generators) sg.push_back(dagger(g, s));
  std::vector<Mat2> hg;
  for (const Mat2& a : e.h_at(p)) hg.push_back(g * a * ginv);
  if (hg.size() == 2) {
    const double c = normal(rng);
    hg[0] = hg[0] + c * hg[1];
  }
  if (sg.size() == 2) {
    const double c = normal(rng);
    sg[1] = sg[1] + c * sg[0];
  }
  return GroupSpec::make(sg, hg);
}

Vec3 mat_vec(const Mat3& m, const Vec3& u) { return m * u; }

}  // namespace

Sizes Sizes::quick() {
  Sizes s;
  s.representation_pairs = 200;
  s.unimodular = 200;
  s.iwasawa = 200;
  s.trajectories = 1200;
  s.stabilizer = 100;
  s.roundtrip_draws = 10;
  s.search_pairs = 6;
  s.search_restarts = 16;
  s.duality = 104;
  return s;
}

Mat2 random_matrix(std::mt19937_64& rng, double max_cond) {
  std::normal_distribution<double> normal;
  for (;;) {
    Mat2 g{{normal(rng), normal(rng), normal(rng), normal(rng)}};
    if (std::fabs(g.det()) > 1e-3 && condition_number(g) < max_cond) return g;
  }
}

Mat2 random_unimodular(std::mt19937_64& rng, double max_cond) {
  Mat2 g = random_matrix(rng, max_cond);
  if (g.det() < 0) g = g * gens::Lambda();
  return (1.0 / std::sqrt(g.det())) * g;
}

SuiteResult representation_law(std::uint64_t seed, int pairs) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const Mat2 g = random_matrix(rng, 1e3);
    const Mat2 h = random_matrix(rng, 1e3);
    const Mat3 lg = lorentz_of(g), lh = lorentz_of(h);
    // Relative to the size of the product.
    const double err = (lorentz_of(g * h) - lg * lh).max_abs() /
                       (lg.max_abs() * lh.max_abs());
    worst = std::fmax(worst, err);
  }
  const double kernel = (lorentz_of(-Mat2::identity()) - Mat3::identity()).max_abs();
  const double scalar =
      (lorentz_of(2.0 * Mat2::identity()) - 0.25 * Mat3::identity()).max_abs();
  return {"representation law",
          worst < 1e-9 && kernel <= 1e-12 && scalar <= 1e-12,
          "max relative |L(gh) - L(g)L(h)| = " + fmt(worst) + ", |L(-I) - I| = " +
              fmt(kernel) + ", |L(2I) - I/4| = " + fmt(scalar)};
}

SuiteResult lorentz_orthochrony(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  const Mat3 d = lorentz_metric();
  double worst = 0.0;
  double min_tt = INFINITY;
  for (int k = 0; k < n; ++k) {
    const Mat3 m = lorentz_of(random_unimodular(rng, 1e3));
    const double err =
        (m.transpose() * d * m - d).max_abs() / std::fmax(1.0, m.max_abs() * m.max_abs());
    worst = std::fmax(worst, err);
    min_tt = std::fmin(min_tt, m(2, 2));
  }
  return {"Lorentz invariance", worst < 1e-9 && min_tt > 0.0,
          "max |L^T D L - D| = " + fmt(worst) + ", min L33 = " + fmt(min_tt)};
}

SuiteResult iwasawa(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const Mat2 g = random_unimodular(rng, 1e3);
    const IwasawaSL2 f = iwasawa_sl2(g);
    worst = std::fmax(worst, (recompose(f) - g).max_abs() / std::fmax(1.0, g.max_abs()));
  }
  const Vec3 u1 = phi_inv(reps::sigma_pos());
  const Vec3 u0 = phi_inv(reps::sigma_null());
  const Vec3 um = phi_inv(reps::sigma_neg());
  double fixed = 0.0;
  for (double p = -3.0; p <= 3.0; p += 0.25) {
    fixed = std::fmax(fixed, (mat_vec(lorentz_iwasawa(IwasawaKind::kK, 4 * p), u1) - u1).norm());
    fixed = std::fmax(fixed, (mat_vec(lorentz_iwasawa(IwasawaKind::kN, p), u0) - u0).norm());
    fixed = std::fmax(fixed, (mat_vec(lorentz_iwasawa(IwasawaKind::kA, p), um) - um).norm());
  }
  return {"Iwasawa decomposition", worst < 1e-10 && fixed <= 1e-12,
          "max recomposition error = " + fmt(worst) +
              ", max fixed-vector error = " + fmt(fixed)};
}

SuiteResult orbit_soundness(std::uint64_t seed, int trajectories) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  constexpr OrbitClass kTargets[] = {
      OrbitClass::kPresent,    OrbitClass::kFuture,   OrbitClass::kPast,
      OrbitClass::kFutureCone, OrbitClass::kPastCone, OrbitClass::kElsewhere};
  std::set<OrbitClass> realized;
  int broken = 0;
  for (int k = 0; k < trajectories; ++k) {
    const OrbitClass target = kTargets[k % 6];
    const double x = normal(rng), y = normal(rng);
    const double r = std::hypot(x, y);
    Vec3 u;
    switch (target) {
      case OrbitClass::kPresent: u = {0, 0, 0}; break;
      case OrbitClass::kFuture: u = {x, y, r * uniform(rng, 1.2, 3.0)}; break;
      case OrbitClass::kPast: u = {x, y, -r * uniform(rng, 1.2, 3.0)}; break;
      case OrbitClass::kFutureCone: u = {x, y, r}; break;
      case OrbitClass::kPastCone: u = {x, y, -r}; break;
      case OrbitClass::kElsewhere: u = {x, y, r * uniform(rng, -0.8, 0.8)}; break;
    }
    if (classify_vector(u) != target) {
      ++broken;
      continue;
    }
    realized.insert(target);
    Mat2 a;
    for (double& v : a.a) v = 0.5 * normal(rng);
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
      if (classify_vector(mat_vec(lorentz_of(expm2(a, s)), u)) != target) {
        ++broken;
        break;
      }
    }
  }
  return {"orbit soundness", broken == 0 && realized.size() == 6,
          std::to_string(broken) + " broken trajectories, " +
              std::to_string(realized.size()) + " classes realized"};
}

SuiteResult stabilizer_maximality(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  double worst_member = 0.0;
  double best_outsider = INFINITY;
  for (EtaType e : {EtaType::kPos, EtaType::kNull, EtaType::kNeg}) {
    const Subalgebra h = stabilizer_algebra(e);
    const Subalgebra comp = Subalgebra::from_span(h.span().complement());
    for (int k = 0; k < n; ++k) {
      Mat2 g = expm2(random_in(rng, h, 1.0));
      if (k % 2) g = -g;
      worst_member = std::fmax(worst_member, stabilizer_residual(e, g));
      Mat2 b = random_in(rng, comp, 1.0);
      b = (uniform(rng, 0.1, 0.5) / b.norm()) * b;
      best_outsider = std::fmin(best_outsider, stabilizer_residual(e, g * expm2(b)));
    }
  }
  return {"stabilizer maximality", worst_member < 1e-12 && best_outsider > 1e-3,
          "max member residual = " + fmt(worst_member) +
              ", min non-member residual = " + fmt(best_outsider)};
}

SuiteResult classification_roundtrip(std::uint64_t seed, int draws) {
  std::mt19937_64 rng(seed);
  const auto t0 = std::chrono::steady_clock::now();
  int wrong = 0, total = 0;
  double worst_param = 0.0, worst_res = 0.0;
  std::string first_failure;
  for (const CatalogEntry& e : catalog()) {
    for (int k = 0; k < draws; ++k) {
      ++total;
      const double p = e.param ? draw_param(rng, *e.param) : 0.0;
      Mat2 g = random_matrix(rng, 1e2);
      try {
        const GroupSpec spec = random_conjugate_spec(rng, e, p, g);
        const Classification c = classify(spec);
        double dp = 0.0;
        if (e.param) {
          dp = c.label.param ? std::fabs(c.label.param->value - p) / std::fmax(1.0, std::fabs(p))
                             : INFINITY;
        }
        worst_param = std::fmax(worst_param, dp);
        worst_res = std::fmax(worst_res, std::fmax(c.certificate.residual_sigma,
                                                   c.certificate.residual_h));
        if (c.label.id != e.id || dp > 1e-6) {
          if (first_failure.empty()) {
            first_failure = to_string(e.id) + " -> " + to_string(c.label.id);
          }
          ++wrong;
        }
      } catch (const Error& err) {
        if (first_failure.empty()) first_failure = to_string(e.id) + ": " + err.what();
        ++wrong;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string detail = std::to_string(total - wrong) + "/" + std::to_string(total) +
                       " recovered, max param error = " + fmt(worst_param) +
                       ", max residual = " + fmt(worst_res) + ", " + fmt(secs) + " s";
  if (!first_failure.empty()) detail += ", first failure " + first_failure;
  return {"classification round-trip",
          wrong == 0 && worst_res < 1e-8 && secs < 10.0, detail};
}

SuiteResult non_conjugacy(std::uint64_t seed, int pairs, int restarts) {
  std::mt19937_64 rng(seed);
  // Invariant separation over the parameter grid.
  const std::vector<double> alpha = {0, 0.5, 1, 2};
  const std::vector<double> lambda = {-1, -0.5, 0, 0.5, 1, 2};
  const std::vector<double> beta = {-1, -0.5, 0, 0.5, 1};
  std::vector<InvariantVector> vs;
  int unstable = 0;
  for (const CatalogEntry& e : catalog()) {
    std::vector<double> grid = {0.0};
    if (e.param == ParamKind::kAlpha) grid = alpha;
    if (e.param == ParamKind::kLambda) grid = lambda;
    if (e.param == ParamKind::kBeta) grid = beta;
    for (double p : grid) {
      const InvariantVector v = invariants(catalog_spec(e, p));
      const Mat2 g = random_matrix(rng, 1e2);
      if (!v.same_as(invariants(random_conjugate_spec(rng, e, p, g)), 1e-6)) {
        ++unstable;
      }
      vs.push_back(v);
    }
  }
  int collisions = 0;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) collisions += vs[i].same_as(vs[j], 1e-6);

  // Randomized search between distinct labels with matching dimensions;
  // other pairs are separated by dimension alone.
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < kCatalogSize; ++i)
    for (int j = 0; j < kCatalogSize; ++j) {
      const CatalogEntry &a = catalog()[i], &b = catalog()[j];
      if (i != j && a.plane == b.plane && a.h_generators.size() == b.h_generators.size()) {
        candidates.emplace_back(i, j);
      }
    }
  SearchConfig cfg;
  cfg.restarts = restarts;
  int found = 0;
  double min_best = INFINITY;
  std::string closest;
  for (int k = 0; k < pairs; ++k) {
    const auto [i, j] = candidates[rng() % candidates.size()];
    const CatalogEntry &a = catalog()[i], &b = catalog()[j];
    const double pa = a.param ? draw_param(rng, *a.param) : 0.0;
    const double pb = b.param ? draw_param(rng, *b.param) : 0.0;
    cfg.seed = rng();
    const SearchResult r = search_conjugator(catalog_spec(a, pa), catalog_spec(b, pb), cfg);
    found += r.conjugator.has_value();
    if (r.best_distance < min_best) {
      min_best = r.best_distance;
      closest = to_string(a.id) + "/" + to_string(b.id);
    }
  }
  return {"non-conjugacy evidence",
          unstable == 0 && collisions == 0 && found == 0 && min_best > 0.05,
          std::to_string(vs.size()) + " grid instances, " + std::to_string(collisions) +
              " invariant collisions, " + std::to_string(unstable) +
              " unstable under conjugation; " + std::to_string(found) + "/" +
              std::to_string(pairs) + " searches found a conjugator, min best distance " +
              fmt(min_best) + " (" + closest + ")"};
}

SuiteResult closed_form_exponentials() {
  double worst = 0.0;
  for (double t = -3.0; t <= 3.0; t += 0.25) {
    worst = std::fmax(worst, (expm2(gens::J(), t) - gens::rotation(-t)).max_abs());
    for (double l = -2.0; l <= 2.0; l += 0.5) {
      const Mat2 a = l * gens::I() + gens::Y();
      const Mat2 want = std::exp(t * l) * Mat2::diag(1.0, std::exp(t));
      worst = std::fmax(worst, (expm2(a, t) - want).max_abs() / std::fmax(1.0, want.max_abs()));
    }
    for (double b = -1.0; b <= 1.0; b += 0.25) {
      const Mat2 a = gens::Z() + b * gens::Y();
      const Mat2 want = Mat2::diag(std::exp(t), std::exp(t * b));
      worst = std::fmax(worst, (expm2(a, t) - want).max_abs() / std::fmax(1.0, want.max_abs()));
    }
  }
  return {"closed-form exponentials", worst < 1e-10, "max entry error = " + fmt(worst)};
}

SuiteResult duality(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst_pairing = 0.0, worst_stab = 0.0;
  int mismatched = 0;
  std::string first;
  for (int k = 0; k < n; ++k) {
    const Sym2 sigma{normal(rng), normal(rng), normal(rng)};
    const Sym2 line[1] = {sigma};
    const Subspace span = Subspace::from_generators(line);
    const LineCanon lc = canonicalize_line(span);
    const Mat2 g = lc.conjugator;
    const Mat2 s = expm2(random_in(rng, stabilizer_algebra(lc.eta_type), 1.0));
    const Mat2 h = g.inverse() * s * g;
    worst_stab = std::fmax(worst_stab, span.residual(dagger(h, sigma)) / norm(dagger(h, sigma)));
    const Sym2 tau{normal(rng), normal(rng), normal(rng)};
    const double lhs = inner(dagger(h.transpose(), tau), sigma);
    const double rhs = inner(dagger(h, sigma), tau);
    worst_pairing = std::fmax(worst_pairing, std::fabs(lhs - rhs) / std::fmax(1.0, std::fabs(rhs)));

    const CatalogEntry& e = catalog()[k % kCatalogSize];
    const double p = e.param ? draw_param(rng, *e.param) : 0.0;
    try {
      const GroupSpec spec = random_conjugate_spec(rng, e, p, random_matrix(rng, 1e2));
      const Classification c = classify(dual(spec));
      const bool same_param =
          !e.param || (c.label.param && std::fabs(c.label.param->value - p) <= 1e-6 * std::fmax(1.0, std::fabs(p)));
      if (c.label.id != e.dual || !same_param) {
        if (first.empty()) first = to_string(e.id) + " -> " + to_string(c.label.id);
        ++mismatched;
      }
    } catch (const Error& err) {
      if (first.empty()) first = to_string(e.id) + ": " + err.what();
      ++mismatched;
    }
  }
  std::string detail = "max pairing error = " + fmt(worst_pairing) +
                       ", max stabilizer residual = " + fmt(worst_stab) + ", " +
                       std::to_string(mismatched) + " dual labels mismatched";
  if (!first.empty()) detail += ", first " + first;
  return {"duality", worst_pairing < 1e-10 && worst_stab < 1e-9 && mismatched == 0, detail};
}

SuiteResult catalog_shape() {
  int counts[6] = {};
  int fixed = 0;
  for (const CatalogEntry& e : catalog()) {
    if (e.dim_total >= 2 && e.dim_total <= 5) ++counts[e.dim_total];
    const Classification c = classify(catalog_spec(e, 0.5));
    fixed += c.label.id == e.id && c.certificate.conjugator == Mat2::identity();
  }
  const bool stable = json_io::catalog_text() == json_io::catalog_text();
  const bool shape = counts[5] == 1 && counts[4] == 6 && counts[3] == 12 && counts[2] == 7;
  return {"catalog", shape && stable && fixed == kCatalogSize,
          "entries per dimension (5,4,3,2) = (" + std::to_string(counts[5]) + "," +
              std::to_string(counts[4]) + "," + std::to_string(counts[3]) + "," +
              std::to_string(counts[2]) + "), " + std::to_string(fixed) +
              "/26 representatives fixed with identity conjugator"};
}

std::vector<SuiteResult> run_all(std::uint64_t seed, const Sizes& sizes) {
  return {representation_law(seed + 1, sizes.representation_pairs),
          lorentz_orthochrony(seed + 2, sizes.unimodular),
          iwasawa(seed + 3, sizes.iwasawa),
          orbit_soundness(seed + 4, sizes.trajectories),
          stabilizer_maximality(seed + 5, sizes.stabilizer),
          classification_roundtrip(seed + 6, sizes.roundtrip_draws),
          non_conjugacy(seed + 7, sizes.search_pairs, sizes.search_restarts),
          closed_form_exponentials(),
          duality(seed + 9, sizes.duality),
          catalog_shape()};
}

}  // namespace sympar::selftest

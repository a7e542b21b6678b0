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

#include "sympar/oracle.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <vector>

#include "sympar/error.hpp"
#include "sympar/geometry.hpp"

namespace sympar {

bool SearchConfig::valid() const {
  return restarts > 0 && steps_per_restart >= 0 && step_scale > 0.0 &&
         accept_tol > 0.0 && max_condition >= 1.0 && threads >= 0;
}

double group_distance(const GroupSpec& a, const GroupSpec& b) {
  return distance(a.sigma, b.sigma) + distance(a.h, b.h);
}

namespace {

struct Point {
  Eigen::Vector4d m = Eigen::Vector4d::Zero();
  double objective = 0.0;  // sum of squared projector distances
  double distance = 0.0;
};

class Objective {
 public:
  Objective(const GroupSpec& a, const GroupSpec& b, int k, double max_cond)
      : a_(a), pb_sigma_(b.sigma.span().projector()),
        pb_h_(b.h.span().projector()), k_(k), max_cond_(max_cond) {}

  Mat2 conjugator(const Eigen::Vector4d& m) const {
    const Mat2 g = expm2(mat_from_coords(m));
    return k_ ? g * gens::Lambda() : g;
  }

  // False when the trial is outside the admissible set.
  bool evaluate(Point& p) const {
    const Mat2 g = conjugator(p.m);
    if (!(condition_number(g) <= max_cond_)) return false;
    const GroupSpec c = conjugate(a_, g);
    const double ds = (c.sigma.span().projector() - pb_sigma_).norm();
    const double dh = (c.h.span().projector() - pb_h_).norm();
    p.objective = ds * ds + dh * dh;
    p.distance = ds + dh;
    return std::isfinite(p.objective);
  }

 private:
  const GroupSpec& a_;
  Eigen::Matrix3d pb_sigma_;
  Eigen::Matrix4d pb_h_;
  int k_;
  double max_cond_;
};

struct RestartResult {
  Mat2 g;
  double distance = INFINITY;
};

RestartResult run_restart(const GroupSpec& a, const GroupSpec& b,
                          const SearchConfig& cfg, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                    static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  // Restarts alternate between the two components of GL(2,R).
  const int k = index % 2;
  const Objective f(a, b, k, cfg.max_condition);

  Point cur;
  bool ok = false;
  if (index < 2) {
    ok = f.evaluate(cur);  // identity or Lambda
  }
  for (int tries = 0; !ok && tries < 1000; ++tries) {
    for (int i = 0; i < 4; ++i) cur.m(i) = 0.5 * normal(rng);
    ok = f.evaluate(cur);
  }
  RestartResult out;
  if (!ok) return out;

  const double accept2 = 0.25 * cfg.accept_tol * cfg.accept_tol;
  double step = cfg.step_scale;
  for (int s = 0; s < cfg.steps_per_restart && cur.objective > accept2; ++s) {
    Point trial;
    for (int i = 0; i < 4; ++i) trial.m(i) = cur.m(i) + step * normal(rng);
    if (f.evaluate(trial) && trial.objective < cur.objective) {
      cur = trial;
      step *= 1.5;
    } else {
      step *= 0.9;
    }
    step = std::clamp(step, 1e-12, 2.0);
  }
  out.g = f.conjugator(cur.m);
  out.distance = cur.distance;
  return out;
}

}  // namespace

SearchResult search_conjugator(const GroupSpec& a, const GroupSpec& b,
                               const SearchConfig& cfg) {
  if (!cfg.valid()) throw Error(ErrorCode::kBadParams, "invalid search config");
  SearchResult result;
  if (a.sigma.dim() != b.sigma.dim() || a.h.dim() != b.h.dim()) {
    // No linear map changes the dimensions.
    result.best_distance = group_distance(a, b);
    return result;
  }

  int threads = cfg.threads;
  if (threads == 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::clamp(threads, 1, 8);
  constexpr int kBatch = 8;

  std::vector<RestartResult> slots(cfg.restarts);
  result.best_distance = INFINITY;
  for (int start = 0; start < cfg.restarts; start += kBatch) {
    const int stop = std::min(cfg.restarts, start + kBatch);
    auto work = [&](int offset) {
      for (int i = start + offset; i < stop; i += threads) {
        slots[i] = run_restart(a, b, cfg, i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();

    for (int i = start; i < stop; ++i) {
      if (slots[i].distance < result.best_distance) {
        result.best_distance = slots[i].distance;
        result.restart = i;
      }
    }
    if (result.best_distance < cfg.accept_tol) break;
  }
  if (result.restart < 0) return result;

  // Re-check through the public span machinery before reporting success.
  const Mat2 g = slots[result.restart].g;
  const double checked = group_distance(conjugate(a, g), b);
  result.best_distance = checked;
  if (checked < cfg.accept_tol) result.conjugator = g;
  return result;
}

}  // namespace sympar

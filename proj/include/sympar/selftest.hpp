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

#ifndef SYMPAR_SELFTEST_HPP_
#define SYMPAR_SELFTEST_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sympar/matrix.hpp"

namespace sympar::selftest {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Sizes {
  int representation_pairs = 1000;
  int unimodular = 1000;
  int iwasawa = 1000;
  int trajectories = 10000;
  int stabilizer = 500;
  int roundtrip_draws = 100;
  int search_pairs = 50;
  int search_restarts = 50;
  int duality = 500;

  // Reduced sizes for the CLI selftest.
  static Sizes quick();
};

// Random matrix with standard normal entries and condition number below
// max_cond.
Mat2 random_matrix(std::mt19937_64& rng, double max_cond);
// Same with determinant one.
Mat2 random_unimodular(std::mt19937_64& rng, double max_cond);

SuiteResult representation_law(std::uint64_t seed, int pairs);
SuiteResult lorentz_orthochrony(std::uint64_t seed, int n);
SuiteResult iwasawa(std::uint64_t seed, int n);
SuiteResult orbit_soundness(std::uint64_t seed, int trajectories);
SuiteResult stabilizer_maximality(std::uint64_t seed, int n);
SuiteResult classification_roundtrip(std::uint64_t seed, int draws);
SuiteResult non_conjugacy(std::uint64_t seed, int pairs, int restarts);
SuiteResult closed_form_exponentials();
SuiteResult duality(std::uint64_t seed, int n);
SuiteResult catalog_shape();

std::vector<SuiteResult> run_all(std::uint64_t seed, const Sizes& sizes);

}  // namespace sympar::selftest

#endif  // SYMPAR_SELFTEST_HPP_

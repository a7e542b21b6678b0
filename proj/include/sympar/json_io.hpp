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

#ifndef SYMPAR_JSON_IO_HPP_
#define SYMPAR_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sympar/classifier.hpp"
#include "sympar/matrix.hpp"
#include "sympar/tolerances.hpp"

namespace sympar::json_io {

using Json = nlohmann::ordered_json;

// Parses text, turning syntax errors into kInvalidInput with the line and
// column of the offending byte.
Json parse(std::string_view text);

// Rounds to 12 significant digits; negative zero becomes zero.
double round12(double v);

Json to_json(const Mat2& m);
Json to_json(const Sym2& s);

// Row-major [[a, b], [c, d]]; `what` names the value in error messages.
Mat2 mat_from_json(const Json& j, const std::string& what);
// Full 2x2 matrix checked for symmetry within tol.residual (relative).
Sym2 sym_from_json(const Json& j, const std::string& what,
                   const Tolerances& tol = {});
// A symmetric matrix or a 3-vector (x, y, t).
Vec3 point_from_json(const Json& j, const Tolerances& tol = {});

struct RawSpec {
  std::vector<Sym2> sigma;
  std::vector<Mat2> h;
};

RawSpec raw_spec_from_json(const Json& j, const Tolerances& tol = {});
GroupSpec spec_from_json(const Json& j, const Tolerances& tol = {});
Json to_json(const GroupSpec& spec);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const VerifyReport& r);

Json catalog_json();
// catalog_json() pretty-printed with a trailing newline; the golden file.
std::string catalog_text();

}  // namespace sympar::json_io

#endif  // SYMPAR_JSON_IO_HPP_

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

#include "sympar/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sympar/error.hpp"

namespace sympar::json_io {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw Error(ErrorCode::kInvalidInput, msg);
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) fail(what + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(what + ": not finite");
  return v;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    size_t line = 1, col = 1;
    for (size_t k = 0; k < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("malformed JSON at line " + std::to_string(line) + ", column " +
         std::to_string(col));
  }
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json to_json(const Mat2& m) {
  return Json::array({Json::array({round12(m(0, 0)), round12(m(0, 1))}),
                      Json::array({round12(m(1, 0)), round12(m(1, 1))})});
}

Json to_json(const Sym2& s) { return to_json(Mat2::from(s)); }

Mat2 mat_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) fail(what + ": expected a 2x2 matrix");
  Mat2 m;
  for (int i = 0; i < 2; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != 2) {
      fail(what + ": expected a 2x2 matrix");
    }
    for (int k = 0; k < 2; ++k) m(i, k) = number(row[k], what);
  }
  return m;
}

Sym2 sym_from_json(const Json& j, const std::string& what,
                   const Tolerances& tol) {
  const Mat2 m = mat_from_json(j, what);
  if (std::fabs(m(0, 1) - m(1, 0)) > tol.residual * std::max(1.0, m.max_abs())) {
    fail(what + " is not symmetric");
  }
  return m.sym();
}

Vec3 point_from_json(const Json& j, const Tolerances& tol) {
  if (j.is_array() && j.size() == 3) {
    return {number(j[0], "x"), number(j[1], "y"), number(j[2], "t")};
  }
  return phi_inv(sym_from_json(j, "matrix", tol));
}

RawSpec raw_spec_from_json(const Json& j, const Tolerances& tol) {
  RawSpec out;
  const Json& sg = member(j, "sigma_generators");
  const Json& hg = member(j, "h_generators");
  if (!sg.is_array() || !hg.is_array()) fail("generators must be arrays");
  for (size_t k = 0; k < sg.size(); ++k) {
    out.sigma.push_back(
        sym_from_json(sg[k], "sigma generator " + std::to_string(k), tol));
  }
  for (size_t k = 0; k < hg.size(); ++k) {
    out.h.push_back(mat_from_json(hg[k], "h generator " + std::to_string(k)));
  }
  return out;
}

GroupSpec spec_from_json(const Json& j, const Tolerances& tol) {
  const RawSpec raw = raw_spec_from_json(j, tol);
  return GroupSpec::make(raw.sigma, raw.h, tol);
}

Json to_json(const GroupSpec& spec) {
  Json out = Json::object();
  out["sigma_generators"] = Json::array();
  for (const Sym2& s : spec.sigma.generators()) {
    out["sigma_generators"].push_back(to_json(s));
  }
  out["h_generators"] = Json::array();
  for (const Mat2& m : spec.h.generators()) {
    out["h_generators"].push_back(to_json(m));
  }
  return out;
}

Json to_json(const Classification& c) {
  Json out = Json::object();
  out["label"] = to_string(c.label.id);
  out["dimension"] = c.label.dim_total;
  out["params"] = Json::object();
  if (c.label.param) {
    out["params"][std::string(to_string(c.label.param->kind))] =
        round12(c.label.param->value);
  }
  out["conjugator"] = to_json(c.certificate.conjugator);
  out["residuals"] = {{"sigma", round12(c.certificate.residual_sigma)},
                      {"h", round12(c.certificate.residual_h)}};
  return out;
}

Classification classification_from_json(const Json& j) {
  Classification c;
  const Json& label = member(j, "label");
  if (!label.is_string()) fail("label must be a string");
  const auto id = label_from_string(label.get<std::string>());
  if (!id) fail("unknown label " + label.get<std::string>());
  const CatalogEntry& entry = catalog_entry(*id);
  c.label.id = *id;
  c.label.dim_total = entry.dim_total;
  if (auto it = j.find("dimension"); it != j.end()) {
    c.label.dim_total = static_cast<int>(number(*it, "dimension"));
  }
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) fail("params must be an object");
    for (const auto& [key, value] : it->items()) {
      const auto kind = param_kind_from_string(key);
      if (!kind) fail("unknown parameter " + key);
      if (c.label.param) fail("at most one parameter is allowed");
      c.label.param = Parameter{*kind, number(value, key)};
    }
  }
  c.certificate.conjugator = mat_from_json(member(j, "conjugator"), "conjugator");
  c.certificate.residual_sigma = 0.0;
  c.certificate.residual_h = 0.0;
  return c;
}

Json to_json(const VerifyReport& r) {
  Json out = Json::object();
  out["pass"] = r.pass;
  out["residuals"] = {{"sigma", round12(r.residual_sigma)},
                      {"h", round12(r.residual_h)}};
  out["failures"] = r.failures;
  return out;
}

Json catalog_json() {
  Json out = Json::array();
  for (const CatalogEntry& e : catalog()) {
    Json entry = Json::object();
    entry["id"] = to_string(e.id);
    entry["dim"] = e.dim_total;
    entry["sigma_generators"] = Json::array();
    for (const Sym2& s : e.sigma_generators) {
      entry["sigma_generators"].push_back(to_json(s));
    }
    entry["h_generators"] = Json::array();
    for (const AffineMat2& g : e.h_generators) {
      if (g.has_slope()) {
        Json affine = Json::object();
        affine["constant"] = to_json(g.constant);
        affine[std::string(to_string(*e.param))] = to_json(g.slope);
        entry["h_generators"].push_back(affine);
      } else {
        entry["h_generators"].push_back(to_json(g.constant));
      }
    }
    Json schema = Json::object();
    if (e.param) {
      Json range = Json::object();
      switch (*e.param) {
        case ParamKind::kAlpha:
          range["min"] = 0;
          range["max"] = nullptr;
          break;
        case ParamKind::kLambda:
          range["min"] = nullptr;
          range["max"] = nullptr;
          break;
        case ParamKind::kBeta:
          range["min"] = -1;
          range["max"] = 1;
          break;
      }
      schema[std::string(to_string(*e.param))] = range;
    }
    entry["params_schema"] = schema;
    out.push_back(entry);
  }
  return out;
}

std::string catalog_text() { return catalog_json().dump(2) + "\n"; }

}  // namespace sympar::json_io

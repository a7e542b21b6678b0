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

#include "sympar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sympar/classifier.hpp"
#include "sympar/error.hpp"
#include "sympar/json_io.hpp"
#include "sympar/orbit.hpp"
#include "sympar/selftest.hpp"

namespace sympar::cli {

namespace {

using json_io::Json;

struct Config {
  Tolerances tol;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string input;
  std::string output;
  bool quick = true;
};

std::string read_all(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string read_input(const Config& cfg, std::istream& in) {
  if (cfg.input.empty() || cfg.input == "-") return read_all(in);
  std::ifstream f(cfg.input, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidInput, "cannot open " + cfg.input);
  return read_all(f);
}

class Output {
 public:
  Output(const Config& cfg, std::ostream& out) : out_(&out) {
    if (!cfg.output.empty() && cfg.output != "-") {
      file_.open(cfg.output, std::ios::binary);
      if (!file_) throw Error(ErrorCode::kInvalidInput, "cannot write " + cfg.output);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int exit_code(const Error& e) {
  return e.code() == ErrorCode::kDimensionOutOfScope ? kOutOfScope : kInvalidInput;
}

std::string text_classification(const Classification& c) {
  std::ostringstream os;
  os.precision(12);
  os << "label: " << to_string(c.label.id) << "\n"
     << "dimension: " << c.label.dim_total << "\n";
  if (c.label.param) {
    os << to_string(c.label.param->kind) << ": "
       << json_io::round12(c.label.param->value) << "\n";
  }
  const Mat2& g = c.certificate.conjugator;
  os << "conjugator: [[" << json_io::round12(g(0, 0)) << ", "
     << json_io::round12(g(0, 1)) << "], [" << json_io::round12(g(1, 0)) << ", "
     << json_io::round12(g(1, 1)) << "]]\n"
     << "residuals: sigma " << json_io::round12(c.certificate.residual_sigma)
     << ", h " << json_io::round12(c.certificate.residual_h) << "\n";
  return os.str();
}

int cmd_classify(const Config& cfg, std::istream& in, std::ostream& out) {
  const Json j = json_io::parse(read_input(cfg, in));
  const GroupSpec spec = json_io::spec_from_json(j, cfg.tol);
  const Classification c = classify(spec, cfg.tol);
  Output o(cfg, out);
  if (cfg.format == "text") {
    o.stream() << text_classification(c);
  } else {
    o.stream() << json_io::to_json(c).dump() << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out) {
  const Json j = json_io::parse(read_input(cfg, in));
  if (!j.is_object() || !j.contains("spec") || !j.contains("certificate")) {
    throw Error(ErrorCode::kInvalidInput,
                "expected {\"spec\": ..., \"certificate\": ...}");
  }
  const GroupSpec spec = json_io::spec_from_json(j["spec"], cfg.tol);
  const Classification c = json_io::classification_from_json(j["certificate"]);
  const VerifyReport r = verify(spec, c.label, c.certificate, cfg.tol);
  Output o(cfg, out);
  if (cfg.format == "text") {
    o.stream() << (r.pass ? "PASS" : "FAIL") << " sigma "
               << json_io::round12(r.residual_sigma) << " h "
               << json_io::round12(r.residual_h) << "\n";
    for (const std::string& f : r.failures) o.stream() << "  " << f << "\n";
  } else {
    o.stream() << json_io::to_json(r).dump() << "\n";
  }
  return r.pass ? kOk : kFailed;
}

int cmd_table(const Config& cfg, std::ostream& out) {
  Output o(cfg, out);
  o.stream() << json_io::catalog_text();
  return kOk;
}

int cmd_orbit(const Config& cfg, std::istream& in, std::ostream& out) {
  const Json j = json_io::parse(read_input(cfg, in));
  const Vec3 u = json_io::point_from_json(j, cfg.tol);
  const OrbitClass oc = classify_vector(u, cfg.tol);
  EtaType e = EtaType::kNull;
  if (oc == OrbitClass::kFuture || oc == OrbitClass::kPast) e = EtaType::kPos;
  if (oc == OrbitClass::kElsewhere) e = EtaType::kNeg;
  Output o(cfg, out);
  if (cfg.format == "text") {
    o.stream() << to_string(e) << " " << to_string(oc) << "\n";
  } else {
    Json r = Json::object();
    r["eta_type"] = to_string(e);
    r["orbit"] = to_string(oc);
    o.stream() << r.dump() << "\n";
  }
  return kOk;
}

int cmd_selftest(const Config& cfg, std::ostream& out) {
  const auto sizes = cfg.quick ? selftest::Sizes::quick() : selftest::Sizes{};
  const auto results = selftest::run_all(cfg.seed, sizes);
  Output o(cfg, out);
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (cfg.format == "text") {
      o.stream() << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    } else {
      arr.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
  }
  if (cfg.format != "text") o.stream() << arr.dump(2) << "\n";
  return all ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Classify subgroups of the maximal parabolic of Sp(2,R)", "sympar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol-residual", cfg.tol.residual, "span residual tolerance")
      ->capture_default_str();
  app.add_option("--tol-rank", cfg.tol.rank, "rank tolerance")->capture_default_str();
  app.add_option("--param-tol", cfg.tol.param_tol, "parameter tolerance")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--input", cfg.input, "input file (default stdin)");
  app.add_option("--output", cfg.output, "output file (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "classify a group spec");
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  auto* table_cmd = app.add_subcommand("table", "print the catalog");
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a symmetric matrix or 3-vector");
  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
  bool full = false;
  selftest_cmd->add_flag("--full", full, "use the acceptance sample sizes");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!cfg.tol.valid()) {
    err << "error: tolerances must be positive\n";
    return kUsage;
  }
  cfg.quick = !full;

  try {
    if (*classify_cmd) return cmd_classify(cfg, in, out);
    if (*verify_cmd) return cmd_verify(cfg, in, out);
    if (*table_cmd) return cmd_table(cfg, out);
    if (*orbit_cmd) return cmd_orbit(cfg, in, out);
    if (*selftest_cmd) return cmd_selftest(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return kUsage;
}

}  // namespace sympar::cli

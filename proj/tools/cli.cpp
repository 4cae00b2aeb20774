// Copyright 2026 The szx Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "szx/boolean_core.hpp"
#include "szx/diagonal_gates.hpp"
#include "szx/diagrams.hpp"
#include "szx/errors.hpp"
#include "szx/json_io.hpp"
#include "szx/spider_nest.hpp"
#include "szx/suites.hpp"

namespace szx {

namespace {

// A check ran and did not hold.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

struct Result {
  int code = kExitOk;
  Json report;
};

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must look like a..b");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const unsigned long lo = std::stoul(lo_text, &used);
    if (used != lo_text.size()) throw ParseError("bad range start");
    const unsigned long hi = std::stoul(hi_text, &used);
    if (used != hi_text.size()) throw ParseError("bad range end");
    if (lo > hi) throw ParseError("empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("range must look like a..b");
  }
}

Result cmd_eval(const std::string& file, const std::string& expect, const Globals& g) {
  const Diagram d = diagram_from_json(read_json_file(file));
  const ComplexMatrix m = eval_diagram(d);
  Result r;
  r.report = {{"domain", d.domain().str()},
              {"codomain", d.codomain().str()},
              {"matrix", to_json(m)}};
  if (!expect.empty()) {
    const ComplexMatrix want = complex_matrix_from_json(read_json_file(expect));
    Json check{{"file", expect}};
    if (want.rows() != m.rows() || want.cols() != m.cols()) {
      check["holds"] = false;
      check["reason"] = "shape mismatch";
    } else {
      const double delta = max_abs_diff(m, want);
      check["holds"] = delta <= g.tol;
      check["max_delta"] = delta;
    }
    if (!check["holds"].get<bool>()) r.code = kExitFailed;
    r.report["expect"] = check;
  }
  return r;
}

Result cmd_verify(const std::string& suite, std::size_t sizes, const Globals& g) {
  Result r;
  r.report = run_suite(suite, {sizes, g.seed, g.tol});
  if (!r.report["holds"].get<bool>()) r.code = kExitFailed;
  return r;
}

Result cmd_decompose(const std::string& file, const std::string& transform, bool roundtrip) {
  const PhaseFunction f = phase_function_from_json(read_json_file(file));
  const Decomposition d = transform == "walsh" ? fourier_decompose(f) : moebius_decompose(f);
  Result r;
  r.report = to_json(d);
  r.report["transform"] = transform;
  if (roundtrip) {
    const bool exact = reconstruct(d) == f;
    r.report["roundtrip"] = exact;
    if (!exact) r.code = kExitFailed;
  }
  return r;
}

struct NestArgs {
  std::string family;
  std::string file;
  std::string range;
  std::string alpha = "1/4";
  std::optional<std::size_t> numeric_max;
};

Json nest_entry(const SymmetricPhaseFunction& s_hat, const NestArgs& a, bool& ok) {
  const NestReport report = nest_check(s_hat);
  Json j = to_json(report);
  ok = ok && report.is_identity;
  if (a.numeric_max && s_hat.qubits() <= *a.numeric_max &&
      s_hat.qubits() <= kMaxNumericNestQubits) {
    const bool numeric = nest_numeric(s_hat);
    j["numeric_is_identity"] = numeric;
    j["numeric_agrees"] = numeric == report.is_identity;
    ok = ok && numeric == report.is_identity;
  }
  return j;
}

Result cmd_nest(const NestArgs& a) {
  if (a.family.empty() == a.file.empty()) {
    throw ParseError("nest needs exactly one of --family or --file");
  }
  bool ok = true;
  Json reports = Json::array();
  Result r;
  if (!a.file.empty()) {
    reports.push_back(nest_entry(symmetric_from_json(read_json_file(a.file)), a, ok));
    r.report = {{"file", a.file}};
  } else if (a.family == "de2020fast") {
    const auto [lo, hi] = parse_range(a.range.empty() ? "4..16" : a.range);
    for (std::size_t n = lo; n <= hi; ++n) reports.push_back(nest_entry(family_de2020fast(n), a, ok));
    r.report = {{"family", a.family}};
  } else if (a.family == "munson") {
    const auto [lo, hi] = parse_range(a.range.empty() ? "1..12" : a.range);
    const Rational alpha = Rational::parse(a.alpha);
    for (std::size_t n = lo; n <= hi; ++n) {
      const MunsonReport m = munson_check(alpha, n);
      ok = ok && m.is_identity;
      reports.push_back(to_json(m));
    }
    r.report = {{"family", a.family}};
  } else {
    throw ParseError("unknown family '" + a.family + "'");
  }
  r.report["all_identity"] = ok;
  r.report["reports"] = reports;
  r.code = ok ? kExitOk : kExitFailed;
  return r;
}

Result cmd_synth(const std::string& file, bool check, const Globals& g) {
  const F2Matrix a = f2_matrix_from_json(read_json_file(file));
  if (a.rows() != a.cols()) throw DimensionError("synth needs a square matrix");
  const auto steps = cnot_synthesize(a);
  Result r;
  r.report = to_json(steps);
  if (check) {
    if (!(replay_transvections(a.rows(), steps) == a)) {
      throw CheckFailed("replayed circuit differs from the input");
    }
    if (a.rows() <= 10) {
      const double delta = max_abs_diff(eval_diagram(zx::red_arrow(a)),
                                        eval_diagram(cnot_circuit_diagram(a.rows(), steps)));
      if (delta > g.tol) throw CheckFailed("circuit semantics differ from the red arrow");
    }
  }
  return r;
}

bool is_leaf_array(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) {
           return e.is_structured() && !is_leaf_array(e);
         });
}

// Indented JSON with arrays of scalars, and arrays of those, kept on one line.
void pretty(const Json& j, std::size_t depth, std::string& text) {
  const std::string pad(2 * (depth + 1), ' ');
  if (j.is_object() && !j.empty()) {
    text += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      text += pad + Json(key).dump() + ": ";
      pretty(value, depth + 1, text);
      text += (++i < j.size()) ? ",\n" : "\n";
    }
    text += std::string(2 * depth, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !(is_leaf_array(j) && j.dump().size() <= 100)) {
    text += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      text += pad;
      pretty(j[i], depth + 1, text);
      text += (i + 1 < j.size()) ? ",\n" : "\n";
    }
    text += std::string(2 * depth, ' ') + "]";
  } else {
    text += j.dump();
  }
}

int emit(const Result& r, const Globals& g, std::ostream& out, std::ostream& err) {
  std::string text;
  pretty(r.report, 0, text);
  text += "\n";
  if (g.out.empty()) {
    out << text;
    return r.code;
  }
  std::ofstream file(g.out);
  if (!file) {
    err << "error: cannot write '" << g.out << "'\n";
    return kExitUsage;
  }
  file << text;
  return r.code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scalable ZX semantics, diagonal gate compilation and spider-nest certificates",
               "szx"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Comparison tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--out", g.out, "Write the report to a file instead of stdout");

  std::string eval_file;
  std::string expect_file;
  auto* eval = app.add_subcommand("eval", "Evaluate a diagram to its matrix");
  eval->add_option("diagram", eval_file, "Diagram JSON file")->required();
  eval->add_option("--expect", expect_file, "Expected matrix JSON file");

  std::string suite;
  std::size_t sizes = 3;
  auto* verify = app.add_subcommand("verify", "Run a rule or theorem suite");
  verify->add_option("suite", suite, "arrows, spiders, diagonal, graph, localcomp or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--sizes", sizes, "Largest register size")->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string pf_file;
  std::string transform = "walsh";
  bool roundtrip = false;
  auto* decompose = app.add_subcommand("decompose", "Compile a phase function into terms");
  decompose->add_option("phasefn", pf_file, "PhaseFunction JSON file")->required();
  decompose->add_option("--transform", transform, "walsh or moebius")
      ->capture_default_str()
      ->check(CLI::IsMember({"walsh", "moebius"}));
  decompose->add_flag("--roundtrip", roundtrip, "Resynthesize and require exact equality");

  NestArgs nest_args;
  std::size_t numeric_max = 0;
  auto* nest = app.add_subcommand("nest", "Certify spider-nest identities");
  nest->add_option("--family", nest_args.family, "de2020fast or munson")
      ->check(CLI::IsMember({"de2020fast", "munson"}));
  nest->add_option("--n-range", nest_args.range, "Qubit range a..b");
  nest->add_option("--alpha", nest_args.alpha, "Munson phase")->capture_default_str();
  nest->add_option("--file", nest_args.file, "Walsh spectrum as SymmetricPhaseFunction JSON");
  auto* numeric_opt =
      nest->add_option("--numeric-max", numeric_max, "Cross-check numerically up to this n");

  std::string synth_file;
  bool check = false;
  auto* synth = app.add_subcommand("synth", "Synthesize a CNOT circuit for an invertible matrix");
  synth->add_option("matrix", synth_file, "F2 matrix JSON file")->required();
  synth->add_flag("--check", check, "Replay the circuit and compare");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Result r;
    if (eval->parsed()) {
      r = cmd_eval(eval_file, expect_file, g);
    } else if (verify->parsed()) {
      r = cmd_verify(suite, sizes, g);
    } else if (decompose->parsed()) {
      r = cmd_decompose(pf_file, transform, roundtrip);
    } else if (nest->parsed()) {
      if (numeric_opt->count() > 0) nest_args.numeric_max = numeric_max;
      r = cmd_nest(nest_args);
    } else {
      r = cmd_synth(synth_file, check, g);
    }
    return emit(r, g, out, err);
  } catch (const NotInvertibleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const CheckFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const SizeLimitError& e) {
    err << "error: size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace szx

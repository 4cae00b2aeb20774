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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "szx/json_io.hpp"

namespace szx {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;

  [[nodiscard]] Json json() const { return parse_json(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(SZX_SAMPLES_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("szx_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, EvalControlledZ) {
  const CliRun r = run({"eval", sample("cz.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const ComplexMatrix m = complex_matrix_from_json(r.json()["matrix"]);
  EXPECT_TRUE(matrices_equal(m, ComplexMatrix::diagonal({1.0, 1.0, 1.0, -1.0}), 1e-9));
  EXPECT_EQ(r.json()["domain"], Json("[2]"));
}

TEST(Cli, EvalExpect) {
  const CliRun ok = run({"eval", sample("id2.json"), "--expect", sample("id2.matrix.json")});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_TRUE(ok.json()["expect"]["holds"].get<bool>());
  const CliRun bad = run({"eval", sample("cz.json"), "--expect", sample("id2.matrix.json")});
  EXPECT_EQ(bad.code, kExitFailed);
  EXPECT_FALSE(bad.json()["expect"]["holds"].get<bool>());
  const CliRun shape = run({"eval", sample("cz.json"), "--expect",
                         temp_file("one.json", "[[[1,0]]]")});
  EXPECT_EQ(shape.code, kExitFailed);
}

TEST(Cli, EvalErrors) {
  EXPECT_EQ(run({"eval", sample("malformed.json")}).code, kExitUsage);
  EXPECT_EQ(run({"eval", sample("missing.json")}).code, kExitUsage);
  EXPECT_EQ(run({"eval", temp_file("mismatch.json",
                                   R"({"seq":[{"node":"wire","n":1},{"node":"wire","n":2}]})")})
                .code,
            kExitUsage);
  const CliRun big = run({"eval", temp_file("big.json", R"({"node":"wire","n":21})")});
  EXPECT_EQ(big.code, kExitUsage);
  EXPECT_NE(big.err.find("size limit"), std::string::npos) << big.err;
}

TEST(Cli, Verify) {
  const CliRun r = run({"verify", "arrows", "--sizes", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.json()["holds"].get<bool>());
  EXPECT_GT(r.json()["results"].size(), 10u);
  EXPECT_EQ(run({"verify", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "arrows", "--sizes", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"--seed", "5", "verify", "localcomp"}).code, kExitOk);
}

TEST(Cli, Decompose) {
  const CliRun walsh = run({"decompose", sample("cz.pf.json"), "--transform", "walsh", "--roundtrip"});
  ASSERT_EQ(walsh.code, kExitOk) << walsh.err;
  const TermList gadgets = term_list_from_json(walsh.json());
  ASSERT_EQ(gadgets.terms.size(), 3u);
  EXPECT_EQ(gadgets.terms[0].phase, Rational::parse("1/2"));
  EXPECT_EQ(gadgets.terms[1].phase, Rational::parse("1/2"));
  EXPECT_EQ(gadgets.terms[2].phase, Rational::parse("-1/2"));
  EXPECT_TRUE(walsh.json()["roundtrip"].get<bool>());

  const CliRun moebius = run({"decompose", sample("cz.pf.json"), "--transform", "moebius"});
  const TermList edges = term_list_from_json(moebius.json());
  ASSERT_EQ(edges.terms.size(), 1u);
  EXPECT_EQ(edges.terms[0].phase, Rational(1));

  const CliRun zero = run({"decompose", sample("zero.pf.json")});
  EXPECT_EQ(zero.json()["constant"], Json("0"));
  EXPECT_TRUE(zero.json()["terms"].empty());
  EXPECT_EQ(run({"decompose", sample("malformed.json")}).code, kExitUsage);
  EXPECT_EQ(run({"decompose", sample("cz.pf.json"), "--transform", "fft"}).code, kExitUsage);
}

TEST(Cli, Nest) {
  const CliRun family = run({"nest", "--family", "de2020fast", "--n-range", "4..32"});
  ASSERT_EQ(family.code, kExitOk) << family.err;
  EXPECT_TRUE(family.json()["all_identity"].get<bool>());
  EXPECT_EQ(family.json()["reports"].size(), 29u);

  const CliRun broken = run({"nest", "--file", sample("broken.json"), "--numeric-max", "16"});
  EXPECT_EQ(broken.code, kExitFailed);
  const Json report = broken.json()["reports"][0];
  EXPECT_EQ(report["residues"].size(), 4u);
  EXPECT_FALSE(report["numeric_is_identity"].get<bool>());
  EXPECT_TRUE(report["numeric_agrees"].get<bool>());

  const CliRun munson = run({"nest", "--family", "munson", "--alpha", "1/4", "--n-range", "1..12"});
  EXPECT_EQ(munson.code, kExitOk) << munson.err;
  EXPECT_EQ(munson.json()["reports"][2]["G_tilde"], parse_json(R"(["0","1/4","-1/2","1"])"));

  const CliRun numeric = run({"nest", "--family", "de2020fast", "--n-range", "4..20", "--numeric-max", "16"});
  EXPECT_EQ(numeric.code, kExitOk);
  EXPECT_TRUE(numeric.json()["reports"][12].contains("numeric_agrees"));
  EXPECT_FALSE(numeric.json()["reports"][13].contains("numeric_agrees"));

  EXPECT_EQ(run({"nest"}).code, kExitUsage);
  EXPECT_EQ(run({"nest", "--family", "de2020fast", "--file", sample("broken.json")}).code, kExitUsage);
  EXPECT_EQ(run({"nest", "--family", "de2020fast", "--n-range", "9..4"}).code, kExitUsage);
  EXPECT_EQ(run({"nest", "--family", "de2020fast", "--n-range", "2..5"}).code, kExitUsage);
  EXPECT_EQ(run({"nest", "--family", "de2020fast", "--n-range", "4..65"}).code, kExitUsage);
  EXPECT_EQ(run({"nest", "--family", "fast"}).code, kExitUsage);
}

TEST(Cli, Synth) {
  const CliRun id = run({"synth", sample("identity4.json")});
  ASSERT_EQ(id.code, kExitOk) << id.err;
  EXPECT_EQ(id.json(), Json::array());
  const CliRun upper = run({"synth", sample("upper2.json"), "--check"});
  ASSERT_EQ(upper.code, kExitOk) << upper.err;
  EXPECT_EQ(upper.json().size(), 1u);
  const CliRun singular = run({"synth", sample("singular.json")});
  EXPECT_EQ(singular.code, kExitFailed);
  EXPECT_NE(singular.err.find("not invertible over F2"), std::string::npos);
  EXPECT_EQ(run({"synth", temp_file("rect.json", "[[1,0,0],[0,1,0]]")}).code, kExitUsage);
}

TEST(Cli, OutputFileAndHelp) {
  const auto path = std::filesystem::temp_directory_path() / "szx_test_report.json";
  std::filesystem::remove(path);
  const CliRun r = run({"--out", path.string(), "synth", sample("upper2.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_json_file(path.string()).size(), 1u);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("nest"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--tol", "abc", "verify", "graph"}).code, kExitUsage);
}

}  // namespace
}  // namespace szx

// Copyright 2026 The esope-bridge Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "support/support.h"

namespace cli = esope::cli;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return (support::corpus_dir() / name).string(); }
std::string data(const std::string& name) { return (support::data_dir() / name).string(); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = support::make_temp_dir("cli"); }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  fs::path dir_;
};

TEST_F(CliTest, Usage) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"roundtrip"}).code, cli::kUsage);
  EXPECT_EQ(run({"roundtrip", "x.E", "--report", "xml"}).code, cli::kUsage);
  Result help = run({"--help"});
  EXPECT_EQ(help.code, cli::kOk);
  EXPECT_NE(help.out.find("roundtrip"), std::string::npos);
}

TEST_F(CliTest, RoundtripCorpus) {
  std::vector<std::string> args = {"roundtrip"};
  for (const auto& p : support::corpus_sources()) args.push_back(p.string());
  args.insert(args.end(), {"-I", support::corpus_dir().string()});
  Result r = run(args);
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("newuser.E: equal"), std::string::npos);
}

TEST_F(CliTest, RoundtripDiffers) {
  // The comma-less segment header regenerates as `SEGMENT, s`.
  std::string f = file("d.E", "      PROGRAM P\n      SEGMENT S\n        INTEGER A\n"
                              "      END SEGMENT\n      END\n");
  Result r = run({"roundtrip", f});
  EXPECT_EQ(r.code, cli::kRoundTripDiffers);
  EXPECT_NE(r.out.find("differs (1 hunk)"), std::string::npos) << r.out;
  Result j = run({"roundtrip", f, "--report", "json"});
  Json doc = Json::parse(j.out);
  EXPECT_EQ(doc.at("schema"), "esope-bridge-diff/1");
  EXPECT_EQ(doc.at("equal"), false);
}

TEST_F(CliTest, StageErrorWins) {
  std::string bad = file("bad.E", "      SEGMENT, S\n      INTEGER A\n");
  Result r = run({"roundtrip", bad, corpus("main.E"), "-I", support::corpus_dir().string()});
  EXPECT_EQ(r.code, cli::kStageFailure);
  EXPECT_NE(r.err.find("island: UnterminatedSegment"), std::string::npos) << r.err;
  EXPECT_EQ(run({"roundtrip", dir_.string() + "/missing.E"}).code, cli::kStageFailure);
}

TEST_F(CliTest, IncludePathFromEnvironment) {
  std::string main = corpus("main.E");
  fs::path copy = dir_ / "main.E";
  fs::copy_file(main, copy);
  EXPECT_EQ(run({"roundtrip", copy.string()}).code, cli::kStageFailure);
  ::setenv(cli::kIncludePathEnv, ("/nonexistent:" + support::corpus_dir().string()).c_str(), 1);
  Result r = run({"roundtrip", copy.string()});
  ::unsetenv(cli::kIncludePathEnv);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
}

TEST_F(CliTest, StatsNewuser) {
  Result r = run({"stats", corpus("newuser.E"), "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc.at("schema"), "esope-bridge-stats/1");
  const Json& f = doc.at("files").at(0);
  EXPECT_EQ(f.at("pointer"), 5);
  EXPECT_EQ(f.at("instr"), 6);
  EXPECT_EQ(f.at("dot"), 4);
  EXPECT_EQ(f.at("slash"), 2);

  Result table = run({"stats", corpus("newuser.E")});
  EXPECT_NE(table.out.find("instr."), std::string::npos);
}

TEST_F(CliTest, CheckMarkers) {
  Result r = run({"check-markers", data("markers.f")});
  EXPECT_EQ(r.code, cli::kMarkersFound);
  EXPECT_NE(r.out.find("marker 'c@_'"), std::string::npos);
  EXPECT_NE(r.out.find("marker 'D__('"), std::string::npos);
  EXPECT_NE(r.out.find("marker 'S__('"), std::string::npos);
  Result j = run({"check-markers", data("markers.f"), "--json"});
  EXPECT_EQ(Json::parse(j.out).at("markers").size(), 3u);
  EXPECT_EQ(run({"check-markers", corpus("newuser.E")}).code, cli::kOk);
}

TEST_F(CliTest, DeesopifyPureFortranIsIdentity) {
  std::string text = "      PROGRAM P\n      X = 1.5\n      IF (X .LT. 2) X = 0\n      END\n";
  std::string f = file("p.f", text);
  std::string out = (dir_ / "p.out").string();
  Result r = run({"deesopify", f, "-o", out, "--log", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(support::slurp(out), text);
  Json log = Json::parse(r.out);
  EXPECT_EQ(log.at("schema"), "esope-bridge-rewrite-log/1");
  EXPECT_TRUE(log.at("records").empty());
}

TEST_F(CliTest, DeesopifyLogToStderrWithoutOutputFile) {
  std::string f = file("e.E", "      PROGRAM P\n      X = P.A\n      END\n");
  Result r = run({"deesopify", f, "--log", "json"});
  EXPECT_EQ(r.out, "      PROGRAM P\n      X = D__(P,A)\n      END\n");
  Json log = Json::parse(r.err);
  ASSERT_EQ(log.at("records").size(), 1u);
  EXPECT_EQ(log.at("records")[0].at("rule"), "dot_notation");
}

TEST_F(CliTest, ParseAndRecoverWriteJson) {
  std::string out = (dir_ / "ast.json").string();
  ASSERT_EQ(run({"recover", corpus("newuser.E"), "--json", out}).code, cli::kOk);
  Json doc = Json::parse(support::slurp(out));
  EXPECT_EQ(doc.at("schema"), "esope-bridge-ast/1");
  Result p = run({"parse", corpus("main.E"), "--expand-includes", "-I",
                  support::corpus_dir().string()});
  ASSERT_EQ(p.code, cli::kOk) << p.err;
  EXPECT_NE(p.out.find("\"@_  segment, book\""), std::string::npos);
}

TEST_F(CliTest, RegenStyles) {
  std::string f = file("r.E", "      PROGRAM P\n      POINTEUR P.S\n      X = P.A(/1)\n      END\n");
  Result e = run({"regen", f});
  EXPECT_EQ(e.out, "      PROGRAM P\n      POINTEUR p.s\n      X = P.A(/1)\n      END\n");
  Result fo = run({"regen", f, "--style", "fortran"});
  EXPECT_EQ(fo.out, "      PROGRAM P\nc@_  pointeur p.s\n      X = S__(D__(P,A),1)\n      END\n");
}

TEST_F(CliTest, OutputOrderFollowsInput) {
  std::vector<std::string> args = {"stats"};
  for (const auto& p : support::corpus_files()) args.push_back(p.string());
  Result r = run(args);
  std::size_t last = 0;
  for (const auto& p : support::corpus_files()) {
    std::size_t at = r.out.find(p.filename().string());
    ASSERT_NE(at, std::string::npos);
    EXPECT_GT(at, last);
    last = at;
  }
}

}  // namespace

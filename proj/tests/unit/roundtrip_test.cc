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

#include "esope/roundtrip.h"

#include <gtest/gtest.h>

#include <fstream>

#include "esope/source.h"
#include "support/support.h"

namespace rt = esope::roundtrip;
namespace fs = std::filesystem;
using esope::Error;
using esope::ErrorCode;

namespace {

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

TEST(Normalize, Rules) {
  EXPECT_EQ(rt::normalize("      SUBROUTINE INSGRP()\n"), rt::normalize("      subroutine insgrp\n"));
  EXPECT_EQ(rt::normalize("      IF (A .lt. 5) THEN\n"), rt::normalize("      if(a.lt.5)then\n"));
  EXPECT_EQ(rt::normalize("*comment\n"), rt::normalize("C comment\n"));
  EXPECT_EQ(rt::normalize("      X = 1 +\n     12\n"), "x=1+\n&2\n");
  EXPECT_EQ(rt::normalize("\n   \n      X = 1\n"), "x=1\n");
  EXPECT_EQ(rt::normalize("      S = 'A  B'\n"), "s='a  b'\n");
  EXPECT_EQ(rt::normalize("      CALL F()\n"), "callf()\n");
}

TEST(Normalize, LineNumbers) {
  auto lines = rt::normalize_lines("\n      X = 1\n\n      Y = 2\n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].line_no, 2);
  EXPECT_EQ(lines[1].line_no, 4);
  EXPECT_EQ(lines[1].text, "y=2");
}

TEST(LooseDiff, Cases) {
  std::string f = support::kListingEsope;
  EXPECT_TRUE(rt::loose_diff(f, f).equal());
  auto d = rt::loose_diff("      X = A\n      Y = B\n      Z = C\n",
                          "      X = A\n      Y = Q\n      Z = C\n");
  ASSERT_EQ(d.hunks.size(), 1u);
  EXPECT_EQ(d.hunks[0].original_start, 2);
  EXPECT_EQ(d.hunks[0].original_lines, (std::vector<std::string>{"      Y = B"}));
  EXPECT_EQ(d.hunks[0].regenerated_lines, (std::vector<std::string>{"      Y = Q"}));
  EXPECT_EQ(rt::loose_diff("a\n", "b\n").equal(), rt::loose_diff("b\n", "a\n").equal());
}

TEST(LooseDiff, JsonAndUnified) {
  auto d = rt::loose_diff("      X = A\n", "      X = B\n", "a.E", "a.E.regen");
  auto j = rt::to_json(d);
  EXPECT_EQ(j.at("schema"), "esope-bridge-diff/1");
  EXPECT_EQ(j.at("equal"), false);
  EXPECT_EQ(j.at("hunks").size(), 1u);
  std::string u = rt::render_unified(d);
  EXPECT_NE(u.find("--- a.E"), std::string::npos);
  EXPECT_NE(u.find("-      X = A"), std::string::npos);
  EXPECT_NE(u.find("+      X = B"), std::string::npos);
}

TEST(Preprocess, Includes) {
  fs::path dir = support::make_temp_dir("pp");
  write(dir / "a.inc", "      INTEGER A\n");
  write(dir / "self.inc", "#include \"self.inc\"\n");
  EXPECT_EQ(rt::preprocess_includes("      X = 1\n", {}), "      X = 1\n");
  EXPECT_EQ(rt::preprocess_includes("#include \"a.inc\"\n      X = 1\n", {dir}),
            "      INTEGER A\n      X = 1\n");
  try {
    rt::preprocess_includes("#include \"self.inc\"\n", {dir});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncludeCycle);
  }
  try {
    rt::preprocess_includes("#include \"none.inc\"\n", {dir});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncludeNotFound);
  }
  fs::remove_all(dir);
}

TEST(Preprocess, MainPullsInSegments) {
  fs::path main = support::corpus_dir() / "main.E";
  std::string text = rt::preprocess_includes(support::slurp(main), {support::corpus_dir()}, main);
  std::size_t n = 0;
  for (std::size_t p = 0; (p = text.find("SEGMENT,", p)) != std::string::npos; ++p) ++n;
  EXPECT_EQ(n, 3u);
}

TEST(Verify, CorpusFilesAreEqual) {
  for (const fs::path& p : support::corpus_files()) {
    auto d = rt::verify(p, {support::corpus_dir()});
    EXPECT_TRUE(d.equal()) << p << "\n" << rt::render_unified(d);
  }
}

TEST(Verify, EmptyFile) {
  fs::path dir = support::make_temp_dir("verify");
  write(dir / "empty.f", "");
  EXPECT_TRUE(rt::verify(dir / "empty.f", {}).equal());
  fs::remove_all(dir);
}

TEST(Verify, MarkerCollisionIsIslandError) {
  try {
    rt::verify(support::data_dir() / "markers.f", {});
    FAIL();
  } catch (const esope::pipeline::StageError& e) {
    EXPECT_EQ(e.stage(), "island");
    EXPECT_EQ(e.code(), ErrorCode::kMarkerCollision);
  }
}

TEST(Verify, MissingFileIsReadError) {
  try {
    rt::verify("/nonexistent/x.E", {});
    FAIL();
  } catch (const esope::pipeline::StageError& e) {
    EXPECT_EQ(e.stage(), "read");
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace

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

#include "dot_oracle.h"

#include <gtest/gtest.h>

#include "support/support.h"

namespace {

TEST(DotOracle, HandCountedLines) {
  EXPECT_EQ(oracle::count_access_dots("      UR.UNAME = NAME\n"), 1u);
  EXPECT_EQ(oracle::count_access_dots("      X = A.B.C\n"), 2u);
  EXPECT_EQ(oracle::count_access_dots("      IF (A .LT. 5) X = 1.5\n"), 0u);
  EXPECT_EQ(oracle::count_access_dots("      L = X.AND.P.FLAG\n"), 1u);
  EXPECT_EQ(oracle::count_access_dots("      X = 1.E3 + .5 + 2.D0\n"), 0u);
  EXPECT_EQ(oracle::count_access_dots("      S = 'A.B'\n"), 0u);
  EXPECT_EQ(oracle::count_access_dots("      N = UR.UBB(/1)\n"), 1u);
  EXPECT_EQ(oracle::count_access_dots("      L = .NOT. .TRUE. .EQV. P.OK\n"), 1u);
}

TEST(DotOracle, SkipsCommentsAndPointerDeclarations) {
  EXPECT_EQ(oracle::count_access_dots("C UR.UNAME\n* A.B\nc x.y\n"), 0u);
  EXPECT_EQ(oracle::count_access_dots("      POINTEUR UR.USER, B.BOOK\n"), 0u);
}

TEST(DotOracle, OnlyStatementField) {
  // Column 73 onwards is not code.
  std::string line = "      X = Y" + std::string(61, ' ') + "A.B\n";
  EXPECT_EQ(oracle::count_access_dots(line), 0u);
}

TEST(DotOracle, CraftedFile) {
  EXPECT_EQ(oracle::count_access_dots(support::slurp(support::data_dir() / "dots.f")), 10u);
}

}  // namespace

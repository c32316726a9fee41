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

#include "esope/emitter.h"

#include <gtest/gtest.h>

#include "esope/ast.h"
#include "esope/parser.h"
#include "esope/pipeline.h"
#include "esope/roundtrip.h"
#include "support/support.h"

namespace ast = esope::ast;
namespace em = esope::emitter;
using esope::parser::parse_expression;

namespace {

ast::Statement stmt(ast::Statement::Node node, std::optional<int> label = {}) {
  return ast::Statement{label, {}, std::move(node)};
}

TEST(Emitter, EmptyAst) {
  EXPECT_EQ(em::emit_esope(ast::Ast{}), "");
  EXPECT_EQ(em::emit_fortran(ast::Ast{}), "");
}

TEST(Emitter, Comment) {
  ast::Ast a;
  a.trailing_comments.push_back(stmt(ast::Comment{"hello", false}));
  EXPECT_EQ(em::emit_esope(a), "Chello\n");
}

TEST(Emitter, Expressions) {
  EXPECT_EQ(em::expr_text(parse_expression("a+b*c")), "a+b*c");
  EXPECT_EQ(em::expr_text(parse_expression("(a .lt. 5)")), "(a .LT. 5)");
  EXPECT_EQ(em::expr_text(parse_expression("f(x, 'it''s')")), "f(x, 'it''s')");
  EXPECT_EQ(em::expr_text(parse_expression(".not. .true.")), ".NOT. .TRUE.");
}

TEST(Emitter, EsopeForms) {
  ast::Expr ur{ast::Ident{"ur"}, {}};
  ast::Expr acc{ast::EsopeAttributeAccess{ur, "ubb"}, {}};
  ast::Expr q{ast::EsopeDimensionQuery{acc, 1}, {}};
  EXPECT_EQ(em::expr_text(q), "ur.ubb(/1)");
  EXPECT_EQ(em::expr_text(q, em::Style::kFortran), "S__(D__(ur,ubb),1)");

  EXPECT_EQ(em::statement_text(stmt(ast::EsopePointerDeclaration{{{"ur", "user"}, {"b", "book"}}})),
            "POINTEUR ur.user, b.book");
  EXPECT_EQ(em::statement_text(stmt(ast::EsopeSegmentInstruction{
                ast::SegmentKeyword::kSegact, {"ur", "br"}})),
            "SEGACT, ur, br");
  auto seg = stmt(ast::EsopeSegmentDefinition{
      "user", {stmt(ast::TypeDeclaration{{ast::BaseType::kCharacter, 40}, {{"uname", {}, {}}}})}});
  EXPECT_EQ(em::statement_lines(seg),
            (std::vector<std::string>{"      SEGMENT, user", "        CHARACTER*40 uname",
                                      "      END SEGMENT"}));
  EXPECT_EQ(em::statement_lines(seg, em::Style::kFortran),
            (std::vector<std::string>{"c@_  segment, user", "        CHARACTER*40 uname",
                                      "c@_  end segment"}));
}

TEST(Emitter, Keywords) {
  EXPECT_EQ(em::statement_text(stmt(ast::Call{"foo", {}, true})), "CALL foo()");
  EXPECT_EQ(em::statement_text(stmt(ast::Call{"foo", {}, false})), "CALL foo");
  EXPECT_EQ(em::statement_lines(stmt(ast::Continue{}, 10)),
            (std::vector<std::string>{"   10 CONTINUE"}));
  EXPECT_EQ(em::statement_text(stmt(ast::Goto{20})), "GO TO 20");
}

TEST(Emitter, OpaqueIsVerbatim) {
  EXPECT_EQ(em::statement_lines(stmt(ast::Opaque{"FORMAT(1X,  I5 )"}, 100)),
            (std::vector<std::string>{"  100 FORMAT(1X,  I5 )"}));
}

TEST(Emitter, LongStatementWraps) {
  std::string rhs;
  for (int i = 0; i < 15; ++i) rhs += (i ? " + " : "") + std::string("VALUE") + std::to_string(i);
  ast::Statement s = stmt(ast::Assignment{parse_expression("X"), parse_expression(rhs)});
  auto lines = em::statement_lines(s);
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[1][5], '&');
  for (const auto& l : lines) EXPECT_LE(l.size(), 72u);
}

TEST(Emitter, NestingIndents) {
  auto r = esope::parser::parse_source(
      "      PROGRAM P\n      IF (A) THEN\n      X = 1\n      END IF\n      END\n");
  EXPECT_EQ(em::emit_esope(r.ast),
            "      PROGRAM P\n"
            "      IF (A) THEN\n"
            "        X = 1\n"
            "      END IF\n"
            "      END\n");
}

TEST(Emitter, AnnotatedListingIsLooselyEqual) {
  std::string src = std::string(support::kListingAnnotated) + "      end\n";
  auto r = esope::parser::parse_source(src);
  auto d = esope::roundtrip::loose_diff(src, em::emit_fortran(r.ast));
  EXPECT_TRUE(d.equal()) << esope::roundtrip::render_unified(d);
}

TEST(Emitter, RecoveredListingIsEsope) {
  auto run = esope::pipeline::run(std::string(support::kListingEsope) + "      END\n");
  std::string out = em::emit_esope(run.recovered);
  auto d = esope::roundtrip::loose_diff(std::string(support::kListingEsope) + "      END\n", out);
  EXPECT_TRUE(d.equal()) << esope::roundtrip::render_unified(d);
}

}  // namespace

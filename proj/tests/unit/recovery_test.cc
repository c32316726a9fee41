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

#include "esope/recovery.h"

#include <gtest/gtest.h>

#include "esope/ast.h"
#include "esope/island.h"
#include "esope/parser.h"
#include "support/support.h"

namespace ast = esope::ast;
namespace rc = esope::recovery;
using esope::Error;
using esope::ErrorCode;

namespace {

ast::Ast recovered(const std::string& annotated) {
  return rc::recover(esope::parser::parse_source(annotated).ast);
}

ErrorCode recover_error(const std::string& annotated) {
  try {
    recovered(annotated);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for\n" << annotated;
  return ErrorCode::kIo;
}

TEST(ParseAnnotation, Forms) {
  EXPECT_EQ(rc::parse_annotation("c@_  pointeur ur.user"),
            rc::Header(rc::PointerHeader{{{"ur", "user"}}}));
  EXPECT_EQ(rc::parse_annotation("c@_  segini, ur"),
            rc::Header(rc::InstructionHeader{ast::SegmentKeyword::kSegini, {"ur"}}));
  EXPECT_EQ(rc::parse_annotation("c@_  pointeur a.s, b.t"),
            rc::Header(rc::PointerHeader{{{"a", "s"}, {"b", "t"}}}));
  EXPECT_EQ(rc::parse_annotation("@_  segment, user"),
            rc::Header(rc::SegBeginHeader{"user"}));
  EXPECT_EQ(rc::parse_annotation("c@_  end segment"), rc::Header(rc::SegEndHeader{}));
  EXPECT_EQ(rc::parse_annotation("c@_  segdes, a, b"),
            rc::Header(rc::InstructionHeader{ast::SegmentKeyword::kSegdes, {"a", "b"}}));
}

TEST(ParseAnnotation, Malformed) {
  try {
    rc::parse_annotation("c@_  bogus xyz");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedAnnotation);
  }
}

TEST(Recover, AnnotatedListing) {
  // The annotated listing with an END so the unit is closed.
  ast::Ast a = recovered(std::string(support::kListingAnnotated) + "      end\n");
  const auto& body = a.units.at(0).body;

  const ast::EsopeSegmentDefinition* seg = nullptr;
  const ast::EsopePointerDeclaration* ptr = nullptr;
  const ast::EsopeSegmentInstruction* ins = nullptr;
  const ast::Assignment* dot_assign = nullptr;
  const ast::Assignment* slash_assign = nullptr;
  for (const auto& s : body) {
    if (auto* p = s.as<ast::EsopeSegmentDefinition>()) seg = p;
    if (auto* p = s.as<ast::EsopePointerDeclaration>()) ptr = p;
    if (auto* p = s.as<ast::EsopeSegmentInstruction>()) ins = p;
    if (auto* p = s.as<ast::Assignment>()) {
      if (p->target.as<ast::EsopeAttributeAccess>()) dot_assign = p;
      if (p->value.as<ast::EsopeDimensionQuery>()) slash_assign = p;
    }
  }
  ASSERT_NE(seg, nullptr);
  EXPECT_EQ(seg->name, "user");
  ASSERT_EQ(seg->members.size(), 2u);
  const auto* m0 = seg->members[0].as<ast::TypeDeclaration>();
  ASSERT_NE(m0, nullptr);
  EXPECT_EQ(m0->type.base, ast::BaseType::kCharacter);
  EXPECT_EQ(m0->type.length, 40);
  EXPECT_EQ(m0->entities.at(0).name, "uname");
  EXPECT_EQ(seg->members[1].as<ast::TypeDeclaration>()->entities.at(0).name, "ubb");

  ASSERT_NE(ptr, nullptr);
  EXPECT_EQ(ptr->bindings, (std::vector<ast::PointerBinding>{{"ur", "user"}}));
  ASSERT_NE(ins, nullptr);
  EXPECT_EQ(ins->keyword, ast::SegmentKeyword::kSegini);
  EXPECT_EQ(ins->pointers, (std::vector<std::string>{"ur"}));

  ASSERT_NE(dot_assign, nullptr);
  const auto* acc = dot_assign->target.as<ast::EsopeAttributeAccess>();
  EXPECT_EQ(acc->pointer->as<ast::Ident>()->name, "ur");
  EXPECT_EQ(acc->attribute, "uname");
  EXPECT_EQ(dot_assign->value.as<ast::Ident>()->name, "name");

  ASSERT_NE(slash_assign, nullptr);
  const auto* q = slash_assign->value.as<ast::EsopeDimensionQuery>();
  EXPECT_EQ(q->dim_index, 1);
  const auto* inner = q->target->as<ast::EsopeAttributeAccess>();
  ASSERT_NE(inner, nullptr);
  EXPECT_EQ(inner->attribute, "ubb");

  EXPECT_EQ(rc::count_residue(a), 0u);
}

TEST(Recover, PureFortranUnchanged) {
  std::string src =
      "      SUBROUTINE F(A)\n"
      "C plain\n"
      "      A = G(A, 2)\n"
      "      END\n";
  ast::Ast parsed = esope::parser::parse_source(src).ast;
  EXPECT_EQ(rc::recover(parsed), parsed);
}

TEST(Recover, Errors) {
  EXPECT_EQ(recover_error("      PROGRAM P\n      X = D__(A,B,C)\n      END\n"),
            ErrorCode::kBadArity);
  EXPECT_EQ(recover_error("      PROGRAM P\nc@_  end segment\n      END\n"),
            ErrorCode::kDanglingSegEnd);
  EXPECT_EQ(recover_error("c@_  segment, s\n      INTEGER A\n"),
            ErrorCode::kUnterminatedSegment);
  EXPECT_EQ(recover_error("      PROGRAM P\nc@_  segment, s\n      INTEGER A\n      END\n"),
            ErrorCode::kNonDeclarationInSegment);
  EXPECT_EQ(recover_error("      PROGRAM P\nc@_  segment, s\n      X = 1\n"
                          "c@_  end segment\n      END\n"),
            ErrorCode::kNonDeclarationInSegment);
  EXPECT_EQ(recover_error("      PROGRAM P\nc@_  bogus xyz\n      END\n"),
            ErrorCode::kMalformedAnnotation);
}

TEST(Recover, SubscriptedAttribute) {
  ast::Ast a = recovered("      PROGRAM P\n      D__(P,ARR)(I) = 1\n      END\n");
  const auto* as = a.units.at(0).body.at(0).as<ast::Assignment>();
  ASSERT_NE(as, nullptr);
  const auto* sub = as->target.as<ast::Subscript>();
  ASSERT_NE(sub, nullptr);
  EXPECT_NE(sub->base->as<ast::EsopeAttributeAccess>(), nullptr);
}

TEST(CountEsope, AstAndLogAgree) {
  std::string src =
      "      PROGRAM P\n"
      "      SEGMENT, S\n"
      "        INTEGER A(N)\n"
      "        INTEGER B\n"
      "      END SEGMENT\n"
      "      POINTEUR P.S\n"
      "      SEGINI, P\n"
      "      P.B = P.A(/1) + P.A(2)\n"
      "      SEGDES, P\n"
      "      END\n";
  auto island = esope::island::de_esopify(src);
  auto tree = recovered(island.annotated_source);
  rc::EsopeCounts want{1, 1, 2, 2, 1};
  EXPECT_EQ(rc::count_esope(tree), want);
  EXPECT_EQ(rc::count_esope(island.log), want);
}

}  // namespace

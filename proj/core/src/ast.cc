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

#include "esope/ast.h"

#include <type_traits>

#include "esope/text.h"

namespace esope::ast {

std::string_view binary_op_spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
      return "+";
    case BinaryOp::kSub:
      return "-";
    case BinaryOp::kMul:
      return "*";
    case BinaryOp::kDiv:
      return "/";
    case BinaryOp::kPow:
      return "**";
    case BinaryOp::kConcat:
      return "//";
    case BinaryOp::kLt:
      return ".LT.";
    case BinaryOp::kLe:
      return ".LE.";
    case BinaryOp::kGt:
      return ".GT.";
    case BinaryOp::kGe:
      return ".GE.";
    case BinaryOp::kEq:
      return ".EQ.";
    case BinaryOp::kNe:
      return ".NE.";
    case BinaryOp::kAnd:
      return ".AND.";
    case BinaryOp::kOr:
      return ".OR.";
    case BinaryOp::kEqv:
      return ".EQV.";
    case BinaryOp::kNeqv:
      return ".NEQV.";
  }
  return "?";
}

std::string_view base_type_keyword(BaseType type) {
  switch (type) {
    case BaseType::kInteger:
      return "INTEGER";
    case BaseType::kReal:
      return "REAL";
    case BaseType::kLogical:
      return "LOGICAL";
    case BaseType::kCharacter:
      return "CHARACTER";
    case BaseType::kDoublePrecision:
      return "DOUBLE PRECISION";
    case BaseType::kComplex:
      return "COMPLEX";
  }
  return "?";
}

std::string_view segment_keyword_name(SegmentKeyword keyword) {
  switch (keyword) {
    case SegmentKeyword::kSegini:
      return "segini";
    case SegmentKeyword::kSegact:
      return "segact";
    case SegmentKeyword::kSegadj:
      return "segadj";
    case SegmentKeyword::kSegdes:
      return "segdes";
    case SegmentKeyword::kSegprt:
      return "segprt";
    case SegmentKeyword::kSegsup:
      return "segsup";
  }
  return "?";
}

std::optional<SegmentKeyword> parse_segment_keyword(std::string_view word) {
  for (SegmentKeyword k :
       {SegmentKeyword::kSegini, SegmentKeyword::kSegact,
        SegmentKeyword::kSegadj, SegmentKeyword::kSegdes,
        SegmentKeyword::kSegprt, SegmentKeyword::kSegsup}) {
    if (text::iequals(segment_keyword_name(k), word)) return k;
  }
  return std::nullopt;
}

std::string_view unit_kind_name(UnitKind kind) {
  switch (kind) {
    case UnitKind::kMainProgram:
      return "main_program";
    case UnitKind::kSubroutine:
      return "subroutine";
    case UnitKind::kFunction:
      return "function";
    case UnitKind::kFragment:
      return "fragment";
  }
  return "?";
}

namespace {

// Calls fn on each direct child expression of `e`. Works for const and
// mutable expressions.
template <typename E, typename F>
void each_child(E& e, F&& fn) {
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Unary>) {
          fn(*n.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          fn(*n.lhs);
          fn(*n.rhs);
        } else if constexpr (std::is_same_v<T, Paren>) {
          fn(*n.inner);
        } else if constexpr (std::is_same_v<T, CallOrRef>) {
          for (auto& a : n.args) fn(a);
        } else if constexpr (std::is_same_v<T, Subscript>) {
          fn(*n.base);
          for (auto& a : n.args) fn(a);
        } else if constexpr (std::is_same_v<T, Range>) {
          if (n.lower) fn(**n.lower);
          if (n.upper) fn(**n.upper);
        } else if constexpr (std::is_same_v<T, NamedArg>) {
          fn(*n.value);
        } else if constexpr (std::is_same_v<T, EsopeAttributeAccess>) {
          fn(*n.pointer);
        } else if constexpr (std::is_same_v<T, EsopeDimensionQuery>) {
          fn(*n.target);
        }
      },
      e.node);
}

// Direct expressions of a statement (not those of nested statements).
template <typename S, typename F>
void each_statement_expr(S& s, F&& fn) {
  auto entities = [&](auto& list) {
    for (auto& ent : list) {
      for (auto& d : ent.dims) fn(d);
    }
  };
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TypeDeclaration> ||
                      std::is_same_v<T, Dimension>) {
          entities(n.entities);
        } else if constexpr (std::is_same_v<T, Common>) {
          for (auto& b : n.blocks) entities(b.entities);
        } else if constexpr (std::is_same_v<T, Equivalence>) {
          for (auto& g : n.groups) {
            for (auto& e : g) fn(e);
          }
        } else if constexpr (std::is_same_v<T, Parameter>) {
          for (auto& b : n.bindings) fn(b.value);
        } else if constexpr (std::is_same_v<T, Assignment>) {
          fn(n.target);
          fn(n.value);
        } else if constexpr (std::is_same_v<T, StatementFunctionDef>) {
          for (auto& p : n.params) fn(p);
          fn(n.body);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (auto& a : n.args) fn(a);
        } else if constexpr (std::is_same_v<T, IfLogical>) {
          fn(n.cond);
        } else if constexpr (std::is_same_v<T, IfBlock>) {
          fn(n.cond);
          for (auto& e : n.elseifs) fn(e.cond);
        } else if constexpr (std::is_same_v<T, Do>) {
          fn(n.from);
          fn(n.to);
          if (n.step) fn(*n.step);
        } else if constexpr (std::is_same_v<T, Write> ||
                             std::is_same_v<T, Read>) {
          for (auto& c : n.control) fn(c);
          for (auto& i : n.items) fn(i);
        } else if constexpr (std::is_same_v<T, Print>) {
          fn(n.format);
          for (auto& i : n.items) fn(i);
        } else if constexpr (std::is_same_v<T, Stop>) {
          if (n.code) fn(*n.code);
        }
      },
      s.node);
}

// Nested statements of a statement.
template <typename S, typename F>
void each_child_statement(S& s, F&& fn) {
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IfLogical>) {
          fn(*n.then_stmt);
        } else if constexpr (std::is_same_v<T, IfBlock>) {
          for (auto& c : n.then_body) fn(c);
          for (auto& e : n.elseifs) {
            for (auto& c : e.body) fn(c);
          }
          if (n.else_body) {
            for (auto& c : *n.else_body) fn(c);
          }
        } else if constexpr (std::is_same_v<T, Do>) {
          for (auto& c : n.body) fn(c);
        } else if constexpr (std::is_same_v<T, EsopeSegmentDefinition>) {
          for (auto& c : n.members) fn(c);
        }
      },
      s.node);
}

void walk_statement(const Statement& s,
                    const std::function<void(const Statement&)>& fn) {
  fn(s);
  each_child_statement(s, [&](const Statement& c) { walk_statement(c, fn); });
}

void walk_expr(const Expr& e, const std::function<void(const Expr&)>& fn) {
  fn(e);
  each_child(e, [&](const Expr& c) { walk_expr(c, fn); });
}

void transform_expr(Expr& e, const std::function<void(Expr&)>& fn) {
  each_child(e, [&](Expr& c) { transform_expr(c, fn); });
  fn(e);
}

void clear_spans(Expr& e) {
  e.span = {};
  each_child(e, [](Expr& c) { clear_spans(c); });
}

void clear_spans(Statement& s) {
  s.span = {};
  each_statement_expr(s, [](Expr& e) { clear_spans(e); });
  if (auto* d = s.as<TypeDeclaration>()) {
    for (auto& ent : d->entities) ent.span = {};
  } else if (auto* dim = s.as<Dimension>()) {
    for (auto& ent : dim->entities) ent.span = {};
  } else if (auto* c = s.as<Common>()) {
    for (auto& b : c->blocks) {
      for (auto& ent : b.entities) ent.span = {};
    }
  } else if (auto* i = s.as<IfBlock>()) {
    for (auto& e : i->elseifs) e.span = {};
  }
  each_child_statement(s, [](Statement& c) { clear_spans(c); });
}

}  // namespace

void for_each_statement(const Ast& ast,
                        const std::function<void(const Statement&)>& fn) {
  for (const ProgramUnit& unit : ast.units) {
    for (const Statement& s : unit.leading_comments) walk_statement(s, fn);
    for (const Statement& s : unit.body) walk_statement(s, fn);
  }
  for (const Statement& s : ast.trailing_comments) walk_statement(s, fn);
}

void for_each_expr(const Ast& ast, const std::function<void(const Expr&)>& fn) {
  for_each_statement(ast, [&](const Statement& s) {
    each_statement_expr(s, [&](const Expr& e) { walk_expr(e, fn); });
  });
}

void transform_exprs(Statement& stmt, const std::function<void(Expr&)>& fn) {
  each_statement_expr(stmt, [&](Expr& e) { transform_expr(e, fn); });
  each_child_statement(stmt, [&](Statement& c) { transform_exprs(c, fn); });
}

std::vector<const Expr*> statement_exprs(const Statement& stmt) {
  std::vector<const Expr*> out;
  each_statement_expr(stmt, [&](const Expr& e) { out.push_back(&e); });
  return out;
}

Ast without_spans(Ast ast) {
  for (ProgramUnit& unit : ast.units) {
    unit.span = {};
    for (Statement& s : unit.leading_comments) clear_spans(s);
    for (Statement& s : unit.body) clear_spans(s);
  }
  for (Statement& s : ast.trailing_comments) clear_spans(s);
  return ast;
}

}  // namespace esope::ast

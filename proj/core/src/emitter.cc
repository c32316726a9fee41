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

#include <type_traits>
#include <utility>

#include "esope/fixedform.h"
#include "esope/island.h"
#include "esope/text.h"

namespace esope::emitter {

namespace {

using namespace ast;  // NOLINT

constexpr int kPrimary = 10;

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kEqv:
    case BinaryOp::kNeqv:
      return 1;
    case BinaryOp::kOr:
      return 2;
    case BinaryOp::kAnd:
      return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return 5;
    case BinaryOp::kConcat:
      return 6;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return 7;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
      return 8;
    case BinaryOp::kPow:
      return 9;
  }
  return kPrimary;
}

int precedence(const Expr& e) {
  if (auto* b = e.as<Binary>()) return precedence(b->op);
  if (auto* u = e.as<Unary>()) return u->op == UnaryOp::kNot ? 4 : 7;
  return kPrimary;
}

bool is_dot_operator(BinaryOp op) { return precedence(op) <= 5; }

std::string annotation(std::string_view body) {
  return std::string(island::kAnnotationMarker) + "  " + std::string(body);
}

class Emitter {
 public:
  explicit Emitter(Style style) : style_(style) {}

  std::string expr(const Expr& e) const {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Ident>) {
            return n.name;
          } else if constexpr (std::is_same_v<T, IntLit> ||
                               std::is_same_v<T, RealLit>) {
            return n.text;
          } else if constexpr (std::is_same_v<T, StringLit>) {
            std::string out(1, n.quote);
            for (char c : n.value) {
              out.push_back(c);
              if (c == n.quote) out.push_back(c);
            }
            out.push_back(n.quote);
            return out;
          } else if constexpr (std::is_same_v<T, LogicalLit>) {
            return n.value ? ".TRUE." : ".FALSE.";
          } else if constexpr (std::is_same_v<T, Star>) {
            return "*";
          } else if constexpr (std::is_same_v<T, Unary>) {
            if (n.op == UnaryOp::kNot) {
              return ".NOT. " + operand(*n.operand, 4);
            }
            return (n.op == UnaryOp::kPlus ? "+" : "-") + operand(*n.operand, 8);
          } else if constexpr (std::is_same_v<T, Binary>) {
            int p = precedence(n.op);
            // ** groups to the right, relations do not chain, the rest
            // group to the left.
            int left_min = n.op == BinaryOp::kPow || p == 5 ? p + 1 : p;
            int right_min = n.op == BinaryOp::kPow ? p : p + 1;
            std::string op(binary_op_spelling(n.op));
            if (is_dot_operator(n.op)) op = " " + op + " ";
            return operand(*n.lhs, left_min) + op + operand(*n.rhs, right_min);
          } else if constexpr (std::is_same_v<T, Paren>) {
            return "(" + expr(*n.inner) + ")";
          } else if constexpr (std::is_same_v<T, CallOrRef>) {
            return n.name + "(" + list(n.args) + ")";
          } else if constexpr (std::is_same_v<T, Subscript>) {
            return operand(*n.base, kPrimary) + "(" + list(n.args) + ")";
          } else if constexpr (std::is_same_v<T, Range>) {
            return (n.lower ? expr(**n.lower) : "") + ":" +
                   (n.upper ? expr(**n.upper) : "");
          } else if constexpr (std::is_same_v<T, NamedArg>) {
            return n.name + "=" + expr(*n.value);
          } else if constexpr (std::is_same_v<T, EsopeAttributeAccess>) {
            if (style_ == Style::kFortran) {
              return std::string(island::kDotMarker) + expr(*n.pointer) + "," +
                     n.attribute + ")";
            }
            return operand(*n.pointer, kPrimary) + "." + n.attribute;
          } else {
            static_assert(std::is_same_v<T, EsopeDimensionQuery>);
            if (style_ == Style::kFortran) {
              return std::string(island::kSlashMarker) + expr(*n.target) +
                     "," + std::to_string(n.dim_index) + ")";
            }
            return operand(*n.target, kPrimary) + "(/" +
                   std::to_string(n.dim_index) + ")";
          }
        },
        e.node);
  }

  std::string list(const std::vector<Expr>& items) const {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += ", ";
      out += expr(items[i]);
    }
    return out;
  }

  // First (or only) line of a statement.
  std::string head(const Statement& s) const {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, TypeDeclaration>) {
            return type(n.type) + " " + entities(n.entities);
          } else if constexpr (std::is_same_v<T, Implicit>) {
            if (n.rules.empty()) return "IMPLICIT NONE";
            std::string out = "IMPLICIT ";
            for (std::size_t i = 0; i < n.rules.size(); ++i) {
              if (i > 0) out += ", ";
              out += type(n.rules[i].type) + " (";
              for (std::size_t j = 0; j < n.rules[i].ranges.size(); ++j) {
                const LetterRange& r = n.rules[i].ranges[j];
                if (j > 0) out += ", ";
                out.push_back(text::to_upper(r.first));
                if (r.last != r.first) {
                  out.push_back('-');
                  out.push_back(text::to_upper(r.last));
                }
              }
              out += ")";
            }
            return out;
          } else if constexpr (std::is_same_v<T, Common>) {
            std::string out = "COMMON";
            for (std::size_t i = 0; i < n.blocks.size(); ++i) {
              const CommonBlock& b = n.blocks[i];
              if (!b.name.empty()) {
                out += " /" + b.name + "/";
              } else if (i > 0) {
                out += " //";
              }
              out += " " + entities(b.entities);
            }
            return out;
          } else if constexpr (std::is_same_v<T, Equivalence>) {
            std::string out = "EQUIVALENCE ";
            for (std::size_t i = 0; i < n.groups.size(); ++i) {
              if (i > 0) out += ", ";
              out += "(" + list(n.groups[i]) + ")";
            }
            return out;
          } else if constexpr (std::is_same_v<T, Parameter>) {
            std::string out = "PARAMETER (";
            for (std::size_t i = 0; i < n.bindings.size(); ++i) {
              if (i > 0) out += ", ";
              out += n.bindings[i].name + "=" + expr(n.bindings[i].value);
            }
            return out + ")";
          } else if constexpr (std::is_same_v<T, Dimension>) {
            return "DIMENSION " + entities(n.entities);
          } else if constexpr (std::is_same_v<T, Assignment>) {
            return expr(n.target) + " = " + expr(n.value);
          } else if constexpr (std::is_same_v<T, StatementFunctionDef>) {
            return n.name + "(" + list(n.params) + ") = " + expr(n.body);
          } else if constexpr (std::is_same_v<T, Call>) {
            std::string out = "CALL " + n.name;
            if (n.parens) out += "(" + list(n.args) + ")";
            return out;
          } else if constexpr (std::is_same_v<T, IfLogical>) {
            return "IF (" + expr(n.cond) + ") " + head(*n.then_stmt);
          } else if constexpr (std::is_same_v<T, IfBlock>) {
            return "IF (" + expr(n.cond) + ") THEN";
          } else if constexpr (std::is_same_v<T, Do>) {
            std::string out = "DO ";
            if (n.target_label) out += std::to_string(*n.target_label) + " ";
            out += n.var + " = " + expr(n.from) + ", " + expr(n.to);
            if (n.step) out += ", " + expr(*n.step);
            return out;
          } else if constexpr (std::is_same_v<T, Goto>) {
            return "GO TO " + std::to_string(n.target);
          } else if constexpr (std::is_same_v<T, Continue>) {
            return "CONTINUE";
          } else if constexpr (std::is_same_v<T, Write>) {
            return io("WRITE", n.control, n.items);
          } else if constexpr (std::is_same_v<T, Read>) {
            return io("READ", n.control, n.items);
          } else if constexpr (std::is_same_v<T, Print>) {
            std::string out = "PRINT " + expr(n.format);
            for (const Expr& i : n.items) out += ", " + expr(i);
            return out;
          } else if constexpr (std::is_same_v<T, Return>) {
            return "RETURN";
          } else if constexpr (std::is_same_v<T, Stop>) {
            return n.code ? "STOP " + expr(*n.code) : "STOP";
          } else if constexpr (std::is_same_v<T, End>) {
            return "END";
          } else if constexpr (std::is_same_v<T, Comment>) {
            return comment_line(n);
          } else if constexpr (std::is_same_v<T, Include>) {
            return n.directive ? "#include \"" + n.path + "\""
                               : "INCLUDE '" + n.path + "'";
          } else if constexpr (std::is_same_v<T, Opaque>) {
            return n.raw_text;
          } else if constexpr (std::is_same_v<T, EsopeSegmentDefinition>) {
            if (style_ == Style::kFortran) return annotation("segment, " + n.name);
            return "SEGMENT, " + n.name;
          } else if constexpr (std::is_same_v<T, EsopePointerDeclaration>) {
            std::string pairs;
            for (std::size_t i = 0; i < n.bindings.size(); ++i) {
              if (i > 0) pairs += ", ";
              pairs += n.bindings[i].variable + "." + n.bindings[i].segment;
            }
            if (style_ == Style::kFortran) return annotation("pointeur " + pairs);
            return "POINTEUR " + pairs;
          } else {
            static_assert(std::is_same_v<T, EsopeSegmentInstruction>);
            std::string out(segment_keyword_name(n.keyword));
            if (style_ == Style::kEsope) out = text::upper(out);
            out += ", ";
            for (std::size_t i = 0; i < n.pointers.size(); ++i) {
              if (i > 0) out += ", ";
              out += n.pointers[i];
            }
            return style_ == Style::kFortran ? annotation(out) : out;
          }
        },
        s.node);
  }

  void lines(const Statement& s, int depth,
             std::vector<std::string>& out) const {
    auto emit = [&](const std::string& field, std::optional<int> label) {
      for (std::string& l :
           fixedform::render_statement(field, label, 2 * depth)) {
        out.push_back(std::move(l));
      }
    };
    auto body = [&](const std::vector<Statement>& stmts) {
      for (const Statement& c : stmts) lines(c, depth + 1, out);
    };

    if (const auto* c = s.as<Comment>()) {
      out.push_back(comment_line(*c));
      return;
    }
    if (const auto* inc = s.as<Include>(); inc && inc->directive) {
      out.push_back(head(s));
      return;
    }
    if (const auto* o = s.as<Opaque>()) {
      emit_opaque(o->raw_text, s.label, out);
      return;
    }
    bool annotated = style_ == Style::kFortran &&
                     (s.as<EsopeSegmentDefinition>() ||
                      s.as<EsopePointerDeclaration>() ||
                      s.as<EsopeSegmentInstruction>());
    if (annotated) {
      out.push_back(head(s));
    } else {
      emit(head(s), s.label);
    }

    if (const auto* b = s.as<IfBlock>()) {
      body(b->then_body);
      for (const ElseIfBlock& e : b->elseifs) {
        emit("ELSE IF (" + expr(e.cond) + ") THEN", std::nullopt);
        body(e.body);
      }
      if (b->else_body) {
        emit("ELSE", std::nullopt);
        body(*b->else_body);
      }
      emit("END IF", std::nullopt);
    } else if (const auto* d = s.as<Do>()) {
      body(d->body);
      if (!d->target_label) emit("END DO", std::nullopt);
    } else if (const auto* seg = s.as<EsopeSegmentDefinition>()) {
      body(seg->members);
      if (style_ == Style::kFortran) {
        out.push_back(annotation("end segment"));
      } else {
        emit("END SEGMENT", std::nullopt);
      }
    }
  }

  void unit(const ProgramUnit& u, std::vector<std::string>& out) const {
    for (const Statement& s : u.leading_comments) lines(s, 0, out);
    if (u.has_header) {
      std::string h;
      switch (u.kind) {
        case UnitKind::kMainProgram:
          h = "PROGRAM " + u.name;
          break;
        case UnitKind::kSubroutine:
        case UnitKind::kFunction: {
          if (u.kind == UnitKind::kFunction && u.result_type) {
            h = type(*u.result_type) + " ";
          }
          h += u.kind == UnitKind::kSubroutine ? "SUBROUTINE " : "FUNCTION ";
          h += u.name + "(";
          for (std::size_t i = 0; i < u.params.size(); ++i) {
            if (i > 0) h += ", ";
            h += u.params[i];
          }
          h += ")";
          break;
        }
        case UnitKind::kFragment:
          break;
      }
      if (!h.empty()) {
        for (std::string& l : fixedform::render_statement(h, std::nullopt)) {
          out.push_back(std::move(l));
        }
      }
    }
    for (const Statement& s : u.body) lines(s, 0, out);
  }

 private:
  std::string comment_line(const Comment& c) const {
    return std::string(1, c.is_annotation ? 'c' : 'C') + c.text;
  }

  // Opaque text is re-emitted as it was, without indentation.
  void emit_opaque(const std::string& raw, std::optional<int> label,
                   std::vector<std::string>& out) const {
    for (std::string& l : fixedform::render_statement(raw, label)) {
      out.push_back(std::move(l));
    }
  }

  std::string type(const TypeSpec& t) const {
    std::string out(base_type_keyword(t.base));
    if (t.length) out += "*" + std::to_string(*t.length);
    return out;
  }

  std::string entities(const std::vector<Entity>& list_) const {
    std::string out;
    for (std::size_t i = 0; i < list_.size(); ++i) {
      if (i > 0) out += ", ";
      out += list_[i].name;
      if (!list_[i].dims.empty()) out += "(" + list(list_[i].dims) + ")";
    }
    return out;
  }

  std::string io(std::string_view keyword, const std::vector<Expr>& control,
                 const std::vector<Expr>& items) const {
    std::string out = std::string(keyword) + " (" + list(control) + ")";
    if (!items.empty()) out += " " + list(items);
    return out;
  }

  std::string operand(const Expr& e, int min_precedence) const {
    std::string s = expr(e);
    return precedence(e) < min_precedence ? "(" + s + ")" : s;
  }

  Style style_;
};

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out.push_back('\n');
  }
  return out;
}

std::string emit(const Ast& ast, Style style) {
  Emitter e(style);
  std::vector<std::string> out;
  for (const ProgramUnit& u : ast.units) e.unit(u, out);
  for (const Statement& s : ast.trailing_comments) e.lines(s, 0, out);
  return join(out);
}

}  // namespace

std::string emit_esope(const Ast& ast) { return emit(ast, Style::kEsope); }

std::string emit_fortran(const Ast& ast) { return emit(ast, Style::kFortran); }

std::string expr_text(const Expr& expr, Style style) {
  return Emitter(style).expr(expr);
}

std::string statement_text(const Statement& stmt, Style style) {
  return Emitter(style).head(stmt);
}

std::vector<std::string> statement_lines(const Statement& stmt, Style style) {
  std::vector<std::string> out;
  Emitter(style).lines(stmt, 0, out);
  return out;
}

}  // namespace esope::emitter

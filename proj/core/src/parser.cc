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

#include "esope/parser.h"

#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "esope/fixedform.h"
#include "esope/island.h"
#include "esope/lexer.h"
#include "esope/text.h"

namespace esope::parser {

namespace {

using ast::Expr;
using ast::Statement;
using lexer::Token;
using lexer::TokenKind;

struct UnitHeader {
  ast::UnitKind kind = ast::UnitKind::kMainProgram;
  std::string name;
  std::vector<std::string> params;
  std::optional<ast::TypeSpec> result_type;
};
struct IfThen {
  Expr cond;
};
struct ElseIf {
  Expr cond;
};
struct Else {};
struct EndIf {};
struct EndDo {};

using Line =
    std::variant<Statement::Node, UnitHeader, IfThen, ElseIf, Else, EndIf, EndDo>;

struct Context {
  bool in_declarations = true;
  std::set<std::string> arrays;  // lowercase
};

bool is_executable(const Statement::Node& node) {
  return std::holds_alternative<ast::Assignment>(node) ||
         std::holds_alternative<ast::Call>(node) ||
         std::holds_alternative<ast::IfLogical>(node) ||
         std::holds_alternative<ast::IfBlock>(node) ||
         std::holds_alternative<ast::Do>(node) ||
         std::holds_alternative<ast::Goto>(node) ||
         std::holds_alternative<ast::Continue>(node) ||
         std::holds_alternative<ast::Write>(node) ||
         std::holds_alternative<ast::Read>(node) ||
         std::holds_alternative<ast::Print>(node) ||
         std::holds_alternative<ast::Return>(node) ||
         std::holds_alternative<ast::Stop>(node);
}

std::optional<ast::BaseType> base_type(std::string_view word) {
  std::string w = text::upper(word);
  if (w == "INTEGER") return ast::BaseType::kInteger;
  if (w == "REAL") return ast::BaseType::kReal;
  if (w == "LOGICAL") return ast::BaseType::kLogical;
  if (w == "CHARACTER") return ast::BaseType::kCharacter;
  if (w == "DOUBLEPRECISION") return ast::BaseType::kDoublePrecision;
  if (w == "COMPLEX") return ast::BaseType::kComplex;
  return std::nullopt;
}

std::string unescape(std::string_view lexeme) {
  char quote = lexeme.front();
  std::string out;
  for (std::size_t i = 1; i + 1 < lexeme.size(); ++i) {
    out.push_back(lexeme[i]);
    if (lexeme[i] == quote) ++i;
  }
  return out;
}

class StatementParser {
 public:
  StatementParser(std::vector<Token> tokens, const Context& context,
                  SourceSpan whole)
      : toks_(std::move(tokens)), context_(context), whole_(whole) {}

  Line parse() {
    Line line = statement();
    if (!done()) fail("unexpected '" + peek().lexeme + "'");
    return line;
  }

  Expr expression_only() {
    Expr e = expr();
    if (!done()) fail("unexpected '" + peek().lexeme + "'");
    return e;
  }

 private:
  // -- token access ---------------------------------------------------------

  bool done() const { return pos_ >= toks_.size(); }
  const Token& peek(std::size_t ahead = 0) const {
    static const Token kEnd{TokenKind::kPunct, "", {}};
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : kEnd;
  }
  const Token& next() {
    if (done()) fail("unexpected end of statement");
    return toks_[pos_++];
  }
  SourceSpan last_span() const {
    return pos_ > 0 ? toks_[pos_ - 1].span : whole_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    SourceSpan span = done() ? (toks_.empty() ? whole_ : toks_.back().span)
                             : toks_[pos_].span;
    throw Error(ErrorCode::kSyntax, message, span);
  }

  bool at_punct(char c) const { return !done() && peek().is_punct(c); }
  bool at_op(std::string_view op) const {
    return !done() && peek().kind == TokenKind::kArithOp && peek().lexeme == op;
  }
  bool at_keyword(std::string_view kw) const {
    return !done() && peek().kind == TokenKind::kKeyword && peek().lexeme == kw;
  }
  bool at_dot_op(std::string_view word) const {
    if (done() || peek().kind != TokenKind::kLogicalOp) return false;
    const std::string& l = peek().lexeme;
    return text::iequals(std::string_view(l).substr(1, l.size() - 2), word);
  }
  bool accept_punct(char c) {
    if (!at_punct(c)) return false;
    ++pos_;
    return true;
  }
  const Token& expect_punct(char c) {
    if (!at_punct(c)) fail(std::string("expected '") + c + "'");
    return next();
  }
  std::string identifier() {
    if (done() || peek().kind != TokenKind::kIdentifier) {
      fail("expected a name");
    }
    return next().lexeme;
  }
  int integer() {
    if (done() || peek().kind != TokenKind::kIntLiteral) {
      fail("expected an integer");
    }
    const Token& t = next();
    if (t.lexeme.size() > 9) fail("integer too large");
    return std::stoi(t.lexeme);
  }

  // -- expressions ----------------------------------------------------------

  static Expr binary(ast::BinaryOp op, Expr lhs, Expr rhs) {
    SourceSpan span = SourceSpan::merge(lhs.span, rhs.span);
    return Expr{ast::Binary{op, std::move(lhs), std::move(rhs)}, span};
  }

  static Expr unary(ast::UnaryOp op, const SourceSpan& op_span, Expr operand) {
    SourceSpan span = SourceSpan::merge(op_span, operand.span);
    return Expr{ast::Unary{op, std::move(operand)}, span};
  }

  Expr expr() {
    Expr lhs = disjunction();
    while (at_dot_op("eqv") || at_dot_op("neqv")) {
      auto op = at_dot_op("eqv") ? ast::BinaryOp::kEqv : ast::BinaryOp::kNeqv;
      ++pos_;
      lhs = binary(op, std::move(lhs), disjunction());
    }
    return lhs;
  }

  Expr disjunction() {
    Expr lhs = conjunction();
    while (at_dot_op("or")) {
      ++pos_;
      lhs = binary(ast::BinaryOp::kOr, std::move(lhs), conjunction());
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = negation();
    while (at_dot_op("and")) {
      ++pos_;
      lhs = binary(ast::BinaryOp::kAnd, std::move(lhs), negation());
    }
    return lhs;
  }

  Expr negation() {
    if (at_dot_op("not")) {
      SourceSpan op = next().span;
      return unary(ast::UnaryOp::kNot, op, negation());
    }
    return relational();
  }

  Expr relational() {
    static constexpr std::pair<std::string_view, ast::BinaryOp> kOps[] = {
        {"lt", ast::BinaryOp::kLt}, {"le", ast::BinaryOp::kLe},
        {"gt", ast::BinaryOp::kGt}, {"ge", ast::BinaryOp::kGe},
        {"eq", ast::BinaryOp::kEq}, {"ne", ast::BinaryOp::kNe}};
    Expr lhs = concatenation();
    for (const auto& [word, op] : kOps) {
      if (at_dot_op(word)) {
        ++pos_;
        return binary(op, std::move(lhs), concatenation());
      }
    }
    return lhs;
  }

  Expr concatenation() {
    Expr lhs = additive();
    while (at_op("//")) {
      ++pos_;
      lhs = binary(ast::BinaryOp::kConcat, std::move(lhs), additive());
    }
    return lhs;
  }

  Expr additive() {
    Expr lhs = Expr{ast::Ident{}, {}};
    if (at_op("+") || at_op("-")) {
      const Token& sign = next();
      auto op = sign.lexeme == "+" ? ast::UnaryOp::kPlus : ast::UnaryOp::kMinus;
      lhs = unary(op, sign.span, term());
    } else {
      lhs = term();
    }
    while (at_op("+") || at_op("-")) {
      auto op = next().lexeme == "+" ? ast::BinaryOp::kAdd : ast::BinaryOp::kSub;
      lhs = binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = power();
    while (at_op("*") || at_op("/")) {
      auto op = next().lexeme == "*" ? ast::BinaryOp::kMul : ast::BinaryOp::kDiv;
      lhs = binary(op, std::move(lhs), power());
    }
    return lhs;
  }

  Expr power() {
    Expr base = primary();
    if (!at_op("**")) return base;
    ++pos_;
    Expr exponent = Expr{ast::Ident{}, {}};
    if (at_op("+") || at_op("-")) {
      const Token& sign = next();
      auto op = sign.lexeme == "+" ? ast::UnaryOp::kPlus : ast::UnaryOp::kMinus;
      exponent = unary(op, sign.span, power());
    } else {
      exponent = power();
    }
    return binary(ast::BinaryOp::kPow, std::move(base), std::move(exponent));
  }

  Expr primary() {
    if (done()) fail("expected an expression");
    const Token& t = next();
    switch (t.kind) {
      case TokenKind::kIntLiteral:
        return Expr{ast::IntLit{t.lexeme}, t.span};
      case TokenKind::kRealLiteral:
        return Expr{ast::RealLit{t.lexeme}, t.span};
      case TokenKind::kStringLiteral:
        return Expr{ast::StringLit{unescape(t.lexeme), t.lexeme.front()},
                    t.span};
      case TokenKind::kLogicalConst:
        return Expr{ast::LogicalLit{text::iequals(t.lexeme, ".true.")}, t.span};
      case TokenKind::kIdentifier: {
        Expr e{ast::Ident{t.lexeme}, t.span};
        if (at_punct('(')) {
          auto [args, close] = arg_list();
          e = Expr{ast::CallOrRef{t.lexeme, std::move(args)},
                   SourceSpan::merge(t.span, close)};
        }
        while (at_punct('(')) {
          auto [args, close] = arg_list();
          SourceSpan span = SourceSpan::merge(e.span, close);
          e = Expr{ast::Subscript{std::move(e), std::move(args)}, span};
        }
        return e;
      }
      case TokenKind::kPunct:
        if (t.is_punct('(')) {
          SourceSpan open = t.span;
          Expr inner = expr();
          SourceSpan close = expect_punct(')').span;
          return Expr{ast::Paren{std::move(inner)},
                      SourceSpan::merge(open, close)};
        }
        break;
      default:
        break;
    }
    --pos_;
    fail("expected an expression, found '" + t.lexeme + "'");
  }

  bool star_arg() const {
    return at_op("*") && (peek(1).is_punct(',') || peek(1).is_punct(')'));
  }

  // An argument value: `*` or an expression.
  Expr value() {
    if (star_arg()) return Expr{ast::Star{}, next().span};
    return expr();
  }

  Expr argument() {
    if (peek().kind == TokenKind::kIdentifier && peek(1).is_punct('=')) {
      const Token& name = next();
      ++pos_;
      Expr v = value();
      SourceSpan span = SourceSpan::merge(name.span, v.span);
      return Expr{ast::NamedArg{name.lexeme, std::move(v)}, span};
    }
    std::optional<Expr> lower;
    if (!at_punct(':')) {
      lower = value();
      if (!at_punct(':')) return std::move(*lower);
    }
    SourceSpan colon = next().span;
    std::optional<Expr> upper;
    if (!at_punct(',') && !at_punct(')')) upper = value();
    ast::Range range;
    SourceSpan span = colon;
    if (lower) {
      span = SourceSpan::merge(lower->span, span);
      range.lower = std::move(*lower);
    }
    if (upper) {
      span = SourceSpan::merge(span, upper->span);
      range.upper = std::move(*upper);
    }
    return Expr{std::move(range), span};
  }

  // `( [arg {, arg}] )`; returns the arguments and the span of `)`.
  std::pair<std::vector<Expr>, SourceSpan> arg_list() {
    expect_punct('(');
    std::vector<Expr> args;
    if (!at_punct(')')) {
      do {
        args.push_back(argument());
      } while (accept_punct(','));
    }
    SourceSpan close = expect_punct(')').span;
    return {std::move(args), close};
  }

  // -- statements -----------------------------------------------------------

  Line statement() {
    if (done()) fail("empty statement");
    if (peek().kind == TokenKind::kIdentifier) return assignment();
    if (peek().kind != TokenKind::kKeyword) {
      fail("unexpected '" + peek().lexeme + "'");
    }
    std::string kw = next().lexeme;

    if (kw == "PROGRAM") return UnitHeader{ast::UnitKind::kMainProgram,
                                           identifier(), {}, std::nullopt};
    if (kw == "SUBROUTINE") return header(ast::UnitKind::kSubroutine, {});
    if (kw == "FUNCTION") return header(ast::UnitKind::kFunction, {});
    if (auto base = base_type(kw)) {
      ast::TypeSpec spec{*base, length()};
      if (at_keyword("FUNCTION")) {
        ++pos_;
        return header(ast::UnitKind::kFunction, spec);
      }
      return node(ast::TypeDeclaration{spec, entities()});
    }
    if (kw == "IMPLICIT") return node(implicit());
    if (kw == "COMMON") return node(common());
    if (kw == "EQUIVALENCE") return node(equivalence());
    if (kw == "PARAMETER") return node(parameter());
    if (kw == "DIMENSION") return node(ast::Dimension{entities()});
    if (kw == "CALL") {
      ast::Call call{identifier(), {}, false};
      if (at_punct('(')) {
        call.args = arg_list().first;
        call.parens = true;
      }
      return node(std::move(call));
    }
    if (kw == "IF") return if_statement();
    if (kw == "ELSEIF") {
      expect_punct('(');
      Expr cond = expr();
      expect_punct(')');
      if (!at_keyword("THEN")) fail("expected THEN");
      ++pos_;
      return ElseIf{std::move(cond)};
    }
    if (kw == "ELSE") return Else{};
    if (kw == "ENDIF") return EndIf{};
    if (kw == "ENDDO") return EndDo{};
    if (kw == "END") return node(ast::End{});
    if (kw == "DO") return node(do_statement());
    if (kw == "GOTO") return node(ast::Goto{integer()});
    if (kw == "CONTINUE") return node(ast::Continue{});
    if (kw == "RETURN") return node(ast::Return{});
    if (kw == "STOP") {
      ast::Stop stop;
      if (!done()) stop.code = primary();
      return node(std::move(stop));
    }
    if (kw == "WRITE") {
      auto [control, items] = io_statement();
      return node(ast::Write{std::move(control), std::move(items)});
    }
    if (kw == "READ") {
      auto [control, items] = io_statement();
      return node(ast::Read{std::move(control), std::move(items)});
    }
    if (kw == "PRINT") {
      ast::Print print{value(), {}};
      while (accept_punct(',')) print.items.push_back(expr());
      return node(std::move(print));
    }
    if (kw == "INCLUDE") {
      if (peek().kind != TokenKind::kStringLiteral) fail("expected a path");
      return node(ast::Include{unescape(next().lexeme), false});
    }
    --pos_;
    fail(kw + " statements are not supported");
  }

  static Line node(Statement::Node n) { return Line{std::move(n)}; }

  Line header(ast::UnitKind kind, std::optional<ast::TypeSpec> result) {
    UnitHeader h{kind, identifier(), {}, std::move(result)};
    if (accept_punct('(')) {
      if (!at_punct(')')) {
        do {
          h.params.push_back(identifier());
        } while (accept_punct(','));
      }
      expect_punct(')');
    } else if (kind == ast::UnitKind::kFunction) {
      fail("expected '('");
    }
    return h;
  }

  std::optional<int> length() {
    if (!at_op("*")) return std::nullopt;
    ++pos_;
    return integer();
  }

  std::vector<ast::Entity> entities() {
    std::vector<ast::Entity> out;
    do {
      ast::Entity e;
      SourceSpan start = peek().span;
      e.name = identifier();
      if (at_punct('(')) e.dims = arg_list().first;
      if (at_op("*")) fail("per-entity lengths are not supported");
      e.span = SourceSpan::merge(start, last_span());
      out.push_back(std::move(e));
    } while (accept_punct(','));
    return out;
  }

  char letter() {
    std::string name = identifier();
    if (name.size() != 1) fail("expected a letter");
    return text::to_lower(name[0]);
  }

  ast::Implicit implicit() {
    ast::Implicit imp;
    if (at_keyword("NONE")) {
      ++pos_;
      return imp;
    }
    do {
      if (done()) fail("expected a type");
      const Token& t = next();
      std::optional<ast::BaseType> base;
      if (t.kind == TokenKind::kKeyword || t.kind == TokenKind::kIdentifier) {
        base = base_type(t.lexeme);
      }
      if (!base) fail("expected a type");
      ast::ImplicitRule rule{{*base, length()}, {}};
      expect_punct('(');
      do {
        ast::LetterRange r;
        r.first = r.last = letter();
        if (at_op("-")) {
          ++pos_;
          r.last = letter();
        }
        rule.ranges.push_back(r);
      } while (accept_punct(','));
      expect_punct(')');
      imp.rules.push_back(std::move(rule));
    } while (accept_punct(','));
    return imp;
  }

  ast::Common common() {
    ast::Common c;
    while (!done()) {
      ast::CommonBlock block;
      if (at_op("//")) {
        ++pos_;
      } else if (at_op("/")) {
        ++pos_;
        block.name = identifier();
        if (!at_op("/")) fail("expected '/'");
        ++pos_;
      } else if (!c.blocks.empty()) {
        fail("expected '/'");
      }
      while (true) {
        block.entities.push_back(entities_one());
        if (!accept_punct(',')) break;
        if (at_op("/") || at_op("//")) break;
      }
      c.blocks.push_back(std::move(block));
    }
    if (c.blocks.empty()) fail("empty COMMON");
    return c;
  }

  ast::Entity entities_one() {
    ast::Entity e;
    SourceSpan start = peek().span;
    e.name = identifier();
    if (at_punct('(')) e.dims = arg_list().first;
    e.span = SourceSpan::merge(start, last_span());
    return e;
  }

  ast::Equivalence equivalence() {
    ast::Equivalence eq;
    do {
      expect_punct('(');
      std::vector<Expr> group;
      do {
        group.push_back(expr());
      } while (accept_punct(','));
      expect_punct(')');
      eq.groups.push_back(std::move(group));
    } while (accept_punct(','));
    return eq;
  }

  ast::Parameter parameter() {
    ast::Parameter p;
    expect_punct('(');
    do {
      std::string name = identifier();
      expect_punct('=');
      p.bindings.push_back({std::move(name), expr()});
    } while (accept_punct(','));
    expect_punct(')');
    return p;
  }

  Line if_statement() {
    expect_punct('(');
    Expr cond = expr();
    expect_punct(')');
    if (at_keyword("THEN")) {
      ++pos_;
      return IfThen{std::move(cond)};
    }
    if (done()) fail("expected a statement after IF");
    SourceSpan start = peek().span;
    Line inner = statement();
    auto* n = std::get_if<Statement::Node>(&inner);
    if (n == nullptr || std::holds_alternative<ast::Do>(*n) ||
        std::holds_alternative<ast::End>(*n) ||
        std::holds_alternative<ast::IfLogical>(*n)) {
      fail("statement not allowed in a logical IF");
    }
    Statement then{std::nullopt, SourceSpan::merge(start, last_span()),
                   std::move(*n)};
    return node(ast::IfLogical{std::move(cond), std::move(then)});
  }

  ast::Do do_statement() {
    ast::Do d{std::nullopt, "", Expr{}, Expr{}, std::nullopt, {}};
    if (peek().kind == TokenKind::kIntLiteral) {
      d.target_label = integer();
      accept_punct(',');
    }
    d.var = identifier();
    expect_punct('=');
    d.from = expr();
    expect_punct(',');
    d.to = expr();
    if (accept_punct(',')) d.step = expr();
    return d;
  }

  std::pair<std::vector<Expr>, std::vector<Expr>> io_statement() {
    if (!at_punct('(')) fail("expected '('");
    std::vector<Expr> control = arg_list().first;
    if (control.empty()) fail("empty control list");
    std::vector<Expr> items;
    if (!done()) {
      do {
        items.push_back(expr());
      } while (accept_punct(','));
    }
    return {std::move(control), std::move(items)};
  }

  Line assignment() {
    Expr target = primary();
    expect_punct('=');
    Expr v = expr();
    if (auto* call = target.as<ast::CallOrRef>()) {
      bool marker_head =
          call->name == island::kDotFunction ||
          call->name == island::kSlashFunction;
      bool plain_params = true;
      for (const Expr& a : call->args) {
        plain_params = plain_params && a.as<ast::Ident>() != nullptr;
      }
      bool known_array = context_.arrays.count(text::lower(call->name)) > 0;
      if (marker_head ||
          (plain_params && context_.in_declarations && !known_array)) {
        return node(ast::StatementFunctionDef{call->name, std::move(call->args),
                                              std::move(v)});
      }
    }
    return node(ast::Assignment{std::move(target), std::move(v)});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Context& context_;
  SourceSpan whole_;
};

// Assembles parsed lines into program units and nested blocks.
class Builder {
 public:
  bool unit_open() const { return unit_.has_value(); }
  const Context& context() const { return context_; }
  Diagnostics& diagnostics() { return diags_; }

  void comment(Statement s) {
    if (unit_) {
      body().push_back(std::move(s));
    } else {
      pending_.push_back(std::move(s));
    }
  }

  void line(Line parsed, std::optional<int> label, SourceSpan span,
            const std::string& raw) {
    std::visit(
        [&](auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, Statement::Node>) {
            statement(Statement{label, span, std::move(l)});
          } else if constexpr (std::is_same_v<T, UnitHeader>) {
            open_unit(std::move(l), span);
          } else if constexpr (std::is_same_v<T, IfThen>) {
            ensure_unit();
            context_.in_declarations = false;
            ast::IfBlock block{std::move(l.cond), {}, {}, std::nullopt};
            frames_.push_back(Statement{label, span, std::move(block)});
          } else if constexpr (std::is_same_v<T, ElseIf>) {
            ast::IfBlock* block = open_if();
            if (block == nullptr) return unmatched(label, span, raw);
            block->elseifs.push_back({std::move(l.cond), {}, span});
          } else if constexpr (std::is_same_v<T, Else>) {
            ast::IfBlock* block = open_if();
            if (block == nullptr) return unmatched(label, span, raw);
            block->else_body.emplace();
          } else if constexpr (std::is_same_v<T, EndIf>) {
            if (frames_.empty() || !frames_.back().as<ast::IfBlock>()) {
              return unmatched(label, span, raw);
            }
            if (label) {
              diags_.push_back({"DroppedLabel",
                                "label on END IF is not kept", span});
            }
            close_frame(span);
          } else if constexpr (std::is_same_v<T, EndDo>) {
            const ast::Do* d =
                frames_.empty() ? nullptr : frames_.back().as<ast::Do>();
            if (d == nullptr || d->target_label) {
              return unmatched(label, span, raw);
            }
            if (label) {
              diags_.push_back({"DroppedLabel",
                                "label on END DO is not kept", span});
            }
            close_frame(span);
          }
        },
        parsed);
  }

  void opaque(std::optional<int> label, SourceSpan span, const std::string& raw,
              const Error& why) {
    diags_.push_back({std::string(error_code_name(why.code())),
                      "kept as opaque text: " + why.message(),
                      why.span().value_or(span)});
    statement(Statement{label, span, ast::Opaque{raw}});
  }

  ast::Ast finish() {
    if (!frames_.empty()) {
      throw Error(ErrorCode::kFatalStructure,
                  "block not closed at end of file", frames_.back().span);
    }
    if (unit_) {
      if (unit_->has_header) {
        diags_.push_back({"MissingEnd", "program unit has no END statement",
                          unit_->span});
      } else {
        unit_->kind = ast::UnitKind::kFragment;
      }
      close_unit();
    }
    ast_.trailing_comments = std::move(pending_);
    return std::move(ast_);
  }

 private:
  std::vector<Statement>& body() {
    if (frames_.empty()) return unit_->body;
    Statement& top = frames_.back();
    if (auto* d = top.as<ast::Do>()) return d->body;
    auto* block = top.as<ast::IfBlock>();
    if (block->else_body) return *block->else_body;
    if (!block->elseifs.empty()) return block->elseifs.back().body;
    return block->then_body;
  }

  ast::IfBlock* open_if() {
    if (frames_.empty()) return nullptr;
    auto* block = frames_.back().as<ast::IfBlock>();
    return block != nullptr && !block->else_body ? block : nullptr;
  }

  void ensure_unit() {
    if (unit_) return;
    unit_.emplace();
    unit_->has_header = false;
    unit_->body = std::move(pending_);
    pending_.clear();
    context_ = Context{};
  }

  void open_unit(UnitHeader h, SourceSpan span) {
    if (unit_) {
      throw Error(ErrorCode::kFatalStructure,
                  "program unit header before END of the previous unit", span);
    }
    unit_.emplace();
    unit_->kind = h.kind;
    unit_->name = std::move(h.name);
    unit_->params = std::move(h.params);
    unit_->result_type = h.result_type;
    unit_->has_header = true;
    unit_->leading_comments = std::move(pending_);
    unit_->span = span;
    pending_.clear();
    context_ = Context{};
  }

  void close_unit() {
    if (!unit_->body.empty()) {
      unit_->span = SourceSpan::merge(unit_->span, unit_->body.front().span);
      unit_->span = SourceSpan::merge(unit_->span, unit_->body.back().span);
    }
    ast_.units.push_back(std::move(*unit_));
    unit_.reset();
  }

  void note_declarations(const Statement& s) {
    auto remember = [&](const std::vector<ast::Entity>& list) {
      for (const ast::Entity& e : list) {
        if (!e.dims.empty()) context_.arrays.insert(text::lower(e.name));
      }
    };
    if (auto* d = s.as<ast::TypeDeclaration>()) remember(d->entities);
    if (auto* d = s.as<ast::Dimension>()) remember(d->entities);
    if (auto* c = s.as<ast::Common>()) {
      for (const ast::CommonBlock& b : c->blocks) remember(b.entities);
    }
    if (is_executable(s.node)) context_.in_declarations = false;
  }

  void statement(Statement s) {
    ensure_unit();
    note_declarations(s);
    if (s.as<ast::Do>()) {
      frames_.push_back(std::move(s));
      return;
    }
    if (s.as<ast::End>()) {
      if (!frames_.empty()) {
        throw Error(ErrorCode::kFatalStructure, "block not closed before END",
                    frames_.back().span);
      }
      unit_->body.push_back(std::move(s));
      close_unit();
      return;
    }
    std::optional<int> label = s.label;
    body().push_back(std::move(s));
    if (label) close_loops(*label);
  }

  void close_loops(int label) {
    while (!frames_.empty()) {
      const ast::Do* d = frames_.back().as<ast::Do>();
      if (d == nullptr || d->target_label != label) break;
      close_frame(d->body.empty() ? SourceSpan{} : d->body.back().span);
    }
  }

  void close_frame(SourceSpan end) {
    Statement s = std::move(frames_.back());
    frames_.pop_back();
    s.span = SourceSpan::merge(s.span, end);
    body().push_back(std::move(s));
  }

  void unmatched(std::optional<int> label, SourceSpan span,
                 const std::string& raw) {
    diags_.push_back(
        {"UnmatchedBlockEnd", "block statement has no open block", span});
    statement(Statement{label, span, ast::Opaque{raw}});
  }

  std::optional<ast::ProgramUnit> unit_;
  std::vector<Statement> frames_;
  std::vector<Statement> pending_;
  Context context_;
  Diagnostics diags_;
  ast::Ast ast_;
};

bool is_annotation(const fixedform::CommentUnit& c) {
  return text::to_lower(c.marker) == 'c' && c.text.rfind("@_", 0) == 0;
}

}  // namespace

Result parse_source(std::string_view annotated, FileId file) {
  std::vector<fixedform::PhysicalLine> lines =
      fixedform::classify_source(annotated, file);
  Builder builder;
  for (const fixedform::PhysicalLine& line : lines) {
    if (line.warning) {
      builder.diagnostics().push_back(
          {"LabelField", *line.warning,
           SourceSpan{file, line.line_no, 1, line.line_no, 5}});
    }
  }
  for (fixedform::Unit& unit : fixedform::assemble(lines)) {
    if (auto* c = std::get_if<fixedform::CommentUnit>(&unit)) {
      builder.comment(Statement{std::nullopt, c->span(),
                                ast::Comment{c->text, is_annotation(*c)}});
    } else if (auto* inc = std::get_if<fixedform::IncludeUnit>(&unit)) {
      builder.comment(
          Statement{std::nullopt, inc->span(), ast::Include{inc->path, true}});
    } else if (auto* s = std::get_if<fixedform::LogicalStatement>(&unit)) {
      std::string raw(text::rtrim(s->text));
      try {
        lexer::LexContext lc{!builder.unit_open()};
        StatementParser p(lexer::lex_statement(*s, lc), builder.context(),
                          s->span);
        builder.line(p.parse(), s->label, s->span, raw);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSyntax &&
            e.code() != ErrorCode::kUnterminatedString &&
            e.code() != ErrorCode::kIllegalCharacter) {
          throw;
        }
        builder.opaque(s->label, s->span, raw, e);
      }
    }
  }
  Result result;
  result.ast = builder.finish();
  result.diagnostics = std::move(builder.diagnostics());
  return result;
}

ast::Expr parse_expression(std::string_view text) {
  std::string wrapped = "x=" + std::string(text);
  std::vector<Token> tokens = lexer::lex_text(wrapped);
  if (tokens.size() < 3) {
    throw Error(ErrorCode::kSyntax, "expected an expression");
  }
  tokens.erase(tokens.begin(), tokens.begin() + 2);
  Context context;
  StatementParser p(std::move(tokens), context, {});
  return p.expression_only();
}

}  // namespace esope::parser

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

// Abstract syntax tree shared by the Fortran parser and the Esope recovery
// pass. A tree straight out of the parser only uses the Fortran node kinds;
// after recovery the Esope* kinds appear and the annotation comments and
// D__/S__ forms are gone. Comments are ordinary statements so they keep
// their place in every statement sequence.

#ifndef ESOPE_AST_H_
#define ESOPE_AST_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "esope/source.h"

namespace esope::ast {

// Owning pointer with value semantics, for recursive variant members.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

// ---------------------------------------------------------------------------
// Expressions

struct Expr;

enum class UnaryOp { kPlus, kMinus, kNot };

enum class BinaryOp {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
  kConcat,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAnd,
  kOr,
  kEqv,
  kNeqv,
};

struct Ident {
  std::string name;
  friend bool operator==(const Ident&, const Ident&) = default;
};

// Numeric literals keep their spelling (leading zeros, exponent letter).
struct IntLit {
  std::string text;
  friend bool operator==(const IntLit&, const IntLit&) = default;
};

struct RealLit {
  std::string text;
  friend bool operator==(const RealLit&, const RealLit&) = default;
};

struct StringLit {
  std::string value;  // unescaped content
  char quote = '\'';
  friend bool operator==(const StringLit&, const StringLit&) = default;
};

struct LogicalLit {
  bool value = false;
  friend bool operator==(const LogicalLit&, const LogicalLit&) = default;
};

// `*` as a unit / format specifier or an assumed-size bound.
struct Star {
  friend bool operator==(const Star&, const Star&) = default;
};

struct Unary {
  UnaryOp op;
  Box<Expr> operand;
  friend bool operator==(const Unary&, const Unary&) = default;
};

struct Binary {
  BinaryOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

// Explicit parentheses from the source.
struct Paren {
  Box<Expr> inner;
  friend bool operator==(const Paren&, const Paren&) = default;
};

// `name(args)`: array element or function call, undecidable without a
// symbol table.
struct CallOrRef {
  std::string name;
  std::vector<Expr> args;
  friend bool operator==(const CallOrRef&, const CallOrRef&) = default;
};

// A second argument list applied to an expression: `a(i)(1:3)` or, after
// de-Esopification, `D__(p,m)(i)`.
struct Subscript {
  Box<Expr> base;
  std::vector<Expr> args;
  friend bool operator==(const Subscript&, const Subscript&) = default;
};

// `lo:hi` in substrings and array bounds; either side may be absent.
struct Range {
  std::optional<Box<Expr>> lower;
  std::optional<Box<Expr>> upper;
  friend bool operator==(const Range&, const Range&) = default;
};

// `UNIT=6` inside an I/O control list.
struct NamedArg {
  std::string name;
  Box<Expr> value;
  friend bool operator==(const NamedArg&, const NamedArg&) = default;
};

// `pointer.attribute`
struct EsopeAttributeAccess {
  Box<Expr> pointer;
  std::string attribute;
  friend bool operator==(const EsopeAttributeAccess&,
                         const EsopeAttributeAccess&) = default;
};

// `target(/n)`
struct EsopeDimensionQuery {
  Box<Expr> target;
  int dim_index = 1;
  friend bool operator==(const EsopeDimensionQuery&,
                         const EsopeDimensionQuery&) = default;
};

struct Expr {
  using Node = std::variant<Ident, IntLit, RealLit, StringLit, LogicalLit, Star,
                            Unary, Binary, Paren, CallOrRef, Subscript, Range,
                            NamedArg, EsopeAttributeAccess, EsopeDimensionQuery>;
  Node node;
  SourceSpan span;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }

  friend bool operator==(const Expr&, const Expr&) = default;
};

// ---------------------------------------------------------------------------
// Statements

struct Statement;

enum class BaseType {
  kInteger,
  kReal,
  kLogical,
  kCharacter,
  kDoublePrecision,
  kComplex
};

struct TypeSpec {
  BaseType base = BaseType::kInteger;
  std::optional<int> length;  // `CHARACTER*40`, `INTEGER*8`
  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

struct Entity {
  std::string name;
  std::vector<Expr> dims;  // empty for a scalar
  SourceSpan span;
  friend bool operator==(const Entity&, const Entity&) = default;
};

struct TypeDeclaration {
  TypeSpec type;
  std::vector<Entity> entities;
  friend bool operator==(const TypeDeclaration&, const TypeDeclaration&) =
      default;
};

struct LetterRange {
  char first = 'a';
  char last = 'a';
  friend bool operator==(const LetterRange&, const LetterRange&) = default;
};

struct ImplicitRule {
  TypeSpec type;
  std::vector<LetterRange> ranges;
  friend bool operator==(const ImplicitRule&, const ImplicitRule&) = default;
};

// No rules means IMPLICIT NONE.
struct Implicit {
  std::vector<ImplicitRule> rules;
  friend bool operator==(const Implicit&, const Implicit&) = default;
};

struct CommonBlock {
  std::string name;  // empty for blank common
  std::vector<Entity> entities;
  friend bool operator==(const CommonBlock&, const CommonBlock&) = default;
};

struct Common {
  std::vector<CommonBlock> blocks;
  friend bool operator==(const Common&, const Common&) = default;
};

struct Equivalence {
  std::vector<std::vector<Expr>> groups;
  friend bool operator==(const Equivalence&, const Equivalence&) = default;
};

struct ParameterBinding {
  std::string name;
  Expr value;
  friend bool operator==(const ParameterBinding&, const ParameterBinding&) =
      default;
};

struct Parameter {
  std::vector<ParameterBinding> bindings;
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct Dimension {
  std::vector<Entity> entities;
  friend bool operator==(const Dimension&, const Dimension&) = default;
};

struct Assignment {
  Expr target;
  Expr value;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// `name(params) = body`. Ordinary statement functions only have Ident
// params; a D__/S__ head keeps whatever argument expressions it had.
struct StatementFunctionDef {
  std::string name;
  std::vector<Expr> params;
  Expr body;
  friend bool operator==(const StatementFunctionDef&,
                         const StatementFunctionDef&) = default;
};

struct Call {
  std::string name;
  std::vector<Expr> args;
  bool parens = false;  // `CALL F()` as opposed to `CALL F`
  friend bool operator==(const Call&, const Call&) = default;
};

struct IfLogical {
  Expr cond;
  Box<Statement> then_stmt;
  friend bool operator==(const IfLogical&, const IfLogical&) = default;
};

struct ElseIfBlock {
  Expr cond;
  std::vector<Statement> body;
  SourceSpan span;
  friend bool operator==(const ElseIfBlock&, const ElseIfBlock&) = default;
};

struct IfBlock {
  Expr cond;
  std::vector<Statement> then_body;
  std::vector<ElseIfBlock> elseifs;
  std::optional<std::vector<Statement>> else_body;
  friend bool operator==(const IfBlock&, const IfBlock&) = default;
};

// A labelled DO owns its terminal statement as the last body element; an
// unlabelled one is closed by END DO.
struct Do {
  std::optional<int> target_label;
  std::string var;
  Expr from;
  Expr to;
  std::optional<Expr> step;
  std::vector<Statement> body;
  friend bool operator==(const Do&, const Do&) = default;
};

struct Goto {
  int target = 0;
  friend bool operator==(const Goto&, const Goto&) = default;
};

struct Continue {
  friend bool operator==(const Continue&, const Continue&) = default;
};

struct Write {
  std::vector<Expr> control;
  std::vector<Expr> items;
  friend bool operator==(const Write&, const Write&) = default;
};

struct Read {
  std::vector<Expr> control;
  std::vector<Expr> items;
  friend bool operator==(const Read&, const Read&) = default;
};

struct Print {
  Expr format;
  std::vector<Expr> items;
  friend bool operator==(const Print&, const Print&) = default;
};

struct Return {
  friend bool operator==(const Return&, const Return&) = default;
};

struct Stop {
  std::optional<Expr> code;
  friend bool operator==(const Stop&, const Stop&) = default;
};

struct End {
  friend bool operator==(const End&, const End&) = default;
};

// `text` is the line without its column-1 marker; which of C, c or * it was
// is not kept.
struct Comment {
  std::string text;
  bool is_annotation = false;
  friend bool operator==(const Comment&, const Comment&) = default;
};

struct Include {
  std::string path;
  bool directive = true;  // `#include "x"` rather than `INCLUDE 'x'`
  friend bool operator==(const Include&, const Include&) = default;
};

// Anything outside the supported subset, kept as the statement field text.
struct Opaque {
  std::string raw_text;
  friend bool operator==(const Opaque&, const Opaque&) = default;
};

struct EsopeSegmentDefinition {
  std::string name;
  std::vector<Statement> members;
  friend bool operator==(const EsopeSegmentDefinition&,
                         const EsopeSegmentDefinition&) = default;
};

struct PointerBinding {
  std::string variable;
  std::string segment;
  friend bool operator==(const PointerBinding&, const PointerBinding&) =
      default;
};

struct EsopePointerDeclaration {
  std::vector<PointerBinding> bindings;
  friend bool operator==(const EsopePointerDeclaration&,
                         const EsopePointerDeclaration&) = default;
};

enum class SegmentKeyword { kSegini, kSegact, kSegadj, kSegdes, kSegprt, kSegsup };

struct EsopeSegmentInstruction {
  SegmentKeyword keyword = SegmentKeyword::kSegini;
  std::vector<std::string> pointers;
  friend bool operator==(const EsopeSegmentInstruction&,
                         const EsopeSegmentInstruction&) = default;
};

struct Statement {
  using Node =
      std::variant<TypeDeclaration, Implicit, Common, Equivalence, Parameter,
                   Dimension, Assignment, StatementFunctionDef, Call, IfLogical,
                   IfBlock, Do, Goto, Continue, Write, Read, Print, Return, Stop,
                   End, Comment, Include, Opaque, EsopeSegmentDefinition,
                   EsopePointerDeclaration, EsopeSegmentInstruction>;
  std::optional<int> label;
  SourceSpan span;
  Node node;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }

  friend bool operator==(const Statement&, const Statement&) = default;
};

// ---------------------------------------------------------------------------
// Program units

// kFragment is a headless statement sequence with no END, as found in
// include files.
enum class UnitKind { kMainProgram, kSubroutine, kFunction, kFragment };

struct ProgramUnit {
  UnitKind kind = UnitKind::kMainProgram;
  std::string name;
  std::vector<std::string> params;
  std::optional<TypeSpec> result_type;  // `INTEGER FUNCTION F(X)`
  bool has_header = true;
  std::vector<Statement> leading_comments;
  std::vector<Statement> body;
  SourceSpan span;
  friend bool operator==(const ProgramUnit&, const ProgramUnit&) = default;
};

struct Ast {
  std::vector<ProgramUnit> units;
  std::vector<Statement> trailing_comments;
  friend bool operator==(const Ast&, const Ast&) = default;
};

// ---------------------------------------------------------------------------
// Names used by the emitter and the JSON schema.

std::string_view binary_op_spelling(BinaryOp op);  // "+", ".LT.", ...
std::string_view base_type_keyword(BaseType type);  // "INTEGER", ...
std::string_view segment_keyword_name(SegmentKeyword keyword);  // "segini"
std::optional<SegmentKeyword> parse_segment_keyword(std::string_view word);
std::string_view unit_kind_name(UnitKind kind);  // "subroutine"

// ---------------------------------------------------------------------------
// Traversal. Visitors see every node of the given kind, outer nodes before
// their children; nested statement bodies are included.

void for_each_statement(const Ast& ast,
                        const std::function<void(const Statement&)>& fn);
void for_each_expr(const Ast& ast, const std::function<void(const Expr&)>& fn);

// Children first, so a rewrite of an outer node sees rewritten children.
void transform_exprs(Statement& stmt, const std::function<void(Expr&)>& fn);

// Direct child expressions of a statement, not descending into nested
// statements.
std::vector<const Expr*> statement_exprs(const Statement& stmt);

// Copy of `ast` with every span cleared, for structure-only comparison.
Ast without_spans(Ast ast);

}  // namespace esope::ast

#endif  // ESOPE_AST_H_

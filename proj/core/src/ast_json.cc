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

#include "esope/ast_json.h"

#include <array>
#include <string>
#include <type_traits>
#include <utility>

#include "esope/text.h"

namespace esope::ast_json {

namespace {

using namespace ast;  // NOLINT

template <typename E, std::size_t N>
struct Names {
  std::array<std::pair<E, std::string_view>, N> entries;

  std::string_view name(E e) const {
    for (const auto& [k, v] : entries) {
      if (k == e) return v;
    }
    return "?";
  }
  std::optional<E> find(std::string_view s) const {
    for (const auto& [k, v] : entries) {
      if (v == s) return k;
    }
    return std::nullopt;
  }
};

template <typename E, typename... P>
constexpr auto names(P... p) {
  return Names<E, sizeof...(P)>{{p...}};
}

constexpr auto kUnaryOps = names<UnaryOp>(
    std::pair{UnaryOp::kPlus, std::string_view("plus")},
    std::pair{UnaryOp::kMinus, std::string_view("minus")},
    std::pair{UnaryOp::kNot, std::string_view("not")});

constexpr auto kBinaryOps = names<BinaryOp>(
    std::pair{BinaryOp::kAdd, std::string_view("add")},
    std::pair{BinaryOp::kSub, std::string_view("sub")},
    std::pair{BinaryOp::kMul, std::string_view("mul")},
    std::pair{BinaryOp::kDiv, std::string_view("div")},
    std::pair{BinaryOp::kPow, std::string_view("pow")},
    std::pair{BinaryOp::kConcat, std::string_view("concat")},
    std::pair{BinaryOp::kLt, std::string_view("lt")},
    std::pair{BinaryOp::kLe, std::string_view("le")},
    std::pair{BinaryOp::kGt, std::string_view("gt")},
    std::pair{BinaryOp::kGe, std::string_view("ge")},
    std::pair{BinaryOp::kEq, std::string_view("eq")},
    std::pair{BinaryOp::kNe, std::string_view("ne")},
    std::pair{BinaryOp::kAnd, std::string_view("and")},
    std::pair{BinaryOp::kOr, std::string_view("or")},
    std::pair{BinaryOp::kEqv, std::string_view("eqv")},
    std::pair{BinaryOp::kNeqv, std::string_view("neqv")});

constexpr auto kBaseTypes = names<BaseType>(
    std::pair{BaseType::kInteger, std::string_view("integer")},
    std::pair{BaseType::kReal, std::string_view("real")},
    std::pair{BaseType::kLogical, std::string_view("logical")},
    std::pair{BaseType::kCharacter, std::string_view("character")},
    std::pair{BaseType::kDoublePrecision, std::string_view("doubleprecision")},
    std::pair{BaseType::kComplex, std::string_view("complex")});

constexpr auto kUnitKinds = names<UnitKind>(
    std::pair{UnitKind::kMainProgram, std::string_view("main_program")},
    std::pair{UnitKind::kSubroutine, std::string_view("subroutine")},
    std::pair{UnitKind::kFunction, std::string_view("function")},
    std::pair{UnitKind::kFragment, std::string_view("fragment")});

// -- writing -----------------------------------------------------------------

Json node(std::string_view kind, const SourceSpan& span) {
  Json j = Json::object();
  j["kind"] = kind;
  j["span"] = to_json(span);
  return j;
}

template <typename T>
Json list(const std::vector<T>& items) {
  Json a = Json::array();
  for (const T& i : items) a.push_back(to_json(i));
  return a;
}

Json type_json(const TypeSpec& t) {
  Json j = Json::object();
  j["base"] = kBaseTypes.name(t.base);
  j["length"] = t.length ? Json(*t.length) : Json(nullptr);
  return j;
}

Json entities_json(const std::vector<Entity>& entities) {
  Json a = Json::array();
  for (const Entity& e : entities) {
    Json j = Json::object();
    j["name"] = e.name;
    j["span"] = to_json(e.span);
    j["dims"] = list(e.dims);
    a.push_back(std::move(j));
  }
  return a;
}

Json optional_expr(const std::optional<Box<Expr>>& e) {
  return e ? to_json(**e) : Json(nullptr);
}

// -- reading -----------------------------------------------------------------

class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kSchemaViolation, path_ + ": " + message);
  }

  const std::string& path() const { return path_; }
  const Json& raw() const { return j_; }

  Reader operator[](std::string_view key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(std::string(key));
    if (it == j_.end()) {
      Reader(j_, path_ + "." + std::string(key)).fail("missing field");
    }
    return Reader(*it, path_ + "." + std::string(key));
  }

  bool is_null() const { return j_.is_null(); }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  int integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<int>();
  }
  bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }
  std::optional<int> opt_integer() const {
    if (is_null()) return std::nullopt;
    return integer();
  }

  template <typename F>
  auto each(F&& fn) const {
    if (!j_.is_array()) fail("expected an array");
    using T = std::invoke_result_t<F, Reader>;
    std::vector<T> out;
    for (std::size_t i = 0; i < j_.size(); ++i) {
      out.push_back(fn(Reader(j_[i], path_ + "[" + std::to_string(i) + "]")));
    }
    return out;
  }

  template <typename E, std::size_t N>
  E enum_of(const Names<E, N>& table) const {
    std::string s = str();
    std::optional<E> e = table.find(s);
    if (!e) fail("unknown value '" + s + "'");
    return *e;
  }

 private:
  const Json& j_;
  std::string path_;
};

SourceSpan read_span(const Reader& r) {
  SourceSpan s;
  int file = r["file"].integer();
  if (file < 0) r["file"].fail("negative file id");
  s.file.value = static_cast<std::uint32_t>(file);
  s.start_line = r["sl"].integer();
  s.start_col = r["sc"].integer();
  s.end_line = r["el"].integer();
  s.end_col = r["ec"].integer();
  return s;
}

Expr read_expr(const Reader& r);
Statement read_statement(const Reader& r);

std::vector<Expr> read_exprs(const Reader& r) {
  return r.each([](const Reader& e) { return read_expr(e); });
}

std::vector<Statement> read_statements(const Reader& r) {
  return r.each([](const Reader& e) { return read_statement(e); });
}

std::optional<Box<Expr>> read_optional_expr(const Reader& r) {
  if (r.is_null()) return std::nullopt;
  return Box<Expr>(read_expr(r));
}

std::string read_identifier(const Reader& r) {
  std::string s = r.str();
  if (s.empty()) r.fail("empty identifier");
  return s;
}

Expr read_expr(const Reader& r) {
  std::string kind = r["kind"].str();
  Expr e;
  e.span = read_span(r["span"]);
  if (kind == "ident") {
    e.node = Ident{read_identifier(r["name"])};
  } else if (kind == "int_lit") {
    e.node = IntLit{r["text"].str()};
  } else if (kind == "real_lit") {
    e.node = RealLit{r["text"].str()};
  } else if (kind == "string_lit") {
    std::string quote = r["quote"].str();
    if (quote != "'" && quote != "\"") r["quote"].fail("expected ' or \"");
    e.node = StringLit{r["value"].str(), quote[0]};
  } else if (kind == "logical_lit") {
    e.node = LogicalLit{r["value"].boolean()};
  } else if (kind == "star") {
    e.node = Star{};
  } else if (kind == "unary") {
    e.node = Unary{r["op"].enum_of(kUnaryOps), read_expr(r["operand"])};
  } else if (kind == "binary") {
    e.node = Binary{r["op"].enum_of(kBinaryOps), read_expr(r["lhs"]),
                    read_expr(r["rhs"])};
  } else if (kind == "paren") {
    e.node = Paren{read_expr(r["inner"])};
  } else if (kind == "call_or_ref") {
    e.node = CallOrRef{read_identifier(r["name"]), read_exprs(r["args"])};
  } else if (kind == "subscript") {
    e.node = Subscript{read_expr(r["base"]), read_exprs(r["args"])};
  } else if (kind == "range") {
    e.node = Range{read_optional_expr(r["lower"]),
                   read_optional_expr(r["upper"])};
  } else if (kind == "named_arg") {
    e.node = NamedArg{read_identifier(r["name"]), read_expr(r["value"])};
  } else if (kind == "esope_attribute_access") {
    e.node = EsopeAttributeAccess{read_expr(r["pointer"]),
                                  read_identifier(r["attribute"])};
  } else if (kind == "esope_dimension_query") {
    int n = r["dim_index"].integer();
    if (n < 1) r["dim_index"].fail("dimension index must be positive");
    e.node = EsopeDimensionQuery{read_expr(r["target"]), n};
  } else {
    r["kind"].fail("unknown expression kind '" + kind + "'");
  }
  return e;
}

TypeSpec read_type(const Reader& r) {
  return TypeSpec{r["base"].enum_of(kBaseTypes), r["length"].opt_integer()};
}

std::vector<Entity> read_entities(const Reader& r) {
  return r.each([](const Reader& e) {
    return Entity{read_identifier(e["name"]), read_exprs(e["dims"]),
                  read_span(e["span"])};
  });
}

char read_letter(const Reader& r) {
  std::string s = r.str();
  if (s.size() != 1 || !text::is_letter(s[0])) r.fail("expected one letter");
  return s[0];
}

Statement read_statement(const Reader& r) {
  std::string kind = r["kind"].str();
  Statement s;
  s.span = read_span(r["span"]);
  s.label = r["label"].opt_integer();
  if (kind == "type_declaration") {
    s.node = TypeDeclaration{read_type(r["type"]), read_entities(r["entities"])};
  } else if (kind == "implicit") {
    s.node = Implicit{r["rules"].each([](const Reader& rule) {
      return ImplicitRule{
          read_type(rule["type"]), rule["ranges"].each([](const Reader& lr) {
            return LetterRange{read_letter(lr["first"]),
                               read_letter(lr["last"])};
          })};
    })};
  } else if (kind == "common") {
    s.node = Common{r["blocks"].each([](const Reader& b) {
      return CommonBlock{b["name"].str(), read_entities(b["entities"])};
    })};
  } else if (kind == "equivalence") {
    s.node = Equivalence{
        r["groups"].each([](const Reader& g) { return read_exprs(g); })};
  } else if (kind == "parameter") {
    s.node = Parameter{r["bindings"].each([](const Reader& b) {
      return ParameterBinding{read_identifier(b["name"]),
                              read_expr(b["value"])};
    })};
  } else if (kind == "dimension") {
    s.node = Dimension{read_entities(r["entities"])};
  } else if (kind == "assignment") {
    s.node = Assignment{read_expr(r["target"]), read_expr(r["value"])};
  } else if (kind == "statement_function_def") {
    s.node = StatementFunctionDef{read_identifier(r["name"]),
                                  read_exprs(r["params"]),
                                  read_expr(r["body"])};
  } else if (kind == "call") {
    s.node = Call{read_identifier(r["name"]), read_exprs(r["args"]),
                  r["parens"].boolean()};
  } else if (kind == "if_logical") {
    s.node = IfLogical{read_expr(r["cond"]), read_statement(r["then"])};
  } else if (kind == "if_block") {
    IfBlock b{read_expr(r["cond"]), read_statements(r["then_body"]), {},
              std::nullopt};
    b.elseifs = r["elseifs"].each([](const Reader& e) {
      return ElseIfBlock{read_expr(e["cond"]), read_statements(e["body"]),
                         read_span(e["span"])};
    });
    if (!r["else_body"].is_null()) b.else_body = read_statements(r["else_body"]);
    s.node = std::move(b);
  } else if (kind == "do") {
    Do d{r["target_label"].opt_integer(), read_identifier(r["var"]),
         read_expr(r["from"]), read_expr(r["to"]), std::nullopt,
         read_statements(r["body"])};
    if (!r["step"].is_null()) d.step = read_expr(r["step"]);
    s.node = std::move(d);
  } else if (kind == "goto") {
    s.node = Goto{r["target"].integer()};
  } else if (kind == "continue") {
    s.node = Continue{};
  } else if (kind == "write") {
    s.node = Write{read_exprs(r["control"]), read_exprs(r["items"])};
  } else if (kind == "read") {
    s.node = Read{read_exprs(r["control"]), read_exprs(r["items"])};
  } else if (kind == "print") {
    s.node = Print{read_expr(r["format"]), read_exprs(r["items"])};
  } else if (kind == "return") {
    s.node = Return{};
  } else if (kind == "stop") {
    Stop st;
    if (!r["code"].is_null()) st.code = read_expr(r["code"]);
    s.node = std::move(st);
  } else if (kind == "end") {
    s.node = End{};
  } else if (kind == "comment") {
    s.node = Comment{r["text"].str(), r["annotation"].boolean()};
  } else if (kind == "include") {
    s.node = Include{r["path"].str(), r["directive"].boolean()};
  } else if (kind == "opaque") {
    s.node = Opaque{r["raw_text"].str()};
  } else if (kind == "esope_segment_definition") {
    s.node = EsopeSegmentDefinition{read_identifier(r["name"]),
                                    read_statements(r["members"])};
  } else if (kind == "esope_pointer_declaration") {
    s.node = EsopePointerDeclaration{r["bindings"].each([](const Reader& b) {
      return PointerBinding{read_identifier(b["variable"]),
                            read_identifier(b["segment"])};
    })};
  } else if (kind == "esope_segment_instruction") {
    std::string word = r["keyword"].str();
    std::optional<SegmentKeyword> k = parse_segment_keyword(word);
    if (!k) r["keyword"].fail("unknown segment keyword '" + word + "'");
    s.node = EsopeSegmentInstruction{
        *k, r["pointers"].each([](const Reader& p) {
          return read_identifier(p);
        })};
  } else {
    r["kind"].fail("unknown statement kind '" + kind + "'");
  }
  return s;
}

ProgramUnit read_unit(const Reader& r) {
  ProgramUnit u;
  u.kind = r["kind"].enum_of(kUnitKinds);
  u.span = read_span(r["span"]);
  u.name = r["name"].str();
  u.params = r["params"].each([](const Reader& p) { return read_identifier(p); });
  if (!r["result_type"].is_null()) u.result_type = read_type(r["result_type"]);
  u.has_header = r["has_header"].boolean();
  u.leading_comments = read_statements(r["leading_comments"]);
  u.body = read_statements(r["body"]);
  return u;
}

}  // namespace

Json to_json(const SourceSpan& span) {
  Json j = Json::object();
  j["file"] = span.file.value;
  j["sl"] = span.start_line;
  j["sc"] = span.start_col;
  j["el"] = span.end_line;
  j["ec"] = span.end_col;
  return j;
}

Json to_json(const Expr& expr) {
  return std::visit(
      [&](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        const SourceSpan& sp = expr.span;
        if constexpr (std::is_same_v<T, Ident>) {
          Json j = node("ident", sp);
          j["name"] = n.name;
          return j;
        } else if constexpr (std::is_same_v<T, IntLit>) {
          Json j = node("int_lit", sp);
          j["text"] = n.text;
          return j;
        } else if constexpr (std::is_same_v<T, RealLit>) {
          Json j = node("real_lit", sp);
          j["text"] = n.text;
          return j;
        } else if constexpr (std::is_same_v<T, StringLit>) {
          Json j = node("string_lit", sp);
          j["value"] = n.value;
          j["quote"] = std::string(1, n.quote);
          return j;
        } else if constexpr (std::is_same_v<T, LogicalLit>) {
          Json j = node("logical_lit", sp);
          j["value"] = n.value;
          return j;
        } else if constexpr (std::is_same_v<T, Star>) {
          return node("star", sp);
        } else if constexpr (std::is_same_v<T, Unary>) {
          Json j = node("unary", sp);
          j["op"] = kUnaryOps.name(n.op);
          j["operand"] = to_json(*n.operand);
          return j;
        } else if constexpr (std::is_same_v<T, Binary>) {
          Json j = node("binary", sp);
          j["op"] = kBinaryOps.name(n.op);
          j["lhs"] = to_json(*n.lhs);
          j["rhs"] = to_json(*n.rhs);
          return j;
        } else if constexpr (std::is_same_v<T, Paren>) {
          Json j = node("paren", sp);
          j["inner"] = to_json(*n.inner);
          return j;
        } else if constexpr (std::is_same_v<T, CallOrRef>) {
          Json j = node("call_or_ref", sp);
          j["name"] = n.name;
          j["args"] = list(n.args);
          return j;
        } else if constexpr (std::is_same_v<T, Subscript>) {
          Json j = node("subscript", sp);
          j["base"] = to_json(*n.base);
          j["args"] = list(n.args);
          return j;
        } else if constexpr (std::is_same_v<T, Range>) {
          Json j = node("range", sp);
          j["lower"] = optional_expr(n.lower);
          j["upper"] = optional_expr(n.upper);
          return j;
        } else if constexpr (std::is_same_v<T, NamedArg>) {
          Json j = node("named_arg", sp);
          j["name"] = n.name;
          j["value"] = to_json(*n.value);
          return j;
        } else if constexpr (std::is_same_v<T, EsopeAttributeAccess>) {
          Json j = node("esope_attribute_access", sp);
          j["pointer"] = to_json(*n.pointer);
          j["attribute"] = n.attribute;
          return j;
        } else {
          static_assert(std::is_same_v<T, EsopeDimensionQuery>);
          Json j = node("esope_dimension_query", sp);
          j["target"] = to_json(*n.target);
          j["dim_index"] = n.dim_index;
          return j;
        }
      },
      expr.node);
}

Json to_json(const Statement& stmt) {
  auto head = [&](std::string_view kind) {
    Json j = node(kind, stmt.span);
    j["label"] = stmt.label ? Json(*stmt.label) : Json(nullptr);
    return j;
  };
  return std::visit(
      [&](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TypeDeclaration>) {
          Json j = head("type_declaration");
          j["type"] = type_json(n.type);
          j["entities"] = entities_json(n.entities);
          return j;
        } else if constexpr (std::is_same_v<T, Implicit>) {
          Json j = head("implicit");
          j["rules"] = Json::array();
          for (const ImplicitRule& rule : n.rules) {
            Json r = Json::object();
            r["type"] = type_json(rule.type);
            r["ranges"] = Json::array();
            for (const LetterRange& lr : rule.ranges) {
              Json l = Json::object();
              l["first"] = std::string(1, lr.first);
              l["last"] = std::string(1, lr.last);
              r["ranges"].push_back(std::move(l));
            }
            j["rules"].push_back(std::move(r));
          }
          return j;
        } else if constexpr (std::is_same_v<T, Common>) {
          Json j = head("common");
          j["blocks"] = Json::array();
          for (const CommonBlock& b : n.blocks) {
            Json o = Json::object();
            o["name"] = b.name;
            o["entities"] = entities_json(b.entities);
            j["blocks"].push_back(std::move(o));
          }
          return j;
        } else if constexpr (std::is_same_v<T, Equivalence>) {
          Json j = head("equivalence");
          j["groups"] = Json::array();
          for (const auto& g : n.groups) j["groups"].push_back(list(g));
          return j;
        } else if constexpr (std::is_same_v<T, Parameter>) {
          Json j = head("parameter");
          j["bindings"] = Json::array();
          for (const ParameterBinding& b : n.bindings) {
            Json o = Json::object();
            o["name"] = b.name;
            o["value"] = to_json(b.value);
            j["bindings"].push_back(std::move(o));
          }
          return j;
        } else if constexpr (std::is_same_v<T, Dimension>) {
          Json j = head("dimension");
          j["entities"] = entities_json(n.entities);
          return j;
        } else if constexpr (std::is_same_v<T, Assignment>) {
          Json j = head("assignment");
          j["target"] = to_json(n.target);
          j["value"] = to_json(n.value);
          return j;
        } else if constexpr (std::is_same_v<T, StatementFunctionDef>) {
          Json j = head("statement_function_def");
          j["name"] = n.name;
          j["params"] = list(n.params);
          j["body"] = to_json(n.body);
          return j;
        } else if constexpr (std::is_same_v<T, Call>) {
          Json j = head("call");
          j["name"] = n.name;
          j["args"] = list(n.args);
          j["parens"] = n.parens;
          return j;
        } else if constexpr (std::is_same_v<T, IfLogical>) {
          Json j = head("if_logical");
          j["cond"] = to_json(n.cond);
          j["then"] = to_json(*n.then_stmt);
          return j;
        } else if constexpr (std::is_same_v<T, IfBlock>) {
          Json j = head("if_block");
          j["cond"] = to_json(n.cond);
          j["then_body"] = list(n.then_body);
          j["elseifs"] = Json::array();
          for (const ElseIfBlock& e : n.elseifs) {
            Json o = Json::object();
            o["span"] = to_json(e.span);
            o["cond"] = to_json(e.cond);
            o["body"] = list(e.body);
            j["elseifs"].push_back(std::move(o));
          }
          j["else_body"] = n.else_body ? list(*n.else_body) : Json(nullptr);
          return j;
        } else if constexpr (std::is_same_v<T, Do>) {
          Json j = head("do");
          j["target_label"] =
              n.target_label ? Json(*n.target_label) : Json(nullptr);
          j["var"] = n.var;
          j["from"] = to_json(n.from);
          j["to"] = to_json(n.to);
          j["step"] = n.step ? to_json(*n.step) : Json(nullptr);
          j["body"] = list(n.body);
          return j;
        } else if constexpr (std::is_same_v<T, Goto>) {
          Json j = head("goto");
          j["target"] = n.target;
          return j;
        } else if constexpr (std::is_same_v<T, Continue>) {
          return head("continue");
        } else if constexpr (std::is_same_v<T, Write>) {
          Json j = head("write");
          j["control"] = list(n.control);
          j["items"] = list(n.items);
          return j;
        } else if constexpr (std::is_same_v<T, Read>) {
          Json j = head("read");
          j["control"] = list(n.control);
          j["items"] = list(n.items);
          return j;
        } else if constexpr (std::is_same_v<T, Print>) {
          Json j = head("print");
          j["format"] = to_json(n.format);
          j["items"] = list(n.items);
          return j;
        } else if constexpr (std::is_same_v<T, Return>) {
          return head("return");
        } else if constexpr (std::is_same_v<T, Stop>) {
          Json j = head("stop");
          j["code"] = n.code ? to_json(*n.code) : Json(nullptr);
          return j;
        } else if constexpr (std::is_same_v<T, End>) {
          return head("end");
        } else if constexpr (std::is_same_v<T, Comment>) {
          Json j = head("comment");
          j["text"] = n.text;
          j["annotation"] = n.is_annotation;
          return j;
        } else if constexpr (std::is_same_v<T, Include>) {
          Json j = head("include");
          j["path"] = n.path;
          j["directive"] = n.directive;
          return j;
        } else if constexpr (std::is_same_v<T, Opaque>) {
          Json j = head("opaque");
          j["raw_text"] = n.raw_text;
          return j;
        } else if constexpr (std::is_same_v<T, EsopeSegmentDefinition>) {
          Json j = head("esope_segment_definition");
          j["name"] = n.name;
          j["members"] = list(n.members);
          return j;
        } else if constexpr (std::is_same_v<T, EsopePointerDeclaration>) {
          Json j = head("esope_pointer_declaration");
          j["bindings"] = Json::array();
          for (const PointerBinding& b : n.bindings) {
            Json o = Json::object();
            o["variable"] = b.variable;
            o["segment"] = b.segment;
            j["bindings"].push_back(std::move(o));
          }
          return j;
        } else {
          static_assert(std::is_same_v<T, EsopeSegmentInstruction>);
          Json j = head("esope_segment_instruction");
          j["keyword"] = segment_keyword_name(n.keyword);
          j["pointers"] = n.pointers;
          return j;
        }
      },
      stmt.node);
}

Json to_json(const Ast& ast) {
  Json doc = Json::object();
  doc["schema"] = kSchema;
  doc["units"] = Json::array();
  for (const ProgramUnit& u : ast.units) {
    Json j = node(kUnitKinds.name(u.kind), u.span);
    j["name"] = u.name;
    j["params"] = u.params;
    j["result_type"] = u.result_type ? type_json(*u.result_type) : Json(nullptr);
    j["has_header"] = u.has_header;
    j["leading_comments"] = list(u.leading_comments);
    j["body"] = list(u.body);
    doc["units"].push_back(std::move(j));
  }
  doc["trailing_comments"] = list(ast.trailing_comments);
  return doc;
}

Ast from_json(const Json& doc) {
  Reader r(doc, "$");
  std::string schema = r["schema"].str();
  if (schema != kSchema) r["schema"].fail("unsupported schema '" + schema + "'");
  Ast ast;
  ast.units = r["units"].each([](const Reader& u) { return read_unit(u); });
  ast.trailing_comments = read_statements(r["trailing_comments"]);
  return ast;
}

Statement statement_from_json(const Json& doc) {
  return read_statement(Reader(doc, "$"));
}

Expr expr_from_json(const Json& doc) { return read_expr(Reader(doc, "$")); }

}  // namespace esope::ast_json

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

#include <optional>
#include <utility>

#include "esope/island.h"
#include "esope/text.h"

namespace esope::recovery {

namespace {

using ast::Expr;
using ast::Statement;

[[noreturn]] void malformed(std::string_view original) {
  throw Error(ErrorCode::kMalformedAnnotation,
              "malformed annotation '" + std::string(original) + "'");
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !text::is_letter(s[0])) return false;
  for (char c : s) {
    if (!text::is_ident_char(c)) return false;
  }
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

bool is_marker_head(const std::string& name, std::string_view marker) {
  return text::iequals(name, marker);
}

Expr recover_call(Expr e) {
  auto* call = e.as<ast::CallOrRef>();
  if (call == nullptr) return e;
  if (is_marker_head(call->name, island::kDotFunction)) {
    if (call->args.size() != 2) {
      throw Error(ErrorCode::kBadArity,
                  "D__ takes 2 arguments, found " +
                      std::to_string(call->args.size()),
                  e.span);
    }
    const auto* attr = call->args[1].as<ast::Ident>();
    if (attr == nullptr) {
      throw Error(ErrorCode::kBadArity, "D__ attribute must be a name",
                  call->args[1].span);
    }
    std::string name = attr->name;
    return Expr{ast::EsopeAttributeAccess{std::move(call->args[0]), name},
                e.span};
  }
  if (is_marker_head(call->name, island::kSlashFunction)) {
    if (call->args.size() != 2) {
      throw Error(ErrorCode::kBadArity,
                  "S__ takes 2 arguments, found " +
                      std::to_string(call->args.size()),
                  e.span);
    }
    const auto* index = call->args[1].as<ast::IntLit>();
    if (index == nullptr || index->text.size() > 9 ||
        std::stoi(index->text) < 1) {
      throw Error(ErrorCode::kBadArity,
                  "S__ dimension must be a positive integer literal",
                  call->args[1].span);
    }
    int n = std::stoi(index->text);
    return Expr{ast::EsopeDimensionQuery{std::move(call->args[0]), n}, e.span};
  }
  return e;
}

std::vector<Statement> recover_body(std::vector<Statement> body);

void recover_statement(Statement& s) {
  if (auto* sfd = s.as<ast::StatementFunctionDef>()) {
    if (is_marker_head(sfd->name, island::kDotFunction) ||
        is_marker_head(sfd->name, island::kSlashFunction)) {
      SourceSpan span = s.span;
      if (!sfd->params.empty()) {
        SourceSpan last = sfd->params.back().span;
        span = SourceSpan{s.span.file, s.span.start_line, s.span.start_col,
                          last.end_line, last.end_col + 1};
      }
      Expr target{ast::CallOrRef{sfd->name, std::move(sfd->params)}, span};
      s.node = ast::Assignment{std::move(target), std::move(sfd->body)};
    }
  }
  if (auto* i = s.as<ast::IfLogical>()) {
    recover_statement(*i->then_stmt);
  } else if (auto* b = s.as<ast::IfBlock>()) {
    b->then_body = recover_body(std::move(b->then_body));
    for (auto& e : b->elseifs) e.body = recover_body(std::move(e.body));
    if (b->else_body) b->else_body = recover_body(std::move(*b->else_body));
  } else if (auto* d = s.as<ast::Do>()) {
    d->body = recover_body(std::move(d->body));
  }
  ast::transform_exprs(s, [](Expr& e) { e = recover_call(std::move(e)); });
}

bool allowed_in_segment(const Statement& s) {
  return s.as<ast::TypeDeclaration>() || s.as<ast::Dimension>() ||
         s.as<ast::Comment>() || s.as<ast::EsopePointerDeclaration>();
}

Statement header_statement(const Header& h, const Statement& comment) {
  Statement s{std::nullopt, comment.span, ast::Continue{}};
  if (auto* p = std::get_if<PointerHeader>(&h)) {
    s.node = ast::EsopePointerDeclaration{p->bindings};
  } else if (auto* i = std::get_if<InstructionHeader>(&h)) {
    s.node = ast::EsopeSegmentInstruction{i->keyword, i->pointers};
  }
  return s;
}

std::vector<Statement> recover_body(std::vector<Statement> body) {
  std::vector<Statement> out;
  std::optional<Statement> segment;
  for (Statement& s : body) {
    const auto* c = s.as<ast::Comment>();
    if (c != nullptr && c->is_annotation) {
      Header h;
      try {
        h = parse_annotation(c->text);
      } catch (const Error& e) {
        throw Error(e.code(), e.message(), s.span);
      }
      if (auto* begin = std::get_if<SegBeginHeader>(&h)) {
        if (segment) {
          throw Error(ErrorCode::kUnterminatedSegment,
                      "segment opened before the previous one was closed",
                      segment->span);
        }
        segment = Statement{std::nullopt, s.span,
                            ast::EsopeSegmentDefinition{begin->name, {}}};
      } else if (std::holds_alternative<SegEndHeader>(h)) {
        if (!segment) {
          throw Error(ErrorCode::kDanglingSegEnd,
                      "end segment without an open segment", s.span);
        }
        segment->span = SourceSpan::merge(segment->span, s.span);
        out.push_back(std::move(*segment));
        segment.reset();
      } else if (std::holds_alternative<PointerHeader>(h)) {
        Statement p = header_statement(h, s);
        if (segment) {
          segment->as<ast::EsopeSegmentDefinition>()->members.push_back(
              std::move(p));
        } else {
          out.push_back(std::move(p));
        }
      } else {
        if (segment) {
          throw Error(ErrorCode::kNonDeclarationInSegment,
                      "segment instruction inside a segment definition",
                      s.span);
        }
        out.push_back(header_statement(h, s));
      }
      continue;
    }
    recover_statement(s);
    if (segment) {
      if (!allowed_in_segment(s)) {
        throw Error(ErrorCode::kNonDeclarationInSegment,
                    "only declarations may appear in a segment", s.span);
      }
      segment->as<ast::EsopeSegmentDefinition>()->members.push_back(
          std::move(s));
    } else {
      out.push_back(std::move(s));
    }
  }
  if (segment) {
    throw Error(ErrorCode::kUnterminatedSegment,
                "segment has no end segment", segment->span);
  }
  return out;
}

}  // namespace

Header parse_annotation(std::string_view comment_text) {
  std::string_view t = comment_text;
  if (!t.empty() && text::to_lower(t[0]) == 'c') t.remove_prefix(1);
  if (t.substr(0, 2) != "@_") malformed(comment_text);
  std::string body = text::lower(text::strip_blanks(t.substr(2)));
  std::string_view b = body;

  if (b == "endsegment") return SegEndHeader{};
  if (b.substr(0, 7) == "segment") {
    std::string_view name = b.substr(7);
    if (!name.empty() && name[0] == ',') name.remove_prefix(1);
    if (!is_identifier(name)) malformed(comment_text);
    return SegBeginHeader{std::string(name)};
  }
  if (b.substr(0, 8) == "pointeur") {
    PointerHeader h;
    for (std::string_view pair : split(b.substr(8), ',')) {
      std::size_t dot = pair.find('.');
      if (dot == std::string_view::npos) malformed(comment_text);
      std::string_view var = pair.substr(0, dot);
      std::string_view seg = pair.substr(dot + 1);
      if (!is_identifier(var) || !is_identifier(seg)) malformed(comment_text);
      h.bindings.push_back({std::string(var), std::string(seg)});
    }
    return h;
  }
  for (std::string_view kw : island::kSegmentKeywords) {
    if (b.substr(0, kw.size()) != kw) continue;
    std::string_view rest = b.substr(kw.size());
    if (!rest.empty() && rest[0] == ',') rest.remove_prefix(1);
    InstructionHeader h{*ast::parse_segment_keyword(kw), {}};
    for (std::string_view p : split(rest, ',')) {
      if (!is_identifier(p)) malformed(comment_text);
      h.pointers.emplace_back(p);
    }
    return h;
  }
  malformed(comment_text);
}

ast::Ast recover(ast::Ast ast) {
  for (ast::ProgramUnit& unit : ast.units) {
    unit.leading_comments = recover_body(std::move(unit.leading_comments));
    unit.body = recover_body(std::move(unit.body));
  }
  ast.trailing_comments = recover_body(std::move(ast.trailing_comments));
  return ast;
}

EsopeCounts count_esope(const ast::Ast& ast) {
  EsopeCounts c;
  ast::for_each_statement(ast, [&](const Statement& s) {
    if (s.as<ast::EsopeSegmentDefinition>()) ++c.segments;
    if (s.as<ast::EsopePointerDeclaration>()) ++c.pointers;
    if (s.as<ast::EsopeSegmentInstruction>()) ++c.instructions;
  });
  ast::for_each_expr(ast, [&](const Expr& e) {
    if (e.as<ast::EsopeAttributeAccess>()) ++c.dots;
    if (const auto* q = e.as<ast::EsopeDimensionQuery>()) {
      ++c.slashes;
      if (q->target->as<ast::EsopeAttributeAccess>()) --c.dots;
    }
  });
  return c;
}

EsopeCounts count_esope(const island::RewriteLog& log) {
  using island::Rule;
  EsopeCounts c;
  c.segments = log.count(Rule::kSegBegin);
  c.pointers = log.count(Rule::kPointerDecl);
  c.instructions = log.count(Rule::kSegStatement);
  c.slashes = log.count(Rule::kSlashNotation);
  for (const island::RewriteRecord& d : log.records) {
    if (d.rule != Rule::kDotNotation) continue;
    bool target = false;
    for (const island::RewriteRecord& s : log.records) {
      if (s.rule == Rule::kSlashNotation && s.span.start() == d.span.start() &&
          s.original.size() > d.original.size() &&
          s.original.compare(0, d.original.size(), d.original) == 0 &&
          s.original[d.original.size()] == '(') {
        target = true;
        break;
      }
    }
    if (!target) ++c.dots;
  }
  return c;
}

std::size_t count_residue(const ast::Ast& ast) {
  auto marker = [](const std::string& name) {
    return is_marker_head(name, island::kDotFunction) ||
           is_marker_head(name, island::kSlashFunction);
  };
  std::size_t n = 0;
  ast::for_each_statement(ast, [&](const Statement& s) {
    if (auto* c = s.as<ast::Comment>(); c && c->is_annotation) ++n;
    if (auto* f = s.as<ast::StatementFunctionDef>(); f && marker(f->name)) ++n;
  });
  ast::for_each_expr(ast, [&](const Expr& e) {
    if (auto* call = e.as<ast::CallOrRef>(); call && marker(call->name)) ++n;
  });
  return n;
}

}  // namespace esope::recovery

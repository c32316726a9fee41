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

// JSON form of the AST. See docs/ast-schema.md for the full schema.
//
// Every node is an object whose first two keys are "kind" (lower snake
// case) and "span" ({"file","sl","sc","el","ec"}); statements add "label"
// (integer or null) next. Keys come out in a fixed order, so equal trees
// serialize to identical text.

#ifndef ESOPE_AST_JSON_H_
#define ESOPE_AST_JSON_H_

#include <string_view>

#include <nlohmann/json.hpp>

#include "esope/ast.h"

namespace esope::ast_json {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "esope-bridge-ast/1";

Json to_json(const ast::Ast& ast);
Json to_json(const ast::Statement& stmt);
Json to_json(const ast::Expr& expr);
Json to_json(const SourceSpan& span);

// Throws Error(kSchemaViolation); the message starts with the JSON path of
// the offending value, e.g. "$.units[0].body[2].kind".
ast::Ast from_json(const Json& doc);
ast::Statement statement_from_json(const Json& doc);
ast::Expr expr_from_json(const Json& doc);

}  // namespace esope::ast_json

#endif  // ESOPE_AST_JSON_H_

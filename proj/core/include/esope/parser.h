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

// Parser for annotated fixed-form Fortran-77.
//
// Statements outside the supported subset become ast::Opaque with a
// diagnostic; only broken block structure (an IF or DO left open at END or
// at end of file) is fatal. Statements before any unit header form a
// headless unit: a main program when it ends with END, a fragment (include
// file body) otherwise.

#ifndef ESOPE_PARSER_H_
#define ESOPE_PARSER_H_

#include <string_view>

#include "esope/ast.h"
#include "esope/source.h"

namespace esope::parser {

struct Result {
  ast::Ast ast;
  Diagnostics diagnostics;
};

// Throws Error(kFatalStructure) and Error(kContinuationWithoutInitial).
Result parse_source(std::string_view annotated, FileId file = {});

// One expression on its own; throws Error(kSyntax) on trailing tokens.
ast::Expr parse_expression(std::string_view text);

}  // namespace esope::parser

#endif  // ESOPE_PARSER_H_

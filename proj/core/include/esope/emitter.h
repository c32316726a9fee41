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

// Source regeneration. Output is canonical fixed-form text: uppercase
// keywords, identifiers as stored, `C` comment marker, `&` continuation
// marker, ", " between list items, blanks around dot operators only, two
// blanks of indentation per nesting level, LF line endings. D__ / S__ forms
// are spelled as the rewriter writes them, without blanks.
//
//   emit_esope     Esope nodes come out in Esope syntax (SEGMENT, p.a, ...)
//   emit_fortran   Esope nodes come out in the annotated form that
//                  de-Esopification produces (c@_ comments, D__ / S__)

#ifndef ESOPE_EMITTER_H_
#define ESOPE_EMITTER_H_

#include <string>
#include <vector>

#include "esope/ast.h"

namespace esope::emitter {

enum class Style { kEsope, kFortran };

// Throws Error(kUnsplittableStatement) for a statement that cannot be
// wrapped into fixed-form lines.
std::string emit_esope(const ast::Ast& ast);
std::string emit_fortran(const ast::Ast& ast);

// Building blocks, exposed for tests and tools.
std::string expr_text(const ast::Expr& expr, Style style = Style::kEsope);
// Statement field text of a simple statement, without label or layout.
// Block statements (IF blocks, DO loops, segments) give their first line.
std::string statement_text(const ast::Statement& stmt,
                           Style style = Style::kEsope);
// Complete physical lines for one statement, including nested bodies.
std::vector<std::string> statement_lines(const ast::Statement& stmt,
                                         Style style = Style::kEsope);

}  // namespace esope::emitter

#endif  // ESOPE_EMITTER_H_

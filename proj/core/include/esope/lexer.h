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

// Statement-level lexer for fixed-form Fortran-77.
//
// Blanks outside character literals carry no meaning, so `INTEGEROOI(1)` and
// `INTEGER OOI(1)` must produce the same tokens. The lexer therefore works
// on the blank-free character sequence of one logical statement and only
// recognizes keywords where a statement may start:
//
//   1. A statement shaped like `name [(...)]... = ...` with no comma at
//      paren depth 0 after the `=` is an assignment; no keyword is split.
//   2. The same shape with a depth-0 comma after `=` and a leading `DO` is a
//      DO loop (`DO10I=1,10`).
//   3. Otherwise the longest keyword matching the head is split off, and a
//      few keywords re-enter head mode on their tail (logical IF,
//      IMPLICIT NONE, typed FUNCTION headers).

#ifndef ESOPE_LEXER_H_
#define ESOPE_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "esope/fixedform.h"
#include "esope/source.h"

namespace esope::lexer {

enum class TokenKind {
  kKeyword,        // canonical uppercase lexeme, e.g. "DOUBLEPRECISION"
  kIdentifier,
  kIntLiteral,
  kRealLiteral,
  kStringLiteral,  // lexeme keeps its quotes and escapes
  kLogicalOp,      // .lt. .and. ...
  kLogicalConst,   // .true. .false.
  kPunct,          // ( ) , = :
  kArithOp,        // + - * / ** //
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourceSpan span;

  bool is(TokenKind k, std::string_view text) const;
  bool is_punct(char c) const;
};

struct LexContext {
  // First statement of a program unit: `INTEGER FUNCTION F(X)` is only a
  // function header there.
  bool unit_start = false;
};

// Throws Error(kUnterminatedString) and Error(kIllegalCharacter).
std::vector<Token> lex_statement(const fixedform::LogicalStatement& stmt,
                                 LexContext context = {});

// Convenience for tests and tools: lexes `text` as a one-line statement.
std::vector<Token> lex_text(std::string_view text, LexContext context = {});

}  // namespace esope::lexer

#endif  // ESOPE_LEXER_H_

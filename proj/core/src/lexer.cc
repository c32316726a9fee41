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

#include "esope/lexer.h"

#include <algorithm>
#include <array>
#include <optional>

#include "esope/island.h"
#include "esope/text.h"

namespace esope::lexer {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword:
      return "Keyword";
    case TokenKind::kIdentifier:
      return "Identifier";
    case TokenKind::kIntLiteral:
      return "IntLiteral";
    case TokenKind::kRealLiteral:
      return "RealLiteral";
    case TokenKind::kStringLiteral:
      return "StringLiteral";
    case TokenKind::kLogicalOp:
      return "LogicalOp";
    case TokenKind::kLogicalConst:
      return "LogicalConst";
    case TokenKind::kPunct:
      return "Punct";
    case TokenKind::kArithOp:
      return "ArithOp";
  }
  return "?";
}

bool Token::is(TokenKind k, std::string_view text) const {
  return kind == k && text::iequals(lexeme, text);
}

bool Token::is_punct(char c) const {
  return kind == TokenKind::kPunct && lexeme.size() == 1 && lexeme[0] == c;
}

namespace {

// Longest first.
constexpr std::array kKeywords = std::to_array<std::string_view>({
    "DOUBLEPRECISION", "EQUIVALENCE", "SUBROUTINE", "BACKSPACE", "BLOCKDATA",
    "CHARACTER",       "DIMENSION",   "INTRINSIC",  "PARAMETER", "CONTINUE",
    "EXTERNAL",        "FUNCTION",    "IMPLICIT",   "INCLUDE",   "COMPLEX",
    "ENDFILE",         "INQUIRE",     "INTEGER",    "LOGICAL",   "PROGRAM",
    "COMMON",          "ELSEIF",      "FORMAT",     "RETURN",    "REWIND",
    "CLOSE",           "ENDDO",       "ENDIF",      "ENTRY",     "PAUSE",
    "PRINT",           "WRITE",       "CALL",       "DATA",      "ELSE",
    "GOTO",            "OPEN",        "READ",       "REAL",      "SAVE",
    "STOP",            "END",         "DO",         "IF",
});

constexpr std::array kTypeKeywords = std::to_array<std::string_view>({
    "DOUBLEPRECISION", "CHARACTER", "COMPLEX", "INTEGER", "LOGICAL", "REAL"});

bool is_type_keyword(std::string_view kw) {
  return std::find(kTypeKeywords.begin(), kTypeKeywords.end(), kw) !=
         kTypeKeywords.end();
}

class Lexer {
 public:
  Lexer(const fixedform::LogicalStatement& stmt, LexContext context)
      : stmt_(stmt), context_(context) {
    const std::string& s = stmt.text;
    std::vector<bool> lit = text::literal_mask(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!lit[i] && text::is_blank(s[i])) continue;
      chars_.push_back(s[i]);
      index_.push_back(i);
      literal_.push_back(lit[i]);
    }
  }

  std::vector<Token> run() {
    head(0);
    return std::move(tokens_);
  }

 private:
  std::size_t size() const { return chars_.size(); }
  char at(std::size_t k) const { return k < size() ? chars_[k] : '\0'; }
  std::string_view rest(std::size_t k) const {
    return std::string_view(chars_.data() + k, size() - k);
  }

  SourceSpan span(std::size_t from, std::size_t to) const {
    return stmt_.span_of(index_[from], index_[to - 1]);
  }

  void emit(TokenKind kind, std::size_t from, std::size_t to) {
    tokens_.push_back({kind, std::string(chars_.data() + from, to - from),
                       span(from, to)});
  }

  void emit_keyword(std::string_view kw, std::size_t from) {
    tokens_.push_back(
        {TokenKind::kKeyword, std::string(kw), span(from, from + kw.size())});
  }

  [[noreturn]] void illegal(std::size_t k, const std::string& what) const {
    throw Error(ErrorCode::kIllegalCharacter, what, span(k, k + 1));
  }

  // Index one past the ')' matching the '(' at k; size() if unbalanced.
  std::size_t group_end(std::size_t k) const {
    int depth = 0;
    for (; k < size(); ++k) {
      if (literal_[k]) continue;
      if (chars_[k] == '(') ++depth;
      if (chars_[k] == ')' && --depth == 0) return k + 1;
    }
    return size();
  }

  enum class Shape { kAssignment, kDo, kOther };

  Shape shape(std::size_t k) const {
    if (!text::is_letter(at(k))) return Shape::kOther;
    std::size_t name_start = k;
    while (k < size() && !literal_[k] && text::is_ident_char(chars_[k])) ++k;
    std::size_t name_end = k;
    while (at(k) == '(' && !literal_[k]) k = group_end(k);
    if (at(k) != '=' || k >= size() || literal_[k]) return Shape::kOther;
    int depth = 0;
    for (std::size_t j = k + 1; j < size(); ++j) {
      if (literal_[j]) continue;
      if (chars_[j] == '(') ++depth;
      if (chars_[j] == ')') --depth;
      if (chars_[j] == ',' && depth == 0) {
        bool do_head = name_end - name_start > 2 &&
                       text::istarts_with(rest(name_start), "DO");
        return do_head ? Shape::kDo : Shape::kOther;
      }
    }
    return Shape::kAssignment;
  }

  std::optional<std::string_view> keyword_at(std::size_t k) const {
    for (std::string_view kw : kKeywords) {
      if (k + kw.size() > size()) continue;
      bool hit = true;
      for (std::size_t i = 0; i < kw.size() && hit; ++i) {
        hit = !literal_[k + i] && text::to_upper(chars_[k + i]) == kw[i];
      }
      if (hit) return kw;
    }
    return std::nullopt;
  }

  // A statement head: keyword dispatch per the rules in the header comment.
  void head(std::size_t k) {
    if (k >= size()) return;
    switch (shape(k)) {
      case Shape::kAssignment:
        plain(k);
        return;
      case Shape::kDo:
        emit_keyword("DO", k);
        do_tail(k + 2);
        return;
      case Shape::kOther:
        break;
    }
    std::optional<std::string_view> kw = keyword_at(k);
    if (!kw) {
      plain(k);
      return;
    }
    emit_keyword(*kw, k);
    k += kw->size();

    if (*kw == "IF" || *kw == "ELSEIF") {
      if (at(k) != '(') {
        plain(k);
        return;
      }
      std::size_t close = group_end(k);
      plain(k, close);
      if (text::iequals(rest(close), "THEN")) {
        emit_keyword("THEN", close);
      } else if (*kw == "IF") {
        head(close);
      } else {
        plain(close);
      }
    } else if (*kw == "IMPLICIT") {
      if (text::iequals(rest(k), "NONE")) {
        emit_keyword("NONE", k);
      } else {
        std::optional<std::string_view> type = keyword_at(k);
        if (type && is_type_keyword(*type)) {
          emit_keyword(*type, k);
          k = type_length(k + type->size());
        }
        plain(k);
      }
    } else if (is_type_keyword(*kw)) {
      k = type_length(k);
      if (context_.unit_start && text::istarts_with(rest(k), "FUNCTION") &&
          size() - k > 8) {
        emit_keyword("FUNCTION", k);
        k += 8;
      }
      plain(k);
    } else if (*kw == "DO") {
      do_tail(k);
    } else {
      plain(k);
    }
  }

  // `*8` / `*40` / `*(...)` after a type keyword. Digits only: `REAL*8D1`
  // declares D1, it is not the literal 8D1.
  std::size_t type_length(std::size_t k) {
    if (at(k) != '*' || literal_[k]) return k;
    emit(TokenKind::kArithOp, k, k + 1);
    ++k;
    if (text::is_digit(at(k))) {
      std::size_t start = k;
      while (text::is_digit(at(k))) ++k;
      emit(TokenKind::kIntLiteral, start, k);
    } else if (at(k) == '(') {
      std::size_t close = group_end(k);
      plain(k, close);
      k = close;
    }
    return k;
  }

  // `DO 10 I = ...`: the label is digits only.
  void do_tail(std::size_t k) {
    if (text::is_digit(at(k))) {
      std::size_t start = k;
      while (text::is_digit(at(k))) ++k;
      emit(TokenKind::kIntLiteral, start, k);
    }
    plain(k);
  }

  std::size_t dot_operator(std::size_t k) const {
    std::size_t j = k + 1;
    while (j < size() && !literal_[j] && text::is_letter(chars_[j])) ++j;
    if (j == k + 1 || at(j) != '.') return 0;
    std::string_view word(chars_.data() + k + 1, j - k - 1);
    return island::is_dot_keyword(word) ? j - k + 1 : 0;
  }

  std::size_t number(std::size_t k) {
    std::size_t start = k;
    bool real = false;
    while (text::is_digit(at(k))) ++k;
    if (at(k) == '.' && dot_operator(k) == 0) {
      real = true;
      ++k;
      while (text::is_digit(at(k))) ++k;
    }
    char e = text::to_upper(at(k));
    if (e == 'E' || e == 'D') {
      std::size_t j = k + 1;
      if (at(j) == '+' || at(j) == '-') ++j;
      if (text::is_digit(at(j))) {
        while (text::is_digit(at(j))) ++j;
        k = j;
        real = true;
      }
    }
    emit(real ? TokenKind::kRealLiteral : TokenKind::kIntLiteral, start, k);
    return k;
  }

  std::size_t string_literal(std::size_t k) {
    std::size_t start = k;
    char quote = chars_[k++];
    while (true) {
      if (k >= size() || !literal_[k]) {
        throw Error(ErrorCode::kUnterminatedString,
                    "character literal is not closed", span(start, size()));
      }
      if (chars_[k] == quote) {
        if (at(k + 1) == quote && k + 1 < size() && literal_[k + 1]) {
          k += 2;
          continue;
        }
        ++k;
        break;
      }
      ++k;
    }
    emit(TokenKind::kStringLiteral, start, k);
    return k;
  }

  // Keyword-free lexing of [k, end).
  void plain(std::size_t k, std::size_t end = std::string::npos) {
    end = std::min(end, size());
    while (k < end) {
      char c = chars_[k];
      if (literal_[k]) {
        k = string_literal(k);
      } else if (text::is_letter(c)) {
        std::size_t start = k;
        while (k < end && !literal_[k] && text::is_ident_char(chars_[k])) ++k;
        emit(TokenKind::kIdentifier, start, k);
      } else if (text::is_digit(c)) {
        k = number(k);
      } else if (c == '.') {
        if (std::size_t n = dot_operator(k)) {
          std::string_view word(chars_.data() + k + 1, n - 2);
          bool constant =
              text::iequals(word, "true") || text::iequals(word, "false");
          emit(constant ? TokenKind::kLogicalConst : TokenKind::kLogicalOp, k,
               k + n);
          k += n;
        } else if (text::is_digit(at(k + 1))) {
          k = number(k);
        } else {
          illegal(k, "stray '.'");
        }
      } else if (c == '*' || c == '/') {
        std::size_t n = at(k + 1) == c ? 2 : 1;
        emit(TokenKind::kArithOp, k, k + n);
        k += n;
      } else if (c == '+' || c == '-') {
        emit(TokenKind::kArithOp, k, k + 1);
        ++k;
      } else if (c == '(' || c == ')' || c == ',' || c == '=' || c == ':') {
        emit(TokenKind::kPunct, k, k + 1);
        ++k;
      } else {
        illegal(k, std::string("unexpected character '") + c + "'");
      }
    }
  }

  const fixedform::LogicalStatement& stmt_;
  LexContext context_;
  std::vector<char> chars_;
  std::vector<std::size_t> index_;
  std::vector<bool> literal_;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> lex_statement(const fixedform::LogicalStatement& stmt,
                                 LexContext context) {
  return Lexer(stmt, context).run();
}

std::vector<Token> lex_text(std::string_view text, LexContext context) {
  fixedform::LogicalStatement stmt;
  stmt.text = std::string(text);
  stmt.lines = {1};
  for (std::size_t i = 0; i < text.size(); ++i) {
    stmt.positions.push_back(
        {1, fixedform::kStatementColumn + static_cast<int>(i)});
  }
  if (!text.empty()) stmt.span = stmt.span_of(0, text.size() - 1);
  return lex_statement(stmt, context);
}

}  // namespace esope::lexer

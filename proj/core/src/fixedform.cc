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

#include "esope/fixedform.h"

#include <algorithm>

#include <cstdio>
#include <utility>

#include "esope/text.h"

namespace esope::fixedform {
namespace {

constexpr int kTabStop = 8;

// Tabs are only meaningful while we are still inside the label and
// continuation fields.
std::string expand_leading_tabs(std::string_view raw) {
  std::string out;
  out.reserve(raw.size() + kTabStop);
  std::size_t i = 0;
  for (; i < raw.size() && out.size() < 6; ++i) {
    if (raw[i] == '\t') {
      do {
        out.push_back(' ');
      } while (out.size() % kTabStop != 0);
    } else {
      out.push_back(raw[i]);
    }
  }
  out.append(raw.substr(i));
  return out;
}

bool is_comment_marker(char c) { return c == 'C' || c == 'c' || c == '*'; }

}  // namespace

std::string_view line_kind_name(LineKind kind) {
  switch (kind) {
    case LineKind::kComment:
      return "comment";
    case LineKind::kInitial:
      return "initial";
    case LineKind::kContinuation:
      return "continuation";
    case LineKind::kBlank:
      return "blank";
    case LineKind::kIncludeDirective:
      return "include";
  }
  return "?";
}

std::optional<std::string> include_target(std::string_view raw) {
  std::string_view s = text::trim(raw);
  if (!text::istarts_with(s, "#include")) return std::nullopt;
  s = text::trim(s.substr(8));
  if (s.size() < 2) return std::nullopt;
  char close = s.front() == '"' ? '"' : s.front() == '<' ? '>' : 0;
  if (close == 0) return std::nullopt;
  std::size_t end = s.find(close, 1);
  if (end == std::string_view::npos) return std::nullopt;
  return std::string(s.substr(1, end - 1));
}

PhysicalLine classify_line(std::string_view raw, int line_no, FileId file) {
  PhysicalLine line;
  line.file = file;
  line.line_no = line_no;
  line.raw_text = std::string(raw);

  if (text::istarts_with(text::trim(raw), "#include")) {
    line.kind = LineKind::kIncludeDirective;
    return line;
  }
  if (!raw.empty() && is_comment_marker(raw.front())) {
    line.kind = LineKind::kComment;
    line.comment_marker = raw.front();
    return line;
  }
  if (text::trim(raw).empty()) {
    line.kind = LineKind::kBlank;
    return line;
  }

  std::string expanded = expand_leading_tabs(raw);
  auto column = [&](int col) -> char {
    return static_cast<std::size_t>(col - 1) < expanded.size()
               ? expanded[col - 1]
               : ' ';
  };
  if (expanded.size() >= kStatementColumn) {
    line.statement_text = expanded.substr(kStatementColumn - 1,
                                          kStatementWidth);
  }

  char flag = column(6);
  if (flag != ' ' && flag != '0') {
    line.kind = LineKind::kContinuation;
    return line;
  }

  line.kind = LineKind::kInitial;
  int value = 0;
  bool digits = false;
  bool junk = false;
  for (int col = 1; col <= 5; ++col) {
    char c = column(col);
    if (text::is_digit(c)) {
      value = value * 10 + (c - '0');
      digits = true;
    } else if (c != ' ') {
      junk = true;
    }
  }
  if (junk) {
    line.warning = "unexpected characters in label field";
  } else if (digits && value == 0) {
    line.warning = "label 0 is not a valid statement label";
  } else if (digits) {
    line.label = value;
  }
  return line;
}

std::vector<std::string> split_lines(std::string_view source) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<PhysicalLine> classify_source(std::string_view source,
                                          FileId file) {
  std::vector<PhysicalLine> out;
  int line_no = 0;
  for (const std::string& raw : split_lines(source)) {
    out.push_back(classify_line(raw, ++line_no, file));
  }
  return out;
}

SourceSpan CommentUnit::span() const {
  return {file, line_no, 1, line_no,
          static_cast<int>(text.size()) + 1};
}

SourceSpan IncludeUnit::span() const {
  return {file, line_no, 1, line_no,
          std::max(1, static_cast<int>(raw_text.size()))};
}

SourceSpan LogicalStatement::span_of(std::size_t first,
                                     std::size_t last) const {
  return SourceSpan::between(span.file, positions.at(first),
                             positions.at(last));
}

namespace {

class Assembler {
 public:
  std::vector<Unit> run(std::span<const PhysicalLine> lines) {
    for (const PhysicalLine& line : lines) {
      switch (line.kind) {
        case LineKind::kInitial:
          flush();
          start(line);
          break;
        case LineKind::kContinuation:
          if (!pending_) {
            throw Error(ErrorCode::kContinuationWithoutInitial,
                        "continuation line has no initial line",
                        SourceSpan{line.file, line.line_no, 6, line.line_no,
                                   6});
          }
          append(line);
          // Anything seen between the initial line and this continuation
          // goes out ahead of the statement.
          for (Unit& u : held_) out_.push_back(std::move(u));
          held_.clear();
          break;
        case LineKind::kComment: {
          CommentUnit c{line.file, line.line_no, line.comment_marker,
                        line.raw_text.substr(1)};
          if (pending_) {
            held_.push_back(c);
          } else {
            preceding_.push_back(c);
            out_.push_back(std::move(c));
          }
          break;
        }
        case LineKind::kBlank:
          if (pending_) {
            held_.push_back(BlankUnit{line.file, line.line_no});
          } else {
            preceding_.clear();
            out_.push_back(BlankUnit{line.file, line.line_no});
          }
          break;
        case LineKind::kIncludeDirective:
          flush();
          preceding_.clear();
          out_.push_back(IncludeUnit{line.file, line.line_no,
                                     include_target(line.raw_text)
                                         .value_or(std::string()),
                                     line.raw_text});
          break;
      }
    }
    flush();
    return std::move(out_);
  }

 private:
  void start(const PhysicalLine& line) {
    pending_ = LogicalStatement{};
    pending_->label = line.label;
    pending_->span.file = line.file;
    pending_->attached_comments = std::move(preceding_);
    preceding_.clear();
    append(line);
  }

  void append(const PhysicalLine& line) {
    pending_->lines.push_back(line.line_no);
    for (std::size_t i = 0; i < line.statement_text.size(); ++i) {
      pending_->text.push_back(line.statement_text[i]);
      pending_->positions.push_back(
          {line.line_no, kStatementColumn + static_cast<int>(i)});
    }
  }

  void flush() {
    if (pending_) {
      LogicalStatement& s = *pending_;
      std::size_t first = s.text.find_first_not_of(" \t");
      if (first != std::string::npos) {
        std::size_t last = s.text.find_last_not_of(" \t");
        s.span = s.span_of(first, last);
        out_.push_back(std::move(s));
      }
      pending_.reset();
    }
    for (Unit& u : held_) {
      if (auto* c = std::get_if<CommentUnit>(&u)) preceding_.push_back(*c);
      out_.push_back(std::move(u));
    }
    held_.clear();
  }

  std::vector<Unit> out_;
  std::optional<LogicalStatement> pending_;
  std::vector<Unit> held_;
  std::vector<CommentUnit> preceding_;
};

}  // namespace

std::vector<Unit> assemble(std::span<const PhysicalLine> lines) {
  return Assembler().run(lines);
}

namespace {

bool is_word_char(char c) { return text::is_ident_char(c); }

// Index p means "break before text[p]".
std::size_t choose_break(std::string_view s, const std::vector<bool>& in_lit,
                         std::size_t limit) {
  // Two masked neighbours always belong to the same literal: adjacent
  // literals would read as a doubled-quote escape.
  auto outside = [&](std::size_t p) { return !in_lit[p - 1] || !in_lit[p]; };
  std::size_t fallback = 0;
  for (std::size_t p = std::min(limit, s.size() - 1); p > 0; --p) {
    if (!outside(p)) continue;
    char a = s[p - 1];
    char b = s[p];
    if (a == ',' || text::is_blank(a) || text::is_blank(b)) return p;
    if (fallback == 0 && !(is_word_char(a) && is_word_char(b))) fallback = p;
  }
  return fallback;
}

}  // namespace

std::vector<std::string> render_statement(std::string_view text,
                                          std::optional<int> label,
                                          int indent) {
  indent = std::clamp(indent, 0, kStatementWidth / 2);
  std::string_view rest = text::trim(text);
  std::string first_prefix = "      ";
  if (label) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%5d ", *label);
    first_prefix = buf;
  }

  std::vector<std::string> lines;
  std::string prefix = first_prefix + std::string(indent, ' ');
  int width = kStatementWidth - indent;
  while (rest.size() > static_cast<std::size_t>(width)) {
    std::vector<bool> in_lit = text::literal_mask(rest);
    std::size_t p = choose_break(rest, in_lit, width);
    if (p == 0) {
      throw Error(ErrorCode::kUnsplittableStatement,
                  "no break point outside a character literal in '" +
                      std::string(rest.substr(0, 40)) + "...'");
    }
    lines.push_back(prefix + std::string(text::rtrim(rest.substr(0, p))));
    rest = rest.substr(p);
    while (!rest.empty() && text::is_blank(rest.front())) rest.remove_prefix(1);
    prefix = "     &";
    width = kStatementWidth;
  }
  lines.push_back(prefix + std::string(rest));
  if (rest.empty()) lines.back() = std::string(text::rtrim(lines.back()));
  return lines;
}

}  // namespace esope::fixedform

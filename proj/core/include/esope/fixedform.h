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

// Fixed-column layout of Fortran-77 source: classification of physical lines
// and assembly of logical statements from initial and continuation lines.
//
//   columns 1-5   label (digits), or C / c / * in column 1 for a comment
//   column  6     continuation flag (anything but blank or '0')
//   columns 7-72  statement field
//   columns 73-   ignored

#ifndef ESOPE_FIXEDFORM_H_
#define ESOPE_FIXEDFORM_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "esope/source.h"

namespace esope::fixedform {

inline constexpr int kStatementColumn = 7;
inline constexpr int kLastColumn = 72;
inline constexpr int kStatementWidth = kLastColumn - kStatementColumn + 1;

enum class LineKind { kComment, kInitial, kContinuation, kBlank, kIncludeDirective };

std::string_view line_kind_name(LineKind kind);

struct PhysicalLine {
  FileId file;
  int line_no = 0;
  LineKind kind = LineKind::kBlank;
  char comment_marker = 0;  // set for kComment only
  std::optional<int> label;
  std::string statement_text;  // columns 7-72, tabs in columns 1-6 expanded
  std::string raw_text;
  // Set when columns 1-5 of a non-comment line held something other than
  // digits and blanks.
  std::optional<std::string> warning;
};

// Total: every line classifies. `raw` must not contain a newline.
PhysicalLine classify_line(std::string_view raw, int line_no, FileId file = {});

// Splits on LF (a trailing CR is dropped) and classifies every line.
std::vector<PhysicalLine> classify_source(std::string_view source,
                                          FileId file = {});

// Splits on LF, dropping a trailing CR; a final newline does not produce an
// extra empty line.
std::vector<std::string> split_lines(std::string_view source);

struct CommentUnit {
  FileId file;
  int line_no = 0;
  char marker = 'C';
  std::string text;  // everything after column 1
  SourceSpan span() const;
};

struct BlankUnit {
  FileId file;
  int line_no = 0;
};

struct IncludeUnit {
  FileId file;
  int line_no = 0;
  std::string path;
  std::string raw_text;
  SourceSpan span() const;
};

struct LogicalStatement {
  std::optional<int> label;
  std::string text;
  SourceSpan span;
  std::vector<CommentUnit> attached_comments;
  // Source position of every character of `text`.
  std::vector<SourcePos> positions;
  // Physical lines that contributed, in order.
  std::vector<int> lines;

  // Span of text[first, last], both inclusive.
  SourceSpan span_of(std::size_t first, std::size_t last) const;
};

using Unit = std::variant<LogicalStatement, CommentUnit, BlankUnit, IncludeUnit>;

// Joins continuation lines onto their initial line. Comments and blank lines
// that sit between an initial line and its continuations are emitted before
// the assembled statement. Throws Error(kContinuationWithoutInitial).
std::vector<Unit> assemble(std::span<const PhysicalLine> lines);

// Inverse of assemble for one statement; `indent` blanks go after column 6
// of the first line. Throws Error(kUnsplittableStatement) when no break
// point exists outside character literals.
std::vector<std::string> render_statement(std::string_view text,
                                          std::optional<int> label,
                                          int indent = 0);

// Extracts the path from `#include "x"` / `#include <x>`; nullopt otherwise.
std::optional<std::string> include_target(std::string_view raw);

}  // namespace esope::fixedform

#endif  // ESOPE_FIXEDFORM_H_

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

#ifndef ESOPE_SOURCE_H_
#define ESOPE_SOURCE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace esope {

// Opaque handle naming the file a span points into. The pipeline never
// interprets it; callers map it back to a path.
struct FileId {
  std::uint32_t value = 0;
  friend auto operator<=>(const FileId&, const FileId&) = default;
};

struct SourcePos {
  int line = 0;  // 1-based
  int col = 0;   // 1-based
  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  FileId file;
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;

  SourcePos start() const { return {start_line, start_col}; }
  SourcePos end() const { return {end_line, end_col}; }
  bool empty() const { return start_line == 0; }
  bool contains(const SourceSpan& other) const {
    return start() <= other.start() && other.end() <= end();
  }

  static SourceSpan between(FileId file, SourcePos from, SourcePos to) {
    return {file, from.line, from.col, to.line, to.col};
  }
  // Smallest span covering both; an empty operand is ignored.
  static SourceSpan merge(const SourceSpan& a, const SourceSpan& b);

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string to_string(const SourceSpan& span);

enum class ErrorCode {
  kContinuationWithoutInitial,
  kUnsplittableStatement,
  kUnterminatedSegment,
  kMalformedPointerDecl,
  kMarkerCollision,
  kUnterminatedString,
  kIllegalCharacter,
  kSyntax,
  kFatalStructure,
  kSchemaViolation,
  kMalformedAnnotation,
  kDanglingSegEnd,
  kNonDeclarationInSegment,
  kBadArity,
  kIncludeNotFound,
  kIncludeCycle,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every hard failure in the pipeline is reported through this type. The
// message is human readable; code() is stable and what tests match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<SourceSpan> span = std::nullopt);

  ErrorCode code() const { return code_; }
  // The message without the code name and span decorations of what().
  const std::string& message() const { return message_; }
  const std::optional<SourceSpan>& span() const { return span_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<SourceSpan> span_;
};

// Non-fatal findings (unknown label field, unsupported statement, ...).
struct Diagnostic {
  std::string code;
  std::string message;
  SourceSpan span;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace esope

#endif  // ESOPE_SOURCE_H_

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

#include "esope/source.h"

#include <algorithm>
#include <utility>

namespace esope {

SourceSpan SourceSpan::merge(const SourceSpan& a, const SourceSpan& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  SourcePos from = std::min(a.start(), b.start());
  SourcePos to = std::max(a.end(), b.end());
  return between(a.file, from, to);
}

std::string to_string(const SourceSpan& span) {
  return std::to_string(span.start_line) + ":" +
         std::to_string(span.start_col) + "-" + std::to_string(span.end_line) +
         ":" + std::to_string(span.end_col);
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kContinuationWithoutInitial:
      return "ContinuationWithoutInitial";
    case ErrorCode::kUnsplittableStatement:
      return "UnsplittableStatement";
    case ErrorCode::kUnterminatedSegment:
      return "UnterminatedSegment";
    case ErrorCode::kMalformedPointerDecl:
      return "MalformedPointerDecl";
    case ErrorCode::kMarkerCollision:
      return "MarkerCollision";
    case ErrorCode::kUnterminatedString:
      return "UnterminatedString";
    case ErrorCode::kIllegalCharacter:
      return "IllegalCharacter";
    case ErrorCode::kSyntax:
      return "Syntax";
    case ErrorCode::kFatalStructure:
      return "FatalStructure";
    case ErrorCode::kSchemaViolation:
      return "SchemaViolation";
    case ErrorCode::kMalformedAnnotation:
      return "MalformedAnnotation";
    case ErrorCode::kDanglingSegEnd:
      return "DanglingSegEnd";
    case ErrorCode::kNonDeclarationInSegment:
      return "NonDeclarationInSegment";
    case ErrorCode::kBadArity:
      return "BadArity";
    case ErrorCode::kIncludeNotFound:
      return "IncludeNotFound";
    case ErrorCode::kIncludeCycle:
      return "IncludeCycle";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message,
             std::optional<SourceSpan> span)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message +
                         (span ? " at " + to_string(*span) : std::string())),
      code_(code),
      message_(std::move(message)),
      span_(std::move(span)) {}

}  // namespace esope

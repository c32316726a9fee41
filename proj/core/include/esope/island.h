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

// Island-grammar rewriter. Recognizes the Esope constructs inside otherwise
// plain Fortran-77 text and rewrites them into valid Fortran-77:
//
//   SEGMENT, USER          ->  c@_  segment, user
//   END SEGMENT            ->  c@_  end segment
//   POINTEUR UR.USER       ->  c@_  pointeur ur.user
//   SEGINI, UR             ->  c@_  segini, ur
//   UR.UNAME               ->  D__(UR,UNAME)
//   UR.UBB(/1)             ->  S__(D__(UR,UBB),1)
//
// Everything else (the "water") is copied through untouched.

#ifndef ESOPE_ISLAND_H_
#define ESOPE_ISLAND_H_

#include <string>
#include <string_view>
#include <vector>

#include "esope/source.h"

namespace esope::island {

inline constexpr std::string_view kAnnotationMarker = "c@_";
inline constexpr std::string_view kDotMarker = "D__(";
inline constexpr std::string_view kSlashMarker = "S__(";
inline constexpr std::string_view kDotFunction = "D__";
inline constexpr std::string_view kSlashFunction = "S__";

// The six segment statements.
inline constexpr std::string_view kSegmentKeywords[] = {
    "segini", "segact", "segadj", "segdes", "segprt", "segsup"};

// Words that may appear between two dots without being member access: the
// relational and logical operators plus the two logical constants.
inline constexpr std::string_view kDotKeywords[] = {
    "lt", "le",  "gt", "ge",  "eq",   "ne",  "and",
    "or", "not", "eqv", "neqv", "true", "false"};

bool is_segment_keyword(std::string_view word);
bool is_dot_keyword(std::string_view word);

enum class Rule {
  kSegBegin,
  kSegEnd,
  kPointerDecl,
  kSegStatement,
  kDotNotation,
  kSlashNotation
};

std::string_view rule_name(Rule rule);

struct RewriteRecord {
  Rule rule;
  SourceSpan span;
  std::string original;
  std::string replacement;
};

struct RewriteLog {
  FileId file;
  std::vector<RewriteRecord> records;  // sorted by span start

  std::size_t count(Rule rule) const;
};

struct MarkerCollision {
  SourceSpan span;
  std::string marker;  // canonical spelling: "c@_", "D__(" or "S__("
};

// Case-insensitive search for the three marker strings in raw text.
std::vector<MarkerCollision> scan_markers(std::string_view source,
                                          FileId file = {});

struct Result {
  std::string annotated_source;
  RewriteLog log;
  Diagnostics diagnostics;
};

// Throws Error(kUnterminatedSegment) / Error(kMalformedPointerDecl). Marker
// collisions and unusable slash queries are reported as diagnostics and the
// rewrite proceeds.
Result de_esopify(std::string_view source, FileId file = {});

// Spans of non-comment lines with non-blank text past column 72.
std::vector<SourceSpan> check_line_lengths(std::string_view annotated_source,
                                           FileId file = {});

}  // namespace esope::island

#endif  // ESOPE_ISLAND_H_

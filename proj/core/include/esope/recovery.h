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

// Turns a parsed, de-Esopified tree back into an Esope tree: `c@_`
// annotation comments become segment / pointer / instruction nodes, and the
// D__ / S__ call forms become attribute accesses and dimension queries.

#ifndef ESOPE_RECOVERY_H_
#define ESOPE_RECOVERY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "esope/ast.h"
#include "esope/island.h"

namespace esope::recovery {

struct SegBeginHeader {
  std::string name;
  friend bool operator==(const SegBeginHeader&, const SegBeginHeader&) =
      default;
};
struct SegEndHeader {
  friend bool operator==(const SegEndHeader&, const SegEndHeader&) = default;
};
struct PointerHeader {
  std::vector<ast::PointerBinding> bindings;
  friend bool operator==(const PointerHeader&, const PointerHeader&) = default;
};
struct InstructionHeader {
  ast::SegmentKeyword keyword = ast::SegmentKeyword::kSegini;
  std::vector<std::string> pointers;
  friend bool operator==(const InstructionHeader&, const InstructionHeader&) =
      default;
};

using Header =
    std::variant<SegBeginHeader, SegEndHeader, PointerHeader, InstructionHeader>;

// Accepts the full comment line (`c@_  segini, ur`) or the comment text
// without its column-1 marker (`@_  segini, ur`). Blanks are insignificant.
// Throws Error(kMalformedAnnotation).
Header parse_annotation(std::string_view comment_text);

// Throws Error with kMalformedAnnotation, kDanglingSegEnd,
// kUnterminatedSegment, kNonDeclarationInSegment or kBadArity.
ast::Ast recover(ast::Ast ast);

struct EsopeCounts {
  std::size_t segments = 0;
  std::size_t pointers = 0;      // POINTEUR statements
  std::size_t instructions = 0;
  std::size_t dots = 0;          // not counting the target of a slash query
  std::size_t slashes = 0;
  friend bool operator==(const EsopeCounts&, const EsopeCounts&) = default;
};

EsopeCounts count_esope(const ast::Ast& ast);

// The same counts taken from a rewrite log. Segment definitions are counted
// by their SegBegin records.
EsopeCounts count_esope(const island::RewriteLog& log);

// Annotation comments plus D__ / S__ heads (calls and statement functions)
// left in the tree; zero for a fully recovered tree.
std::size_t count_residue(const ast::Ast& ast);

}  // namespace esope::recovery

#endif  // ESOPE_RECOVERY_H_

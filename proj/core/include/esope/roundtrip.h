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

// Loose round-trip check: expand includes, run the whole pipeline, and
// compare original and regenerated text after normalization.
//
// normalize() applies, in order:
//   1. `*` in column 1 becomes `C`
//   2. a continuation flag in column 6 becomes `&`
//   3. everything is lowercased
//   4. `()` is dropped from parameterless SUBROUTINE declarations
//   5. whitespace is removed outside character literals
//   6. empty lines are dropped

#ifndef ESOPE_ROUNDTRIP_H_
#define ESOPE_ROUNDTRIP_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "esope/pipeline.h"
#include "esope/source.h"

namespace esope::roundtrip {

inline constexpr std::string_view kDiffSchema = "esope-bridge-diff/1";

// Replaces each `#include` line with the named file's text, recursively.
// Relative names are looked up next to `origin` first, then on
// `include_paths` in order. Throws Error(kIncludeNotFound),
// Error(kIncludeCycle) and Error(kIo).
std::string preprocess_includes(
    std::string_view source,
    const std::vector<std::filesystem::path>& include_paths,
    const std::filesystem::path& origin = {});

struct NormalizedLine {
  int line_no = 0;  // 1-based line in the text given to normalize
  std::string text;
};

std::vector<NormalizedLine> normalize_lines(std::string_view source);

// The normalized lines, each followed by LF.
std::string normalize(std::string_view source);

struct Hunk {
  std::size_t normalized_index = 0;  // first differing line of `a`, 0-based
  int original_start = 0;            // 1-based line in `a`
  int regenerated_start = 0;         // 1-based line in `b`
  std::vector<std::string> original_lines;
  std::vector<std::string> regenerated_lines;
};

struct DiffReport {
  std::string original_name;
  std::string regenerated_name;
  std::vector<Hunk> hunks;

  bool equal() const { return hunks.empty(); }
};

// Minimal line diff of the normalized texts; hunks quote the unnormalized
// lines.
DiffReport loose_diff(std::string_view a, std::string_view b,
                      std::string original_name = "original",
                      std::string regenerated_name = "regenerated");

std::string render_unified(const DiffReport& report);
nlohmann::ordered_json to_json(const DiffReport& report);

// preprocess -> de-Esopify -> parse -> recover -> emit, then loose_diff of
// the preprocessed original against the regenerated text. A marker string
// in the preprocessed source is an island-stage error. Throws
// pipeline::StageError.
DiffReport verify(const std::filesystem::path& file,
                  const std::vector<std::filesystem::path>& include_paths);

}  // namespace esope::roundtrip

#endif  // ESOPE_ROUNDTRIP_H_

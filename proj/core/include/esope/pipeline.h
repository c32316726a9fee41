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

// Stage plumbing shared by the round-trip check, the command-line tool and
// the benchmarks.

#ifndef ESOPE_PIPELINE_H_
#define ESOPE_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "esope/ast.h"
#include "esope/island.h"
#include "esope/parser.h"
#include "esope/recovery.h"
#include "esope/source.h"

namespace esope::pipeline {

// Whole file as bytes. Throws Error(kIo).
std::string read_file(const std::filesystem::path& path);

// A pipeline failure tagged with the stage that raised it: "read",
// "preprocess", "island", "parse", "recover" or "emit".
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause);
  const std::string& stage() const { return stage_; }
  // The cause's message, without the stage prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string stage_;
  std::string detail_;
};

// Runs fn, rethrowing any esope::Error as a StageError for `stage`.
template <typename F>
auto staged(const char* stage, F&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e);
  }
}

struct Run {
  island::Result island;
  parser::Result parsed;
  ast::Ast recovered;
};

// de-Esopify, parse and recover one source text. Marker collisions stay
// diagnostics of the island result. Throws StageError.
Run run(std::string_view source, FileId file = {});

// Physical lines holding anything but blanks.
std::size_t count_loc(std::string_view source);

struct FileStats {
  std::size_t loc = 0;
  recovery::EsopeCounts counts;
};

// Table-style construct counts of one file, without include expansion.
FileStats stats(std::string_view source);

}  // namespace esope::pipeline

#endif  // ESOPE_PIPELINE_H_

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

#include "esope/pipeline.h"

#include <fstream>
#include <iterator>
#include <utility>

#include "esope/fixedform.h"
#include "esope/text.h"

namespace esope::pipeline {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "error reading '" + path.string() + "'");
  }
  return data;
}

StageError::StageError(std::string stage, const Error& cause)
    : Error(cause.code(), stage + ": " + cause.message(), cause.span()),
      stage_(std::move(stage)),
      detail_(cause.message()) {}

Run run(std::string_view source, FileId file) {
  Run r;
  r.island = staged("island", [&] { return island::de_esopify(source, file); });
  r.parsed = staged("parse", [&] {
    return parser::parse_source(r.island.annotated_source, file);
  });
  r.recovered =
      staged("recover", [&] { return recovery::recover(r.parsed.ast); });
  return r;
}

std::size_t count_loc(std::string_view source) {
  std::size_t n = 0;
  for (const std::string& line : fixedform::split_lines(source)) {
    if (!text::trim(line).empty()) ++n;
  }
  return n;
}

FileStats stats(std::string_view source) {
  return FileStats{count_loc(source),
                   recovery::count_esope(run(source).recovered)};
}

}  // namespace esope::pipeline

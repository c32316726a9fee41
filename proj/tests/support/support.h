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

#ifndef ESOPE_TESTS_SUPPORT_H_
#define ESOPE_TESTS_SUPPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace support {

std::filesystem::path corpus_dir();
std::filesystem::path data_dir();
std::filesystem::path golden_dir();

std::string slurp(const std::filesystem::path& path);

struct ManifestRow {
  std::string file;
  std::size_t loc = 0;
  std::size_t segment = 0;
  std::size_t pointer = 0;
  std::size_t instr = 0;
  std::size_t dot = 0;
  std::size_t slash = 0;
};

std::vector<ManifestRow> manifest();

// The .E files of the corpus, in manifest order.
std::vector<std::filesystem::path> corpus_sources();
// Every corpus file including struc.inc, in manifest order.
std::vector<std::filesystem::path> corpus_files();

// The first thirteen lines of the two listings used by the fidelity check:
// the Esope source and its de-Esopified form.
extern const char* const kListingEsope;
extern const char* const kListingAnnotated;
// The preprocessed form, whose statements exercise glued keywords.
extern const char* const kListingPreprocessed;

// Creates a fresh empty directory under the system temp dir.
std::filesystem::path make_temp_dir(const std::string& tag);

}  // namespace support

#endif  // ESOPE_TESTS_SUPPORT_H_

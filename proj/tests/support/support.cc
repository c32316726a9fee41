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

#include "support/support.h"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace support {

namespace fs = std::filesystem;

fs::path corpus_dir() { return ESOPE_CORPUS_DIR; }
fs::path data_dir() { return ESOPE_TEST_DATA_DIR; }
fs::path golden_dir() { return ESOPE_GOLDEN_DIR; }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<ManifestRow> manifest() {
  auto doc = nlohmann::json::parse(slurp(corpus_dir() / "manifest.json"));
  std::vector<ManifestRow> rows;
  for (const auto& f : doc.at("files")) {
    rows.push_back({f.at("file").get<std::string>(),
                    f.at("loc").get<std::size_t>(),
                    f.at("segment").get<std::size_t>(),
                    f.at("pointer").get<std::size_t>(),
                    f.at("instr").get<std::size_t>(),
                    f.at("dot").get<std::size_t>(),
                    f.at("slash").get<std::size_t>()});
  }
  return rows;
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const ManifestRow& r : manifest()) out.push_back(corpus_dir() / r.file);
  return out;
}

std::vector<fs::path> corpus_sources() {
  std::vector<fs::path> out;
  for (const fs::path& p : corpus_files()) {
    if (p.extension() == ".E") out.push_back(p);
  }
  return out;
}

fs::path make_temp_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path dir = fs::temp_directory_path() /
                 ("esope-" + tag + "-" + std::to_string(stamp) + "-" +
                  std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

const char* const kListingEsope =
    "      SUBROUTINE NEWUSER(LIB,NAME)\n"
    "      IMPLICIT NONE\n"
    "      INTEGER UBBCNT\n"
    "      SEGMENT, USER\n"
    "       CHARACTER*40 UNAME\n"
    "       INTEGER UBB(UBBCNT)\n"
    "      END SEGMENT\n"
    "      POINTEUR UR.USER\n"
    "C the user does not have a book yet \n"
    "      UBBCNT = 0\n"
    "      SEGINI, UR\n"
    "      UR.UNAME = NAME\n"
    "      WRITE(*,*) UR.UBB(/1)\n";

const char* const kListingAnnotated =
    "      subroutine newuser(lib,name)\n"
    "      implicit none\n"
    "      integer ubbcnt\n"
    "c@_  segment, user\n"
    "       character*40 uname\n"
    "       integer ubb(ubbcnt)\n"
    "c@_  end segment\n"
    "c@_  pointeur ur.user\n"
    "c the user does not have a book yet \n"
    "      ubbcnt = 0\n"
    "c@_  segini, ur\n"
    "      D__(ur,uname) = name\n"
    "      bor = S__(D__(ur,ubb),1)\n";

// Line 8 continues line 7.
const char* const kListingPreprocessed =
    "      SUBROUTINE NEWUSER(LIB,NAME)\n"
    "      IMPLICIT NONE\n"
    "      INTEGER UBBCNT\n"
    "C      segment, user\n"
    "C      POINTEUR UR.USER\n"
    "c the user does not have a book yet\n"
    "      COMMON/OOOCOM/OOT,OOV(2),OO_001,OO_002,OO_003,\n"
    "     &OO_004\n"
    "      INTEGER*8OOW(1)\n"
    "      INTEGEROOV,OOO,OO1,OO2,OO3,OO4,USER,OO5,UR\n"
    "      INTEGEROOI(1)\n"
    "      INTEGER*8OOT\n"
    "      CHARACTER*4OOH(1)\n"
    "      EQUIVALENCE(OOV(1),OOW(1),OOI(1),OOH(1))\n"
    "      INTEGEROO_001(2),OO_002(2),OO_003(2)\n"
    "      CHARACTER*4OO_004(2)\n"
    "      UBBCNT = 0\n"
    "C      SEGINI, UR\n"
    "      CALLOOOWIN(OO4,0,'NEWUSE 10 UR ',OO1,13+UBBCNT)\n"
    "      OO_001(-0002+OOW(OOT+OO1)+1)=40\n"
    "      OO_002(-0004+OOW(OOT+OO1)+2)=13\n"
    "      OO_003(-0006+OOW(OOT+OO1)+3)=UBBCNT\n"
    "      UR=OO1\n"
    "C      UR.UNAME = NAME\n"
    "      OO_004(-0008+OOW(OOT+UR)+1)(OOV(2)+12+1:OOV(2)+12\n"
    "     &+OOV(OOW(OOT+UR)+1))=NAME\n"
    "C      WRITE(*,*) ur.ubb(/1)\n"
    "      WRITE(*,*) OO_005(-0010+OOW(OOT+UR)+5)\n";

}  // namespace support

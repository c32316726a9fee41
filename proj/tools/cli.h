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

#ifndef ESOPE_TOOLS_CLI_H_
#define ESOPE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "esope/island.h"

namespace esope::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kStageFailure = 1;
inline constexpr int kRoundTripDiffers = 2;
inline constexpr int kMarkersFound = 3;
inline constexpr int kUsage = 64;

inline constexpr const char* kIncludePathEnv = "ESOPE_BRIDGE_INCLUDE_PATH";
inline constexpr const char* kRewriteLogSchema = "esope-bridge-rewrite-log/1";
inline constexpr const char* kMarkersSchema = "esope-bridge-markers/1";
inline constexpr const char* kStatsSchema = "esope-bridge-stats/1";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

nlohmann::ordered_json to_json(const island::RewriteLog& log,
                               const std::string& file);

}  // namespace esope::cli

#endif  // ESOPE_TOOLS_CLI_H_

// Copyright 2026 The urgl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace urgl::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,    ///< bad arguments, unreadable or malformed files
  kMathFailure = 2,   ///< search not found, verification failed, inconsistent input
};

/// Runs one command line (args excludes the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Everything except the "header" member, serialized; the part of a report that
/// must be identical across reruns with the same seed.
std::string report_body(const nlohmann::json& report);

}  // namespace urgl::cli

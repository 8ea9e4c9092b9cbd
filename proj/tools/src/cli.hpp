// Copyright 2026 The hwps Authors
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
// Entry point of the hwps command-line tool, kept in a library so tests can
// drive it in-process.

#ifndef HWPS_TOOLS_CLI_HPP
#define HWPS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hwps::cli {

/// Exit codes.
enum Exit : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadInput = 2,
    kDimensionMismatch = 3,
    kConstructionFailed = 4,
};

/// `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hwps::cli

#endif  // HWPS_TOOLS_CLI_HPP

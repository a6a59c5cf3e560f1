// Copyright 2026 The fusionkit Authors
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

#ifndef FUSIONKIT_CLI_HPP
#define FUSIONKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fusionkit::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name, e.g.
/// {"catalog", "--fixture", "z2_on_z4", "--format", "json"}.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace fusionkit::cli

#endif

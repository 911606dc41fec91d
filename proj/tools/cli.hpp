// Copyright 2026 The hiddencorr Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hiddencorr::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kNotPpt = 3,
  kInequalityViolated = 4,
  kInvalidInput = 5,
};

/// Runs one invocation. `args` excludes the program name. Errors are
/// reported as a single line "hiddencorr: <category>: <reason>" on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hiddencorr::cli

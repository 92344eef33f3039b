// Copyright 2026 The swapchain Authors
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

#ifndef SWAPCHAIN_CLI_H
#define SWAPCHAIN_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace swapchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitTooLarge = 3;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` in one write after the command finishes; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace swapchain::cli

#endif

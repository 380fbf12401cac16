// Copyright 2026 The steerlab Authors
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

#ifndef STEERLAB_CLI_H
#define STEERLAB_CLI_H

#include <istream>
#include <optional>
#include <ostream>
#include <string>

namespace steerlab {

/// Process exit codes of the steerlab tool.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kUnphysical = 3;
inline constexpr int kUnwritable = 4;
inline constexpr int kViolations = 5;
}  // namespace exit_code

/// Entry point of the steerlab tool with injectable streams.
///
/// `tol_env` is the raw value of STEERLAB_TOL, if set. It overrides the PSD tolerance.
int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err,
            const std::optional<std::string> &tol_env);

}  // namespace steerlab

#endif

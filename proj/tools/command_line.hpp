// SPDX-License-Identifier: Apache-2.0
//
// jcsl - joint communication, sensing and localization simulation toolkit
// Copyright (C) 2026 The jcsl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcsl::cli {

/// Full command-line entry point:
///   jcsl <experiment> --config <path> [--out <dir>] [--seed <u64>] [--trials <n>]
/// Returns the process exit code (0 ok, 2 usage, 3 input I/O, 4 numeric failure).
/// args excludes the program name.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jcsl::cli

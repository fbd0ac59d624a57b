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

#include <cstdio>
#include <ostream>
#include <string>

namespace jcsl::csv {

/// Fixed numeric format of every emitted CSV: scientific, 9 significant digits.
inline std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

} // namespace jcsl::csv

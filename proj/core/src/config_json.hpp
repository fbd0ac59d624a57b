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

// Internal: JSON conversion of WaveformConfig shared by core.cpp and scenario.cpp.

#include "jcsl/core.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace jcsl::detail {

bool is_waveform_key(std::string_view key);
WaveformConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_as_json(const WaveformConfig& cfg);

} // namespace jcsl::detail

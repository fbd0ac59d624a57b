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

#include <stdexcept>
#include <string>

namespace jcsl {

// Base of every error raised by the library. The subclasses map one-to-one
// onto the command-line exit codes (usage, input I/O, numeric failure).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A configuration or argument violates a documented invariant.
class ConfigError : public Error {
  public:
    using Error::Error;
};

// Mismatched lengths or grid dimensions between arguments.
class DimensionError : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

// Files that cannot be read, written or parsed.
class IoError : public Error {
  public:
    using Error::Error;
};

// Degenerate numeric input: zero energy, division by zero, unresolvable estimate.
class NumericError : public Error {
  public:
    using Error::Error;
};

} // namespace jcsl

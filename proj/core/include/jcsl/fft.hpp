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

#include "jcsl/core.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace jcsl {

enum class FftDirection { Forward, Inverse };

/// Unitary DFT of a fixed size (1/sqrt(n) on both directions), backed by FFTW.
/// Plans are created once per (size, direction) and shared; execution is
/// thread-safe and reentrant.
class Fft {
  public:
    Fft(std::size_t n, FftDirection dir);

    std::size_t size() const { return n_; }

    /// `in` and `out` must both hold size() elements and must not alias.
    void operator()(std::span<const cd> in, std::span<cd> out) const;
    std::vector<cd> operator()(std::span<const cd> in) const;

  private:
    std::size_t n_;
    FftDirection dir_;
    void* plan_;
    double scale_;
};

std::vector<cd> fft(std::span<const cd> in);
std::vector<cd> ifft(std::span<const cd> in);

} // namespace jcsl

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

#include "jcsl/fft.hpp"

#include "jcsl/error.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace jcsl {

namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
class PlanCache {
  public:
    static PlanCache& instance()
    {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(std::size_t n, FftDirection dir)
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, dir);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;

        auto* in = fftw_alloc_complex(n);
        auto* out = fftw_alloc_complex(n);
        const int sign = dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
        // UNALIGNED: callers pass std::vector storage. ESTIMATE keeps plan
        // selection deterministic run to run.
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        if (plan == nullptr) throw NumericError("FFTW failed to create a plan of size " + std::to_string(n));
        plans_.emplace(key, plan);
        return plan;
    }

    ~PlanCache()
    {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, FftDirection>, fftw_plan> plans_;
};

} // namespace

Fft::Fft(std::size_t n, FftDirection dir)
    : n_(n), dir_(dir), plan_(nullptr), scale_(n > 0 ? 1.0 / std::sqrt(static_cast<double>(n)) : 0.0)
{
    if (n == 0) throw DimensionError("FFT size must be positive");
    plan_ = PlanCache::instance().get(n, dir);
}

void Fft::operator()(std::span<const cd> in, std::span<cd> out) const
{
    if (in.size() != n_ || out.size() != n_) throw DimensionError("FFT buffer size mismatch");
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<cd*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(static_cast<fftw_plan>(plan_), src, dst);
    for (auto& v : out) v *= scale_;
}

std::vector<cd> Fft::operator()(std::span<const cd> in) const
{
    std::vector<cd> out(n_);
    (*this)(in, out);
    return out;
}

std::vector<cd> fft(std::span<const cd> in)
{
    return Fft(in.size(), FftDirection::Forward)(in);
}

std::vector<cd> ifft(std::span<const cd> in)
{
    return Fft(in.size(), FftDirection::Inverse)(in);
}

} // namespace jcsl

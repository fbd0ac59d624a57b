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

#include <cstddef>
#include <cstdint>
#include <random>
#include <type_traits>

namespace jcsl {

/// Worker count used when a caller passes threads = 0: $JCSL_THREADS if set,
/// otherwise std::thread::hardware_concurrency().
std::size_t default_thread_count();

/// Independent engine for one work chunk. The stream is a function of
/// (seed, stream, chunk) only, so results do not depend on how chunks are
/// distributed over threads.
std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk);

namespace detail {
void run_chunks_impl(std::size_t n_chunks, std::size_t threads, void (*fn)(void*, std::size_t), void* ctx);
}

/// Calls fn(chunk_index) for every chunk in [0, n_chunks), spread over up to
/// `threads` workers (0 = default_thread_count()). The first exception thrown
/// by any chunk is rethrown on the calling thread.
template <class Fn>
void run_chunks(std::size_t n_chunks, std::size_t threads, Fn&& fn)
{
    detail::run_chunks_impl(
        n_chunks, threads, [](void* ctx, std::size_t i) { (*static_cast<std::remove_reference_t<Fn>*>(ctx))(i); },
        static_cast<void*>(&fn));
}

} // namespace jcsl

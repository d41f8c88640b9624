// Copyright 2026 The capsim Authors
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

// Deterministic chunked parallelism. Work is split into fixed-size chunks
// whose boundaries depend only on the problem size, and partial results are
// combined in chunk order, so results do not depend on the thread count.

#ifndef CAPSIM_PARALLEL_HPP
#define CAPSIM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace capsim {

inline constexpr std::size_t kChunkSize = 2048;

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(begin, end) over [0, n) in chunks and returns the per-chunk
/// results in chunk order. The first exception (lowest chunk) is rethrown.
template <class T, class Body>
std::vector<T> map_chunks(std::size_t n, unsigned threads, Body &&body) {
    const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
    std::vector<T> out(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks) return;
            try {
                out[c] = body(c * kChunkSize, std::min(n, (c + 1) * kChunkSize));
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(chunks, 1));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

/// Calls body(i) for each i in [0, n), in parallel.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body &&body) {
    map_chunks<char>(n, threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) body(i);
        return char{0};
    });
}

}  // namespace capsim

#endif  // CAPSIM_PARALLEL_HPP

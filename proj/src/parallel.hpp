#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace dstrat::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(k) for k in [0, n) from up to `threads` workers pulling chunks of
// `chunk` indices. fn must only touch per-index state.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, std::size_t chunk, Fn&& fn) {
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), (n + chunk - 1) / std::max<std::size_t>(chunk, 1)));
    if (threads <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t start = next.fetch_add(chunk);
            if (start >= n) return;
            const std::size_t stop = std::min(n, start + chunk);
            for (std::size_t k = start; k < stop; ++k) fn(k);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace dstrat::detail

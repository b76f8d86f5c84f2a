#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace foliage {

int default_threads();

// Calls fn(index, worker) for every index in [0, n), spreading indices over `threads` workers.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t k; (k = next.fetch_add(1)) < n;) fn(k, w);
        });
    for (auto& t : pool) t.join();
}

}  // namespace foliage

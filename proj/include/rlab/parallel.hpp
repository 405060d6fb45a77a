#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace rlab {

// Applies fn(i) for i in [0, count) across hardware threads. Each task
// must be independent; results are written into caller-owned slots.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    std::size_t workers = std::min<std::size_t>(
        count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace rlab

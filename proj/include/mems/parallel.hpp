#pragma once

// Tiny parallel-for used by the verification sweeps.  Thread count comes
// from MEMS_THREADS when set, otherwise hardware concurrency.  Work items
// are claimed through an atomic counter; callers write results into
// pre-sized slots so output order stays deterministic.

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mems {

inline std::size_t thread_budget() {
    if (const char* env = std::getenv("MEMS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return std::size_t(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <typename Fn>
inline void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mems

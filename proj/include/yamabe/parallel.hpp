#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace yamabe {

/// Worker cap: YAMABE_THREADS if set (>= 1), else hardware concurrency.
inline int worker_count() {
    static const int cached = [] {
        if (const char* env = std::getenv("YAMABE_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }();
    return cached;
}

/// Runs f(i) for i in [0, n) on up to worker_count() threads, static block
/// partition. Tasks must be independent and write only to their own slots;
/// results are then identical for any thread count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const int workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace yamabe

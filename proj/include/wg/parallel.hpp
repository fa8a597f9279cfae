#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wg {

// Worker count from WG_THREADS; 0 or unset means sequential, the
// deterministic default.
inline int worker_count() {
    const char* env = std::getenv("WG_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n <= 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min<int>(n, static_cast<int>(hw)) : n;
}

// Runs fn(i) for i in [0, n). With more than one worker the iterations are
// claimed from a shared counter, so fn must be pure per index.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = worker_count();
    if (workers <= 1 || n < 2 * workers) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace wg

#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace degseq {

// Runs fn(0..count-1) across `jobs` worker threads, dynamic scheduling.
// Callers keep results per index, so the merge is order-independent and the
// reported outcome does not depend on the thread count.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    int spawn = std::min<int>(jobs, static_cast<int>(count));
    threads.reserve(static_cast<std::size_t>(spawn) - 1);
    for (int t = 1; t < spawn; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
}

} // namespace degseq

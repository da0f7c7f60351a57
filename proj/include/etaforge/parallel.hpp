#pragma once
#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace etaforge {

inline int clamp_jobs(int jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::max(1, std::min(jobs, static_cast<int>(hw)));
}

// run fn(i) for i in [0, count) across jobs threads
template <class Fn>
void parallel_for(long count, int jobs, Fn fn) {
    jobs = clamp_jobs(jobs);
    if (jobs == 1 || count < 2) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next(0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

} // namespace etaforge

#pragma once
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ec {

// Worker count: hardware concurrency capped by EULER_CENSUS_THREADS.
inline unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("EULER_CENSUS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Run fn(i) for i in [0, n_tasks). Tasks are claimed by atomic counter, so
// *which thread* runs a task is nondeterministic, but callers store results
// into task-indexed slots and reduce in index order, which keeps every
// numeric output bit-identical for any worker count.
inline void parallel_for(std::size_t n_tasks, const std::function<void(std::size_t)>& fn,
                         unsigned workers = 0) {
    if (workers == 0) workers = thread_count();
    if (workers > n_tasks) workers = static_cast<unsigned>(n_tasks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n_tasks) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

// Compensated (Kahan) accumulator; merging order is fixed by the caller.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace ec
